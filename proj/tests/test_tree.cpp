#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "edf/oracle.hpp"
#include "edf/tree.hpp"
#include "oracles.hpp"

using namespace edf;
using namespace edf::tree;
using edf::bounds::BoundSpec;
using edf::bounds::TailRule;

namespace {

BoundSpec spec_2_5_45() {
  return BoundSpec({2, 5, 45}, TailRule::infinity());
}
BoundSpec spec_1_3_15() {
  return BoundSpec({1, 3, 15}, TailRule::infinity());
}

std::set<FinSeq> as_set(const std::vector<FinSeq>& v) {
  return std::set<FinSeq>(v.begin(), v.end());
}

}  // namespace

TEST_CASE("level-two node sets match the hand derivations") {
  CHECK(as_set(level_set(spec_2_5_45(), 2)) ==
        std::set<FinSeq>{{0, 1}, {0, 2}, {0, 3}, {1, 4}});
  CHECK(as_set(level_set(spec_1_3_15(), 2)) ==
        std::set<FinSeq>{{0, 1}, {0, 2}});
}

TEST_CASE("even levels extend freely inside the product") {
  // no constraint binds at even indices, so |T_3| = |T_2| * F(2)
  CHECK(level_set(spec_1_3_15(), 3).size() == 30);
  CHECK(level_set(spec_2_5_45(), 3).size() == 4 * 45);
}

TEST_CASE("node predicate is prefix-closed") {
  auto s = spec_2_5_45();
  for (const FinSeq& f : level_set(s, 4, Nat(100))) {
    CHECK(is_tree_node(s, f));
    for (size_t cut = 0; cut <= f.size(); ++cut)
      CHECK(is_tree_node(s, FinSeq(f.begin(), f.begin() + cut)));
  }
}

TEST_CASE("product violations and bad certificates are rejected") {
  auto s = spec_2_5_45();
  CHECK(is_tree_node(s, {}));
  CHECK_FALSE(is_tree_node(s, {2}));       // 2 >= F(0)
  CHECK_FALSE(is_tree_node(s, {0, 0}));    // f(1) = 0 decodes to level 0
  CHECK_FALSE(is_tree_node(s, {1, 1}));    // certificate forces f(0) = 0
  CHECK_FALSE(is_tree_node(s, {0, 4}));    // certificate forces f(0) = 1
  CHECK(is_tree_node(s, {1, 4}));
}

TEST_CASE("children agree with the node predicate") {
  auto s = spec_1_3_15();
  for (const FinSeq& f : level_set(s, 2)) {
    auto kids = children(s, f, Nat(1000));
    for (const FinSeq& k : kids) CHECK(is_tree_node(s, k));
    // none missing:
    Nat bound = bounds::eval_bound(s, f.size()).value();
    uint64_t expect = 0;
    for (Nat v = 0; v < bound; ++v) {
      FinSeq g = f;
      g.push_back(v);
      if (is_tree_node(s, g)) ++expect;
    }
    CHECK(kids.size() == expect);
  }
  CHECK(children(s, {2}, Nat(10)).empty());  // invalid parent
}

TEST_CASE("level enumeration respects budgets") {
  CHECK_THROWS_AS(level_set(spec_2_5_45(), 3, std::nullopt, 10),
                  std::length_error);
  CHECK_THROWS_AS(level_set(BoundSpec({}, TailRule::infinity()), 1),
                  std::invalid_argument);
  // with a value budget the infinite coordinate becomes enumerable
  auto nodes = level_set(BoundSpec({}, TailRule::infinity()), 1, Nat(5));
  CHECK(nodes.size() == 5);
}

TEST_CASE("every constructed member prefix is a node") {
  auto s = spec_2_5_45();
  for (const auto& ctx : oracle::enumerate_contexts(s, 3, 3, 100000))
    CHECK(branch_prefix_check(s, ctx.g, ctx.c));
}

TEST_CASE("nodes at odd levels carry a valid certificate") {
  auto s = spec_2_5_45();
  for (const FinSeq& f : level_set(s, 3, Nat(8))) {
    auto p = coding::decode_pair(s, f[1]);
    CHECK(p.level() == 1);
    CHECK(coding::pair_valid(s, p));
  }
}
