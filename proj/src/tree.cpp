#include "edf/tree.hpp"

#include <algorithm>
#include <stdexcept>

namespace edf::tree {

using bounds::eval_bound;
using coding::PairCode;
using core::ConstructionContext;

namespace {

// Check the constraints that the decoded context p = (g, c) at odd index m
// imposes on the earlier values f(0..m-1).
bool clauses_ok(const BoundSpec& spec, const FinSeq& f, uint64_t m,
                const PairCode& p) {
  if (p.level() != m) return false;
  ConstructionContext ctx(spec, p.h, p.d);
  std::vector<Nat> nu = core::marked_set(ctx);
  FinSeq e = core::e_prefix(ctx, m);

  bool good = true;           // goodness of c|n, latched
  bool ordered_pair = false;  // order-related pair among marks < n, latched
  std::vector<uint64_t> seen;
  size_t next_mark = 0;
  for (uint64_t n = 0; n < m; ++n) {
    if (good) {
      Bits cp(p.d.begin(), p.d.begin() + n);
      good = core::is_good(cp);
    }
    bool in_nu = next_mark < nu.size() && nu[next_mark] == n;
    if (good && !ordered_pair && in_nu) {
      if (f[n] != p.h[n]) return false;
    } else {
      if (f[n] != e[n]) return false;
    }
    if (in_nu) {
      if (!ordered_pair)
        for (uint64_t v : seen)
          if (core::order_rel(spec, p.h, v, n)) {
            ordered_pair = true;
            break;
          }
      seen.push_back(n);
      ++next_mark;
    }
  }
  return true;
}

bool in_product(const BoundSpec& spec, const FinSeq& f) {
  for (size_t n = 0; n < f.size(); ++n) {
    ExtNat fn = eval_bound(spec, n);
    if (fn.is_finite() && f[n] >= fn.value()) return false;
  }
  return true;
}

}  // namespace

bool is_tree_node(const BoundSpec& spec, const FinSeq& f) {
  if (!in_product(spec, f)) return false;
  for (uint64_t m = 1; m < f.size(); m += 2)
    if (!clauses_ok(spec, f, m, coding::decode_pair(spec, f[m])))
      return false;
  return true;
}

std::vector<FinSeq> children(const BoundSpec& spec, const FinSeq& f,
                             const Nat& value_budget) {
  std::vector<FinSeq> out;
  if (!is_tree_node(spec, f)) return out;
  uint64_t m = f.size();
  ExtNat fm = eval_bound(spec, m);
  Nat bound = fm.is_finite() ? std::min(fm.value(), value_budget)
                             : value_budget;
  for (Nat v = 0; v < bound; ++v) {
    if (m % 2 == 1 && !clauses_ok(spec, f, m, coding::decode_pair(spec, v)))
      continue;
    FinSeq child = f;
    child.push_back(v);
    out.push_back(std::move(child));
  }
  return out;
}

std::vector<FinSeq> level_set(const BoundSpec& spec, uint64_t level,
                              std::optional<Nat> value_budget,
                              uint64_t node_budget) {
  std::vector<FinSeq> cur{FinSeq{}};
  for (uint64_t n = 0; n < level; ++n) {
    ExtNat fn = eval_bound(spec, n);
    if (fn.is_inf() && !value_budget)
      throw std::invalid_argument(
          "level enumeration over an infinite coordinate needs a value budget");
    Nat bound = fn.is_inf() ? *value_budget
                            : (value_budget ? std::min(fn.value(), *value_budget)
                                            : fn.value());
    std::vector<FinSeq> next;
    for (const FinSeq& f : cur) {
      for (Nat v = 0; v < bound; ++v) {
        if (n % 2 == 1 && !clauses_ok(spec, f, n, coding::decode_pair(spec, v)))
          continue;
        if (next.size() >= node_budget)
          throw std::length_error("level enumeration node budget exceeded");
        FinSeq child = f;
        child.push_back(v);
        next.push_back(std::move(child));
      }
    }
    cur = std::move(next);
  }
  return cur;
}

bool branch_prefix_check(const BoundSpec& spec, const FinSeq& g,
                         const Bits& c) {
  ConstructionContext ctx(spec, g, c);
  FinSeq eh = core::e_hat_prefix(ctx, g.size());
  for (size_t k = 0; k <= eh.size(); ++k) {
    FinSeq prefix(eh.begin(), eh.begin() + k);
    if (!is_tree_node(spec, prefix)) return false;
  }
  return true;
}

}  // namespace edf::tree
