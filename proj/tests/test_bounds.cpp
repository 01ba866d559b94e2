#include <doctest.h>

#include <stdexcept>

#include "edf/bounds.hpp"
#include "oracles.hpp"

using namespace edf;
using namespace edf::bounds;

namespace {

BoundSpec spec_2_5_45() {
  return BoundSpec({2, 5, 45}, TailRule::infinity());
}
BoundSpec spec_1_3_15() {
  return BoundSpec({1, 3, 15}, TailRule::infinity());
}

}  // namespace

TEST_CASE("eval_bound covers every tail rule") {
  BoundSpec c({7}, TailRule::constant(3));
  CHECK(eval_bound(c, 0) == ExtNat(7));
  CHECK(eval_bound(c, 1) == ExtNat(3));
  CHECK(eval_bound(c, 100) == ExtNat(3));

  BoundSpec inf({}, TailRule::infinity());
  CHECK(eval_bound(inf, 0).is_inf());

  BoundSpec aff({}, TailRule::affine(1, 1));
  CHECK(eval_bound(aff, 0) == ExtNat(1));
  CHECK(eval_bound(aff, 41) == ExtNat(42));

  BoundSpec per({9}, TailRule::periodic({ExtNat(2), ExtNat::infinity()}));
  CHECK(eval_bound(per, 0) == ExtNat(9));
  CHECK(eval_bound(per, 1) == ExtNat(2));
  CHECK(eval_bound(per, 2).is_inf());
  CHECK(eval_bound(per, 3) == ExtNat(2));
}

TEST_CASE("bound values below one are rejected") {
  CHECK_THROWS_AS(BoundSpec({0}, TailRule::infinity()), std::invalid_argument);
  CHECK_THROWS_AS(BoundSpec({}, TailRule::constant(0)), std::invalid_argument);
  CHECK_THROWS_AS(BoundSpec({}, TailRule::affine(1, 0)), std::invalid_argument);
  CHECK_THROWS_AS(BoundSpec({}, TailRule::periodic({})), std::invalid_argument);
}

TEST_CASE("growth condition on the worked examples") {
  auto rep = check_growth(spec_1_3_15(), 2);
  CHECK(rep.pass);
  CHECK(rep.lhs == ExtNat(15));  // 1 + 1*2 + 3*4, with equality at n = 2
  CHECK(rep.rhs == ExtNat(15));

  rep = check_growth(spec_2_5_45(), 6);
  CHECK(rep.pass);

  auto bad = check_growth(BoundSpec({}, TailRule::affine(1, 1)), 5);
  CHECK_FALSE(bad.pass);
  CHECK(bad.first_fail == 1);  // 1 + 1*2 = 3 > F(1) = 2
  CHECK(bad.lhs == ExtNat(3));
  CHECK(bad.rhs == ExtNat(2));

  auto bad2 = check_growth(BoundSpec({1, 2}, TailRule::infinity()), 4);
  CHECK_FALSE(bad2.pass);
  CHECK(bad2.first_fail == 1);
}

TEST_CASE("growth lhs matches the direct re-summation") {
  for (const auto& spec :
       {spec_2_5_45(), spec_1_3_15(),
        BoundSpec({2}, TailRule::periodic({ExtNat(2), ExtNat::infinity()}))}) {
    for (uint64_t n = 0; n <= 6; ++n) {
      auto rep = check_growth(spec, n);
      if (rep.pass) {
        CHECK(rep.lhs == oracles::ref_growth_lhs(spec, n));
      } else {
        CHECK(rep.lhs == oracles::ref_growth_lhs(spec, rep.first_fail));
        CHECK(oracles::ref_growth_lhs(spec, rep.first_fail) >
              eval_bound(spec, rep.first_fail));
      }
    }
  }
}

TEST_CASE("regime classification") {
  auto rep = classify_regime(BoundSpec({}, TailRule::constant(2)));
  CHECK(rep.regime == Regime::LiminfFinite);
  CHECK(rep.liminf == ExtNat(2));
  CHECK(rep.finite_infinitely_often);

  rep = classify_regime(spec_2_5_45());
  CHECK(rep.regime == Regime::LimInfinite);
  CHECK(rep.liminf.is_inf());
  CHECK_FALSE(rep.finite_infinitely_often);

  rep = classify_regime(BoundSpec({}, TailRule::affine(1, 1)));
  CHECK(rep.regime == Regime::LimInfinite);
  CHECK(rep.liminf.is_inf());
  CHECK(rep.finite_infinitely_often);  // every value finite

  rep = classify_regime(
      BoundSpec({}, TailRule::periodic({ExtNat(2), ExtNat::infinity()})));
  CHECK(rep.regime == Regime::LiminfFinite);
  CHECK(rep.liminf == ExtNat(2));

  rep = classify_regime(
      BoundSpec({ExtNat::infinity(), ExtNat::infinity()}, TailRule::affine(1, 1)));
  CHECK(rep.regime == Regime::LimInfinite);
  CHECK(rep.finite_infinitely_often);
}

TEST_CASE("reindexing sequences match the hand computations") {
  CHECK(reindex_sequence(BoundSpec({}, TailRule::affine(1, 1)), 4) ==
        std::vector<uint64_t>{0, 2, 14, 374});
  CHECK(reindex_sequence(spec_2_5_45(), 3) == std::vector<uint64_t>{0, 1, 2});

  ReindexOptions opts;
  opts.restrict_to_finite = true;
  CHECK(reindex_sequence(
            BoundSpec({ExtNat::infinity(), ExtNat::infinity()},
                      TailRule::affine(1, 1)),
            3, opts) == std::vector<uint64_t>{2, 6, 90});
}

TEST_CASE("each reindex entry is minimal and satisfies reindexed growth") {
  BoundSpec spec({}, TailRule::affine(1, 1));
  auto e = reindex_sequence(spec, 4);
  for (size_t m = 0; m < e.size(); ++m) {
    // the defining inequality at e_m, computed directly
    ExtNat lhs = 0;
    for (size_t l = 0; l <= m; ++l) {
      ExtNat prod = 1;
      for (size_t k = 0; k < l; ++k) prod = prod * eval_bound(spec, e[k]);
      lhs = lhs + prod * ExtNat(pow2(l));
    }
    CHECK(lhs <= eval_bound(spec, e[m]));
    // minimality: the inequality fails at every earlier candidate index
    uint64_t from = m == 0 ? 0 : e[m - 1] + 1;
    for (uint64_t n = from; n < e[m]; ++n)
      CHECK(eval_bound(spec, n) < lhs);
  }
}

TEST_CASE("reindex regime and budget failures") {
  CHECK_THROWS_AS(reindex_sequence(BoundSpec({}, TailRule::constant(2)), 2),
                  std::domain_error);
  ReindexOptions tight;
  tight.scan_bound = 10;
  CHECK_THROWS_AS(
      reindex_sequence(BoundSpec({}, TailRule::affine(1, 1)), 4, tight),
      ScanBoundExceeded);
}

TEST_CASE("reindex_up_to stops at the horizon instead of throwing") {
  BoundSpec spec({}, TailRule::affine(1, 1));
  CHECK(reindex_up_to(spec, 20) == std::vector<uint64_t>{0, 2, 14});
  CHECK(reindex_up_to(spec, 1) == std::vector<uint64_t>{0});
  auto full = reindex_up_to(spec, 374);
  CHECK(full == std::vector<uint64_t>{0, 2, 14, 374});
}

TEST_CASE("finite support sets") {
  BoundSpec per({}, TailRule::periodic({ExtNat(2), ExtNat::infinity()}));
  CHECK(finite_support_set(per, 5) == std::vector<uint64_t>{0, 2, 4});
  BoundSpec pc({3}, TailRule::constant(7));
  CHECK(finite_support_set(pc, 2) == std::vector<uint64_t>{0, 1, 2});
  CHECK(finite_support_set(spec_2_5_45(), 10) ==
        std::vector<uint64_t>{0, 1, 2});
}

TEST_CASE("constant family in the finite-liminf regime") {
  auto fam = constant_medf(BoundSpec({}, TailRule::constant(2)));
  REQUIRE(fam.size() == 2);
  CHECK(fam[0] == 0);
  CHECK(fam[1] == 1);
  CHECK_THROWS_AS(constant_medf(spec_2_5_45()), std::domain_error);
}
