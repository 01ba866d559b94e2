// Acceptance harness: one self-contained check per criterion, one PASS/FAIL
// line each. Run with no argument for all criteria or with a number 1..10.
// Exit status = number of failed criteria.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "edf/bounds.hpp"
#include "edf/coding.hpp"
#include "edf/core.hpp"
#include "edf/json_io.hpp"
#include "edf/lift.hpp"
#include "edf/oracle.hpp"
#include "edf/probe.hpp"
#include "edf/tree.hpp"

using namespace edf;
using bounds::BoundSpec;
using bounds::TailRule;

namespace {

BoundSpec spec_2_5_45() { return BoundSpec({2, 5, 45}, TailRule::infinity()); }
BoundSpec spec_1_3_15() { return BoundSpec({1, 3, 15}, TailRule::infinity()); }
BoundSpec spec_pure_inf() { return BoundSpec({}, TailRule::infinity()); }
BoundSpec spec_n_plus_1() { return BoundSpec({}, TailRule::affine(1, 1)); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

struct Line {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += why;
  }
  void note(const std::string& what) {
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

// 1. Codec round-trips on [2,5,45]+inf and the pure-inf bound, plus
//    appropriateness through every finitely counted level. Under 10 s.
Line criterion1() {
  Line line;
  auto t0 = std::chrono::steady_clock::now();
  uint64_t checked = 0;
  for (const auto& spec : {spec_2_5_45(), spec_pure_inf()}) {
    for (Nat code = 0; code <= 10000; ++code) {
      if (coding::encode_pair(spec, coding::decode_pair(spec, code)) != code) {
        line.fail("pair codec broke at code " + code.str());
        break;
      }
      if (coding::encode_seq(coding::decode_seq(code)) != code) {
        line.fail("sequence codec broke at code " + code.str());
        break;
      }
      ++checked;
    }
    if (!line.pass) break;
  }
  auto rep = coding::verify_appropriate(spec_2_5_45(), 3);
  if (!rep.pass) line.fail("appropriateness failed on [2,5,45]+inf");
  auto rep2 = coding::verify_appropriate(spec_pure_inf(), 3);
  if (!rep2.pass) line.fail("appropriateness failed on the pure-inf bound");
  double dt = seconds_since(t0);
  if (dt >= 10.0) line.fail("exceeded the 10 s budget");
  char buf[128];
  std::snprintf(buf, sizeof buf,
                "%llu codes round-tripped on 2 bounds, %llu pairs coded, %.1fs",
                (unsigned long long)checked,
                (unsigned long long)(rep.pairs_checked + rep2.pairs_checked),
                dt);
  line.note(buf);
  return line;
}

// 2. Growth checks and the reindexing sequence for F(n) = n+1, re-validated
//    by a direct re-summation independent of the library loop.
Line criterion2() {
  Line line;
  if (!bounds::check_growth(spec_1_3_15(), 6).pass)
    line.fail("growth failed on [1,3,15]+inf");
  if (!bounds::check_growth(spec_2_5_45(), 6).pass)
    line.fail("growth failed on [2,5,45]+inf");
  auto bad = bounds::check_growth(spec_n_plus_1(), 6);
  if (bad.pass || bad.first_fail != 1)
    line.fail("F(n)=n+1 must fail the growth condition first at n = 1");

  auto spec = spec_n_plus_1();
  auto entries = bounds::reindex_sequence(spec, 4);
  if (entries != std::vector<uint64_t>{0, 2, 14, 374})
    line.fail("reindexing of F(n)=n+1 differs from (0,2,14,374)");
  // independent re-check: direct sums, direct minimality scan
  for (size_t m = 0; m < entries.size() && line.pass; ++m) {
    ExtNat lhs = 0;
    for (size_t l = 0; l <= m; ++l) {
      ExtNat prod = 1;
      for (size_t k = 0; k < l; ++k)
        prod = prod * bounds::eval_bound(spec, entries[k]);
      lhs = lhs + prod * ExtNat(pow2(l));
    }
    if (!(lhs <= bounds::eval_bound(spec, entries[m])))
      line.fail("reindexed growth sum exceeds the bound");
    for (uint64_t n = m ? entries[m - 1] + 1 : 0; n < entries[m]; ++n)
      if (lhs <= bounds::eval_bound(spec, n)) {
        line.fail("entry " + std::to_string(entries[m]) + " is not minimal");
        break;
      }
  }
  line.note("growth on 3 bounds, 4 entries re-validated");
  return line;
}

// 3. Residue classes: prefix nesting and equal-length partition, exhaustive
//    for lengths <= 8 and n < 2^12; goodness against an independent
//    re-implementation for lengths <= 12.
Line criterion3() {
  Line line;
  uint64_t evals = 0;
  for (uint64_t len = 0; len <= 8 && line.pass; ++len) {
    uint64_t classes = uint64_t(1) << len;
    for (Nat n = 0; n < 4096 && line.pass; ++n) {
      int hits = 0;
      for (uint64_t m = 0; m < classes; ++m) {
        Bits c(len);
        for (uint64_t i = 0; i < len; ++i) c[i] = (m >> i) & 1 ? 1 : 0;
        ++evals;
        if (!core::residue_member(n, c)) continue;
        ++hits;
        for (uint64_t cut = 0; cut < len; ++cut)
          if (!core::residue_member(n, Bits(c.begin(), c.begin() + cut))) {
            line.fail("nesting failed");
            break;
          }
      }
      if (hits != 1) line.fail("partition failed at n = " + n.str());
    }
  }
  // independent goodness: direct scan of consecutive 1-positions with plain
  // machine arithmetic
  auto ref_good = [](const Bits& c) {
    int64_t prev = -1;
    for (size_t i = 0; i < c.size(); ++i) {
      if (!c[i]) continue;
      if (prev >= 0) {
        uint64_t mod = uint64_t(1) << (prev + 1);
        uint64_t target = 0;
        for (int64_t j = 0; j <= prev; ++j)
          if (c[j]) target |= uint64_t(1) << j;
        if (i % mod != target) return false;
      }
      prev = int64_t(i);
    }
    return true;
  };
  uint64_t stems = 0;
  for (uint64_t len = 0; len <= 12 && line.pass; ++len)
    for (uint64_t m = 0; m < (uint64_t(1) << len); ++m) {
      Bits c(len);
      for (uint64_t i = 0; i < len; ++i) c[i] = (m >> i) & 1 ? 1 : 0;
      ++stems;
      if (core::is_good(c) != ref_good(c)) {
        line.fail("goodness mismatch");
        break;
      }
    }
  char buf[96];
  std::snprintf(buf, sizeof buf, "%llu residue evals, %llu goodness stems",
                (unsigned long long)evals, (unsigned long long)stems);
  line.note(buf);
  return line;
}

// 4. Injectivity of the coded member map on [2,5,45]+inf: distinct contexts
//    of equal length <= 3 produce distinct e-values at every coordinate past
//    their divergence. Exhaustive, under 60 s.
Line criterion4() {
  Line line;
  auto t0 = std::chrono::steady_clock::now();
  auto spec = spec_2_5_45();
  uint64_t pairs = 0;
  for (uint64_t len = 1; len <= 3 && line.pass; ++len) {
    auto ctxs = oracle::enumerate_contexts(spec, len, 0, 4000);
    std::vector<FinSeq> codes;
    codes.reserve(ctxs.size());
    for (const auto& ctx : ctxs) codes.push_back(core::e_prefix(ctx, len));
    for (size_t i = 0; i < ctxs.size() && line.pass; ++i)
      for (size_t j = i + 1; j < ctxs.size(); ++j) {
        ++pairs;
        uint64_t d = 0;
        while (ctxs[i].g[d] == ctxs[j].g[d] && ctxs[i].c[d] == ctxs[j].c[d])
          ++d;  // contexts are distinct, so d < len
        bool ok = true;
        for (uint64_t n = d + 1; n < len; ++n)
          ok = ok && codes[i][n] != codes[j][n];
        if (!ok) {
          line.fail("collision past divergence at length " +
                    std::to_string(len));
          break;
        }
      }
  }
  double dt = seconds_since(t0);
  if (dt >= 60.0) line.fail("exceeded the 60 s budget");
  char buf[96];
  std::snprintf(buf, sizeof buf, "%llu context pairs, %.1fs",
                (unsigned long long)pairs, dt);
  line.note(buf);
  return line;
}

// 5. Almost-disjointness suite: exhaustive at [2,5,45]+inf horizon 3 and a
//    1000-pair fixed-seed sampled run on the pure-inf bound at horizon 12.
Line criterion5() {
  Line line;
  oracle::SuiteOptions ex;
  ex.horizon = 3;
  ex.budget = 4000;
  auto rep = oracle::verify_ad_suite(spec_2_5_45(), ex);
  if (!rep.pass) line.fail("exhaustive run found a counterexample");
  oracle::SuiteOptions rnd;
  rnd.horizon = 12;
  rnd.samples = 1000;
  rnd.seed = 1;
  rnd.value_cap = 65536;
  auto rep2 = oracle::verify_ad_suite(spec_pure_inf(), rnd);
  if (!rep2.pass) line.fail("sampled run found a counterexample");
  char buf[96];
  std::snprintf(buf, sizeof buf, "%llu exhaustive + %llu sampled pairs",
                (unsigned long long)rep.pairs, (unsigned long long)rep2.pairs);
  line.note(buf);
  return line;
}

// 6. Eventual-difference suite at the same two scales, structural sub-check
//    (two marked agreements force an ordered pair, then reversion) included.
Line criterion6() {
  Line line;
  oracle::SuiteOptions ex;
  ex.horizon = 3;
  ex.budget = 4000;
  auto rep = oracle::verify_ed_suite(spec_2_5_45(), ex);
  if (!rep.pass) line.fail("exhaustive run found a counterexample");
  oracle::SuiteOptions rnd;
  rnd.horizon = 12;
  rnd.samples = 1000;
  rnd.seed = 1;
  rnd.value_cap = 65536;
  auto rep2 = oracle::verify_ed_suite(spec_pure_inf(), rnd);
  if (!rep2.pass) line.fail("sampled run found a counterexample");
  char buf[96];
  std::snprintf(buf, sizeof buf, "%llu exhaustive + %llu sampled pairs",
                (unsigned long long)rep.pairs, (unsigned long long)rep2.pairs);
  line.note(buf);
  return line;
}

// 7. Tree soundness: every constructed prefix is a node (exhaustive at
//    [1,3,15]+inf length 3 and [2,5,45]+inf length 2), and the family
//    reaches at least two distinct prefixes at length 2.
Line criterion7() {
  Line line;
  oracle::SuiteOptions a;
  a.horizon = 3;
  auto rep = oracle::verify_tree_suite(spec_1_3_15(), a);
  if (!rep.pass) line.fail("containment failed on [1,3,15]+inf");
  oracle::SuiteOptions b;
  b.horizon = 2;
  auto rep2 = oracle::verify_tree_suite(spec_2_5_45(), b);
  if (!rep2.pass) line.fail("containment failed on [2,5,45]+inf");
  uint64_t prefixes = rep2.extra.at("family_prefix_count").get<uint64_t>();
  if (prefixes < 2) line.fail("fewer than 2 distinct branch prefixes");
  char buf[96];
  std::snprintf(buf, sizeof buf,
                "%llu + %llu contexts contained, %llu distinct prefixes",
                (unsigned long long)rep.contexts,
                (unsigned long long)rep2.contexts,
                (unsigned long long)prefixes);
  line.note(buf);
  return line;
}

// 8. Lift: suite at F(n) = n+1, horizon 16, members from the depth-3
//    reindexed tree; the two hand-computed off-entry values; compact mode.
Line criterion8() {
  Line line;
  oracle::SuiteOptions opts;
  opts.horizon = 16;
  opts.lift_depth = 3;
  auto rep = oracle::verify_lift_suite(spec_n_plus_1(), opts);
  if (!rep.pass) line.fail("lift suite failed at F(n)=n+1");

  auto ctx = lift::make_lift_context(spec_n_plus_1(), 16);
  FinSeq lifted = lift::lift_member_prefix(ctx, {0, 0, 0}, 16);
  if (lifted[1] != 1) line.fail("expected lifted value 1 at position 1");
  if (lifted[3] != 2) line.fail("expected lifted value 2 at position 3");

  oracle::SuiteOptions copts;
  copts.horizon = 12;
  copts.lift_depth = 2;
  copts.compact = true;
  auto crep = oracle::verify_lift_suite(
      BoundSpec({ExtNat::infinity(), ExtNat::infinity()}, TailRule::affine(1, 1)),
      copts);
  if (!crep.pass) line.fail("compact lift suite failed");
  char buf[96];
  std::snprintf(buf, sizeof buf, "%llu + %llu lifted members checked",
                (unsigned long long)rep.extra.at("members").get<uint64_t>(),
                (unsigned long long)crep.extra.at("members").get<uint64_t>());
  line.note(buf);
  return line;
}

// 9. Probe: planted family prefixes at horizon 20 are recovered with full
//    agreement; 100 random targets (fixed seed) must reach 5 agreements in
//    at least 95 runs.
Line criterion9() {
  Line line;
  auto spec = spec_2_5_45();
  const uint64_t horizon = 20;

  uint64_t planted_ok = 0, planted_total = 0;
  for (const auto& ctx : oracle::sample_contexts(spec, horizon, 30, 60, 2025)) {
    FinSeq member = core::e_hat_prefix(ctx, horizon);
    ++planted_total;
    auto res = probe::match_finder(spec, member, 10);
    if (!res) continue;
    bool self = res->via == probe::MatchResult::Via::SelfMatch &&
                res->agreement_positions.size() == horizon;
    if (self || res->agreement_positions.size() >= 10) ++planted_ok;
  }
  if (planted_ok != planted_total) line.fail("a planted member went unmatched");

  uint64_t random_ok = 0, random_total = 0;
  for (const auto& ctx : oracle::sample_contexts(spec, horizon, 50, 100, 77)) {
    ++random_total;
    auto res = probe::match_finder(spec, ctx.g, 5);
    if (res && res->agreement_positions.size() >= 5) ++random_ok;
  }
  if (random_ok * 100 < random_total * 95)
    line.fail("random-target success rate below 95%");
  char buf[128];
  std::snprintf(buf, sizeof buf,
                "planted %llu/%llu recovered; random %llu/%llu reached 5 "
                "agreements (need >= 95)",
                (unsigned long long)planted_ok,
                (unsigned long long)planted_total,
                (unsigned long long)random_ok,
                (unsigned long long)random_total);
  line.note(buf);
  return line;
}

// 10. Scope statement: what desk-scale checks do and do not establish.
Line criterion10() {
  Line line;
  line.note(
      "maximality of the infinite family and perfectness of the branch set "
      "are infinitary claims, not decidable from any finite run; they are "
      "covered here only by the surrogate checks of criteria 7 and 9");
  return line;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  if (argc > 1) {
    only = std::atoi(argv[1]);
    if (only < 1 || only > 10) {
      std::fprintf(stderr, "usage: %s [criterion 1..10]\n", argv[0]);
      return 64;
    }
  }
  Line (*checks[])() = {criterion1, criterion2, criterion3, criterion4,
                        criterion5, criterion6, criterion7, criterion8,
                        criterion9, criterion10};
  int failures = 0;
  for (int k = 1; k <= 10; ++k) {
    if (only && k != only) continue;
    Line line = checks[k - 1]();
    std::printf("criterion %d: %s — %s\n", k, line.pass ? "PASS" : "FAIL",
                line.detail.c_str());
    std::fflush(stdout);
    if (!line.pass) ++failures;
  }
  return failures;
}
