#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "edf/bounds.hpp"
#include "edf/core.hpp"
#include "edf/json_io.hpp"
#include "edf/lift.hpp"
#include "edf/nat.hpp"

namespace edf::oracle {

using bounds::BoundSpec;
using core::ConstructionContext;

struct SuiteOptions {
  uint64_t horizon = 3;
  uint64_t budget = 2'000'000;  // max enumerated contexts
  uint64_t samples = 0;         // 0 = exhaustive, else number of sampled pairs
  uint64_t seed = 1;
  uint64_t value_cap = 0;  // per-coordinate value cap (required on infinite F)
  bool compact = false;    // lift suite: compact-mode checks
  uint64_t lift_depth = 3;  // lift suite: member tree depth

  // Injection points so tests can verify each suite actually detects faults
  // in its subject operation. Defaults are the real implementations.
  std::function<std::vector<Nat>(const ConstructionContext&)> marked_set_fn;
  std::function<FinSeq(const ConstructionContext&, uint64_t)> e_hat_fn;
  std::function<bool(const BoundSpec&, const FinSeq&)> tree_node_fn;
  std::function<FinSeq(const lift::LiftContext&, const FinSeq&, uint64_t)>
      lift_fn;
};

struct VerifyReport {
  std::string suite;
  bool pass = true;
  json_io::json counterexample;  // null when passing
  json_io::json extra;           // suite-specific counts
  uint64_t contexts = 0;
  uint64_t pairs = 0;
  uint64_t horizon = 0;
  uint64_t samples = 0;
  uint64_t seed = 0;
  double elapsed_sec = 0.0;
};

// Marked sets of distinct contexts intersect only in marks of the shared
// (g, c) prefix, and distinct good bit sequences share at most one 1-position
// past their divergence.
VerifyReport verify_ad_suite(const BoundSpec& spec,
                             const SuiteOptions& opts = {});

// Agreements of e_hat values for distinct contexts past their divergence fall
// inside the marked sets, and two marked agreements force an order-related
// pair followed by reversion to the coded values.
VerifyReport verify_ed_suite(const BoundSpec& spec,
                             const SuiteOptions& opts = {});

// Every e_hat prefix is a tree node; reports the distinct-prefix count and,
// when the level is finitely branching, the tree level size and the fraction
// of non-family nodes that still extend.
VerifyReport verify_tree_suite(const BoundSpec& spec,
                               const SuiteOptions& opts = {});

// Lifted members round-trip through the membership predicate; off-entry
// agreements between distinct liftees decode to restriction prefixes that
// stop before the divergence; compact mode pins values below e_0 to zero and
// confines off-entry values to the finite predicted code set.
VerifyReport verify_lift_suite(const BoundSpec& spec,
                               const SuiteOptions& opts = {});

json_io::json report_to_json(const VerifyReport& rep,
                             bool include_timings = false);

// Enumeration helpers shared with tests and the acceptance harness.
std::vector<ConstructionContext> enumerate_contexts(const BoundSpec& spec,
                                                    uint64_t horizon,
                                                    uint64_t value_cap,
                                                    uint64_t budget);
std::vector<ConstructionContext> sample_contexts(const BoundSpec& spec,
                                                 uint64_t horizon,
                                                 uint64_t value_cap,
                                                 uint64_t count,
                                                 uint64_t seed);

}  // namespace edf::oracle
