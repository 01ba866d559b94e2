#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "edf/nat.hpp"

namespace edf::bounds {

// A bound function F : N -> (N \ {0}) u {inf}, given as an explicit finite
// prefix followed by a tail rule. The tail rules are chosen so that
// liminf/lim questions are decidable by inspection.
struct TailRule {
  enum class Kind { Constant, Infinity, Affine, Periodic };

  Kind kind = Kind::Infinity;
  Nat constant_value = 1;     // Constant: F(n) = constant_value
  Nat affine_a = 0, affine_b = 1;  // Affine: F(n) = a*n + b  (n absolute)
  std::vector<ExtNat> pattern;     // Periodic: pattern[(n - prefix_len) mod |pattern|]

  static TailRule constant(Nat k);
  static TailRule infinity();
  static TailRule affine(Nat a, Nat b);
  static TailRule periodic(std::vector<ExtNat> pat);
};

struct BoundSpec {
  std::vector<ExtNat> prefix;
  TailRule tail;

  BoundSpec() = default;
  BoundSpec(std::vector<ExtNat> pfx, TailRule t);  // validates every value >= 1
};

// F(n).
ExtNat eval_bound(const BoundSpec& spec, uint64_t n);

// Growth condition: for each n <= up_to,
//   sum_{l<=n} |prod_{k<l} F(k)| * 2^l  <=  F(n).
// The cumulative sum is the number of (sequence, bit-string) pairs of level
// <= n, so this is exactly "the pair codec fits below F".
struct GrowthReport {
  bool pass = true;
  uint64_t first_fail = 0;  // meaningful iff !pass
  ExtNat lhs;               // cumulative count at first_fail (or at up_to when pass)
  ExtNat rhs;               // F at that index
};
GrowthReport check_growth(const BoundSpec& spec, uint64_t up_to);

enum class Regime {
  LiminfFinite,     // some finite value recurs; liminf F < inf
  LimInfinite,      // F(n) -> inf
  MixedCompactable, // reserved: not produced by the supported tail rules
};

struct RegimeReport {
  Regime regime = Regime::LimInfinite;
  ExtNat liminf = ExtNat::infinity();
  // true iff F(n) < inf for infinitely many n (D = {n : F(n) < inf} infinite)
  bool finite_infinitely_often = false;
};
RegimeReport classify_regime(const BoundSpec& spec);

struct ReindexOptions {
  bool restrict_to_finite = false;  // entries drawn from D, e_0 = min D
  uint64_t scan_bound = 1'000'000;
};

// Reindexing sequence e_0 < e_1 < ... with e_0 = 0 (or min D) and each e_m the
// least index satisfying
//   sum_{l<=m} |prod_{k<l} F(e_k)| * 2^l  <=  F(e_m),
// so that F o e satisfies the growth condition. Requires lim F = inf.
// Throws std::domain_error on a regime violation and ScanBoundExceeded when
// the scan bound is hit before `count` entries are found.
struct ScanBoundExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};
std::vector<uint64_t> reindex_sequence(const BoundSpec& spec, uint64_t count,
                                       const ReindexOptions& opts = {});

// Same sequence, but with every entry <= max_index (possibly empty instead of
// throwing when no further entry exists below the cap).
std::vector<uint64_t> reindex_up_to(const BoundSpec& spec, uint64_t max_index,
                                    const ReindexOptions& opts = {});

// { n <= up_to : F(n) < inf }.
std::vector<uint64_t> finite_support_set(const BoundSpec& spec, uint64_t up_to);

// When liminf F = m is finite, the constant functions c_0, ..., c_{m-1}
// (c_k(n) = k) form a maximal eventually different family: any g agrees with
// some c_k at infinitely many of the positions where F(n) = m. Returns the m
// constant values.
std::vector<Nat> constant_medf(const BoundSpec& spec);

}  // namespace edf::bounds
