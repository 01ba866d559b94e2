#pragma once

#include <cstdint>

#include "edf/bounds.hpp"
#include "edf/nat.hpp"

namespace edf::coding {

using bounds::BoundSpec;

// Bijection N^{<N} -> N: encode(empty) = 0, encode(s + a) = pair(encode(s), a) + 1.
// Guarantees encode(s) >= length(s), which the marked-set search relies on.
Nat encode_seq(const FinSeq& s);
FinSeq decode_seq(Nat code);

// A pair (h, d) with h a value sequence and d a bit string of the same length.
struct PairCode {
  FinSeq h;
  Bits d;

  uint64_t level() const { return h.size(); }
  bool operator==(const PairCode& o) const { return h == o.h && d == o.d; }
  bool operator!=(const PairCode& o) const { return !(*this == o); }
};

// Number of level-l pairs: |prod_{k<l} F(k)| * 2^l.
ExtNat level_count(const BoundSpec& spec, uint64_t l);
// Codes consumed by levels below l: sum_{j<l} level_count(j). Finite only when
// every level below l is finitely counted.
ExtNat level_offset(const BoundSpec& spec, uint64_t l);
// First level with an infinite count (= first infinite index of F, plus one),
// if any level up to `bound` has one.
std::optional<uint64_t> first_infinite_level(const BoundSpec& spec,
                                             uint64_t bound);

bool pair_valid(const BoundSpec& spec, const PairCode& p);

// Level-rank coding: finitely counted levels are enumerated consecutively,
// code = offset(l) + h_lex_rank * 2^l + d_lex_rank (both most-significant
// coordinate first). From the first infinitely counted level onward the
// remaining pairs are dovetailed bijectively onto the codes past all finite
// levels. Throws std::invalid_argument for an invalid pair and
// std::domain_error when the pair's level is finitely counted but the growth
// condition fails at or below it (the code would not stay below F).
Nat encode_pair(const BoundSpec& spec, const PairCode& p);
// Total inverse: decodes every natural.
PairCode decode_pair(const BoundSpec& spec, const Nat& code);

struct AppropriatenessReport {
  bool pass = true;
  uint64_t witness_level = 0;  // meaningful iff !pass
  PairCode witness;
  Nat witness_code;
  ExtNat bound_at_level;
  uint64_t pairs_checked = 0;
};

// Exhaustively encodes every pair of each finitely counted level l <=
// level_bound and checks the code is < F(l). Throws std::length_error when
// more than `budget` pairs would be needed.
AppropriatenessReport verify_appropriate(const BoundSpec& spec,
                                         uint64_t level_bound,
                                         uint64_t budget = 1'000'000);

}  // namespace edf::coding
