#pragma once

#include <cstdint>
#include <vector>

#include "edf/bounds.hpp"
#include "edf/coding.hpp"
#include "edf/nat.hpp"

namespace edf::core {

using bounds::BoundSpec;
using coding::PairCode;

// n lies in the residue class of c: n = sum_i c(i)*2^i (mod 2^|c|).
bool residue_member(const Nat& n, const Bits& c);

// c is good: consecutive 1-positions n0 < n1 satisfy
// residue_member(n1, c restricted to n0+1). Monotone under prefix extension.
bool is_good(const Bits& c);

// A finite approximation (g, c) to a point of prod_n F(n) x 2^N.
struct ConstructionContext {
  BoundSpec spec;
  FinSeq g;
  Bits c;

  ConstructionContext(BoundSpec s, FinSeq g_, Bits c_);
  uint64_t length() const { return g.size(); }
};

// {2 * encode_seq(g restricted to j) : j < |g|, c(j) = 1}, strictly
// increasing (prefix codes strictly increase).
std::vector<Nat> marked_values(const FinSeq& g, const Bits& c);

// marked_values minus every value v < |g| with g(v) = encode_pair(g|v, c|v):
// the subtraction removes marked *values* that the coding map already hits.
std::vector<Nat> marked_set(const ConstructionContext& ctx);

// {2 * encode_seq(g|n) : n < |g|, residue_member(n, c)} below value_bound.
std::vector<Nat> marked_class(const FinSeq& g, const Bits& c,
                              const Nat& value_bound);

// n0 precedes n1: n0 < n1, g(n0) and g(n1) decode to pairs of levels exactly
// n0 and n1, and the decoded components are nested.
bool order_rel(const BoundSpec& spec, const FinSeq& g, uint64_t n0,
               uint64_t n1);

// e(g,c)(n) = encode_pair(g|n, c|n) for n < upto. Appropriateness keeps each
// value below F(n).
FinSeq e_prefix(const ConstructionContext& ctx, uint64_t upto);

// e-hat: copies g(n) when n is an unsubtracted mark, no two marks below n are
// order-related, and c|n is good; otherwise falls back to e(g,c)(n). The
// goodness and order-pair conditions are monotone, so both act as latches.
FinSeq e_hat_prefix(const ConstructionContext& ctx, uint64_t upto);

}  // namespace edf::core
