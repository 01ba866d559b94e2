#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "edf/bounds.hpp"
#include "edf/nat.hpp"

namespace edf::probe {

using bounds::BoundSpec;

// Case 1: search for a stem c (binary, ending in 1, or empty) such that every
// usable element n0 of the marked class of (g, c) below |g| satisfies the
// two-part body: g(n0) differs from the coded value under the one-step
// extension c1 = c + 0...0 + 1 of length n0+1, and some n1 in the marked
// class of (g, c1) lies above n0 in the order. The second part is verified
// against elements below |g| only, so each element ends up refuted (first
// part fails), verified (both parts hold), or at the boundary (first part
// holds, no witness below the horizon). A stem succeeds when its usable
// class is nonempty and nothing is refuted.
struct Case1Result {
  bool success = false;
  Bits stem;
  std::vector<uint64_t> chain;  // order-increasing class elements, from min
  FinSeq h;                     // recovered member data, zero-padded to |g|
  Bits d;
  uint64_t stems_tried = 0;
  uint64_t refuted = 0, verified = 0, boundary = 0, skipped = 0;
};
Case1Result case1_search(const BoundSpec& spec, const FinSeq& g,
                         uint64_t max_stem);

enum class Strategy { Literal, Direct };

// Case 2: greedily grow c by choosing at each step the least admissible
// index n_k at or past the current length — drawn from the marked class of
// (g, c_k) under Literal, from the residue class of c_k under Direct — that
// satisfies the disjunction: g(n_k) equals the coded value under the
// extension c_{k+1}, or no marked-class element of c_{k+1} below |g| lies
// above n_k in the order. Extends until no candidate remains below |g|.
struct Case2Result {
  Bits c;  // grown stem, length <= |g| (padded by the caller as needed)
  bool good = false;
  uint64_t agreements = 0;  // positions where e_hat(g, c padded) equals g
  std::vector<uint64_t> picks;
  std::vector<uint8_t> via_first_disjunct;  // per pick
  bool stopped_early = false;               // no candidate before the horizon
};
Case2Result case2_greedy(const BoundSpec& spec, const FinSeq& g,
                         Strategy strategy);

// Maximality probe: try self-match (every prefix of g is a tree node), then
// Case 1 (member e_hat(h, d) from the recovered data), then Case 2 (member
// e_hat(g, c)). Returns the first member agreeing with g at min_agreements
// positions or more.
struct MatchResult {
  enum class Via { SelfMatch, Case1, Case2 };
  Via via = Via::SelfMatch;
  FinSeq member;
  std::vector<uint64_t> agreement_positions;
};
std::optional<MatchResult> match_finder(const BoundSpec& spec, const FinSeq& g,
                                        uint64_t min_agreements,
                                        Strategy strategy = Strategy::Direct,
                                        uint64_t max_stem = 6);

// When liminf F = m is finite, no eventually different family of size m+1
// exists over coordinates where F attains m: among m+1 functions into m
// values, two agree at each such coordinate, so some pair agrees infinitely
// often. Returns m+1, or nothing when F tends to infinity.
std::optional<Nat> pigeonhole_bound(const BoundSpec& spec);

}  // namespace edf::probe
