#pragma once

#include <cstdint>
#include <vector>

#include "edf/bounds.hpp"
#include "edf/nat.hpp"

namespace edf::lift {

using bounds::BoundSpec;

// Machinery for lifting the family on the reindexed coordinate set
// E = {e_0 < e_1 < ...} to the full product space.
struct LiftContext {
  BoundSpec spec;
  std::vector<uint64_t> entries;  // every e_k <= horizon
  bool compact_mode = false;
  BoundSpec reindexed;  // F o e as an explicit prefix with an open tail
};

// Computes the reindexing entries up to the horizon (restricted to the
// finite-support set in compact mode) and the reindexed bound F o e.
LiftContext make_lift_context(const BoundSpec& spec, uint64_t horizon,
                              bool compact_mode = false,
                              uint64_t scan_bound = 1'000'000);

// <g(e_0), g(e_1), ...> for the entries below |g|.
FinSeq restrict_to_E(const LiftContext& ctx, const FinSeq& g);

// The lift: value f(k) at n = e_k; elsewhere encode_seq of the E-restriction
// of the longest prefix whose code stays below F(n) (m scanned from n down;
// m = 0 always works since encode_seq(empty) = 0). In compact mode positions
// below e_0 are pinned to 0. f_on_E is indexed by k, must stay inside the
// reindexed product, and must cover every entry below upto; the map is total
// there — only lift_membership ties the image to the family.
FinSeq lift_member_prefix(const LiftContext& ctx, const FinSeq& f_on_E,
                          uint64_t upto);

// Membership of a full-space prefix: the E-restriction of every initial
// segment is a reindexed tree node, and every off-E value obeys the
// maximal-prefix coding rule (0 below e_0 in compact mode).
bool lift_membership(const LiftContext& ctx, const FinSeq& g);

// A sequence of length `horizon` differing from every listed member at every
// n from the first index where F exceeds the member count through the
// horizon (least excluded value at each coordinate). Witnesses that no
// finite family is maximal when F tends to infinity.
FinSeq diagonalize(const BoundSpec& spec, const std::vector<FinSeq>& members,
                   uint64_t horizon);

}  // namespace edf::lift
