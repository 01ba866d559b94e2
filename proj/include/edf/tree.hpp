#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "edf/bounds.hpp"
#include "edf/core.hpp"
#include "edf/nat.hpp"

namespace edf::tree {

using bounds::BoundSpec;

// Node predicate for the decidable tree whose infinite branches are exactly
// the constructed family. f is a node iff f stays inside the product space
// and, for every odd m < |f|, f(m) decodes to a context (g, c) of length m
// that certifies all earlier values: at each n < m the value f(n) must be
// g(n) when the copy conditions hold (c|n good, no order-related pair of
// marks below n, n an unsubtracted mark) and the coded value otherwise.
bool is_tree_node(const BoundSpec& spec, const FinSeq& f);

// One-step extensions f + v with v < min(F(|f|), value_budget) that are
// nodes. An invalid f has no children by convention.
std::vector<FinSeq> children(const BoundSpec& spec, const FinSeq& f,
                             const Nat& value_budget);

// All nodes of the given length, breadth-first. Requires every F(n) below the
// level to be finite unless a value budget caps the branching. Throws
// std::length_error when more than node_budget nodes appear.
std::vector<FinSeq> level_set(const BoundSpec& spec, uint64_t level,
                              std::optional<Nat> value_budget = std::nullopt,
                              uint64_t node_budget = 1'000'000);

// Every initial segment of e_hat(g, c) is a node. This is the soundness half
// of "the family equals the branch set".
bool branch_prefix_check(const BoundSpec& spec, const FinSeq& g,
                         const Bits& c);

}  // namespace edf::tree
