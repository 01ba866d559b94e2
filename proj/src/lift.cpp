#include "edf/lift.hpp"

#include <algorithm>
#include <stdexcept>

#include "edf/coding.hpp"
#include "edf/tree.hpp"

namespace edf::lift {

using bounds::eval_bound;
using coding::encode_seq;

LiftContext make_lift_context(const BoundSpec& spec, uint64_t horizon,
                              bool compact_mode, uint64_t scan_bound) {
  LiftContext ctx;
  ctx.spec = spec;
  ctx.compact_mode = compact_mode;
  bounds::ReindexOptions opts;
  opts.restrict_to_finite = compact_mode;
  opts.scan_bound = scan_bound;
  ctx.entries = bounds::reindex_up_to(spec, horizon, opts);

  // F o e. Only levels below the entry count are ever touched; the open tail
  // keeps the reindexed growth condition (which holds by choice of e) intact.
  std::vector<ExtNat> prefix;
  for (uint64_t ek : ctx.entries) prefix.push_back(eval_bound(spec, ek));
  ctx.reindexed = BoundSpec(std::move(prefix), bounds::TailRule::infinity());
  return ctx;
}

FinSeq restrict_to_E(const LiftContext& ctx, const FinSeq& g) {
  FinSeq out;
  for (uint64_t ek : ctx.entries) {
    if (ek >= g.size()) break;
    out.push_back(g[ek]);
  }
  return out;
}

namespace {

// Codes of the restriction prefixes: codes[j] = encode_seq(first j values).
std::vector<Nat> restriction_codes(const FinSeq& f_on_E, size_t upto_len) {
  std::vector<Nat> codes{Nat(0)};
  for (size_t j = 0; j < upto_len; ++j)
    codes.push_back(pair(codes.back(), f_on_E[j]) + 1);
  return codes;
}

// Value at an off-E position n: the code of the longest restriction prefix
// of f|m (m <= n) that stays below F(n). Scanning m downward is the same as
// scanning the restriction length downward, since the code grows with the
// prefix and every length <= L(n) is realized by some m <= n.
Nat off_entry_value(const LiftContext& ctx, const std::vector<Nat>& codes,
                    uint64_t n) {
  size_t len_at_n = 0;
  while (len_at_n < ctx.entries.size() && ctx.entries[len_at_n] < n)
    ++len_at_n;
  len_at_n = std::min(len_at_n, codes.size() - 1);
  ExtNat fn = eval_bound(ctx.spec, n);
  for (size_t j = len_at_n;; --j) {
    if (ExtNat(codes[j]) < fn) return codes[j];
    if (j == 0) break;
  }
  return 0;  // unreachable: encode_seq(empty) = 0 < F(n)
}

}  // namespace

FinSeq lift_member_prefix(const LiftContext& ctx, const FinSeq& f_on_E,
                          uint64_t upto) {
  size_t needed = 0;
  while (needed < ctx.entries.size() && ctx.entries[needed] < upto) ++needed;
  if (f_on_E.size() < needed)
    throw std::invalid_argument("f does not cover the entries below upto");
  if (f_on_E.size() > ctx.entries.size())
    throw std::invalid_argument("f extends past the computed entries");
  // The map itself is total on the reindexed product; only membership of the
  // lifted function (lift_membership) requires f to come from the family.
  for (size_t k = 0; k < f_on_E.size(); ++k)
    if (!(ExtNat(f_on_E[k]) < eval_bound(ctx.reindexed, k)))
      throw std::invalid_argument("f leaves the reindexed product");

  std::vector<Nat> codes = restriction_codes(f_on_E, f_on_E.size());
  FinSeq out;
  out.reserve(upto);
  size_t k = 0;  // next entry index
  for (uint64_t n = 0; n < upto; ++n) {
    if (k < ctx.entries.size() && ctx.entries[k] == n) {
      out.push_back(f_on_E[k]);
      ++k;
    } else if (ctx.compact_mode &&
               (ctx.entries.empty() || n < ctx.entries[0])) {
      out.push_back(0);
    } else {
      out.push_back(off_entry_value(ctx, codes, n));
    }
  }
  return out;
}

bool lift_membership(const LiftContext& ctx, const FinSeq& g) {
  FinSeq r = restrict_to_E(ctx, g);
  for (size_t k = 0; k <= r.size(); ++k) {
    FinSeq prefix(r.begin(), r.begin() + k);
    if (!tree::is_tree_node(ctx.reindexed, prefix)) return false;
  }

  std::vector<Nat> codes = restriction_codes(r, r.size());
  size_t k = 0;
  for (uint64_t n = 0; n < g.size(); ++n) {
    if (k < ctx.entries.size() && ctx.entries[k] == n) {
      ++k;
      continue;
    }
    Nat expected =
        ctx.compact_mode && (ctx.entries.empty() || n < ctx.entries[0])
            ? Nat(0)
            : off_entry_value(ctx, codes, n);
    if (g[n] != expected) return false;
  }
  return true;
}

FinSeq diagonalize(const BoundSpec& spec, const std::vector<FinSeq>& members,
                   uint64_t horizon) {
  FinSeq out(horizon, Nat(0));
  if (members.empty() || horizon == 0) return out;

  bounds::RegimeReport reg = bounds::classify_regime(spec);
  if (reg.regime != bounds::Regime::LimInfinite)
    throw std::domain_error("diagonalization requires lim F = inf");

  // First index from which F stays above the member count.
  ExtNat count(members.size());
  uint64_t n0 = horizon;
  for (uint64_t n = horizon; n-- > 0;) {
    if (!(count < eval_bound(spec, n))) break;
    n0 = n;
  }
  if (n0 == horizon)
    throw std::invalid_argument("horizon too small to clear the member count");

  for (uint64_t n = n0; n < horizon; ++n) {
    // least value unused by any member at n
    std::vector<Nat> used;
    for (const FinSeq& m : members)
      if (n < m.size()) used.push_back(m[n]);
    std::sort(used.begin(), used.end());
    Nat v = 0;
    for (const Nat& u : used) {
      if (u == v) ++v;
      else if (u > v) break;
    }
    out[n] = v;
  }
  return out;
}

}  // namespace edf::lift
