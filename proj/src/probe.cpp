#include "edf/probe.hpp"

#include <algorithm>

#include "edf/coding.hpp"
#include "edf/core.hpp"
#include "edf/tree.hpp"

namespace edf::probe {

using coding::encode_pair;
using core::marked_class;
using core::order_rel;

namespace {

Bits extend_stem(const Bits& c, uint64_t n) {
  // c + 0...0 + 1, total length n+1; requires n >= |c|
  Bits out = c;
  out.resize(n, 0);
  out.push_back(1);
  return out;
}

// Stems in search order: empty, then by length, then by the 2^(len-1)
// prefixes of the forced trailing 1 (low bit of the counter = position 0).
std::vector<Bits> stems_up_to(uint64_t max_len) {
  std::vector<Bits> out{Bits{}};
  for (uint64_t len = 1; len <= max_len; ++len) {
    uint64_t combos = uint64_t(1) << (len - 1);
    for (uint64_t mask = 0; mask < combos; ++mask) {
      Bits c(len, 0);
      for (uint64_t i = 0; i + 1 < len; ++i)
        c[i] = static_cast<uint8_t>((mask >> i) & 1);
      c[len - 1] = 1;
      out.push_back(std::move(c));
    }
  }
  return out;
}

Nat coded_value_under(const BoundSpec& spec, const FinSeq& g, const Bits& c1,
                      uint64_t n) {
  FinSeq gp(g.begin(), g.begin() + n);
  Bits cp(c1.begin(), c1.begin() + n);
  return encode_pair(spec, {std::move(gp), std::move(cp)});
}

// Some element of the marked class of (g, c1) lies above n0 in the order?
bool has_order_witness(const BoundSpec& spec, const FinSeq& g, const Bits& c1,
                       uint64_t n0) {
  for (const Nat& v : marked_class(g, c1, Nat(g.size()))) {
    if (v <= n0) continue;
    if (order_rel(spec, g, n0, static_cast<uint64_t>(v))) return true;
  }
  return false;
}

}  // namespace

Case1Result case1_search(const BoundSpec& spec, const FinSeq& g,
                         uint64_t max_stem) {
  Case1Result res;
  if (g.empty()) return res;

  for (const Bits& stem : stems_up_to(max_stem)) {
    ++res.stems_tried;
    std::vector<uint64_t> usable;
    bool refuted_here = false;
    for (const Nat& v : marked_class(g, stem, Nat(g.size()))) {
      if (v < stem.size()) {
        ++res.skipped;  // no room to place the next 1
        continue;
      }
      uint64_t n0 = static_cast<uint64_t>(v);
      Bits c1 = extend_stem(stem, n0);
      if (g[n0] == coded_value_under(spec, g, c1, n0)) {
        ++res.refuted;
        refuted_here = true;
        break;
      }
      if (has_order_witness(spec, g, c1, n0))
        ++res.verified;
      else
        ++res.boundary;
      usable.push_back(n0);
    }
    if (refuted_here || usable.empty()) continue;

    // Success: chain greedily from the least usable element, stepping to the
    // least order-successor in each extended class.
    res.success = true;
    res.stem = stem;
    uint64_t cur = usable.front();
    res.chain.push_back(cur);
    Bits c_cur = stem;
    while (true) {
      Bits c_next = extend_stem(c_cur, cur);
      std::optional<uint64_t> next;
      for (const Nat& v : marked_class(g, c_next, Nat(g.size()))) {
        if (v <= cur) continue;
        uint64_t n1 = static_cast<uint64_t>(v);
        if (order_rel(spec, g, cur, n1)) {
          next = n1;
          break;
        }
      }
      if (!next) break;
      cur = *next;
      res.chain.push_back(cur);
      c_cur = std::move(c_next);
    }

    coding::PairCode p = coding::decode_pair(spec, g[res.chain.back()]);
    res.h = std::move(p.h);
    res.d = std::move(p.d);
    res.h.resize(g.size(), Nat(0));
    res.d.resize(g.size(), 0);
    return res;
  }
  return res;
}

Case2Result case2_greedy(const BoundSpec& spec, const FinSeq& g,
                         Strategy strategy) {
  Case2Result res;
  Bits c;
  while (true) {
    bool picked = false;
    bool any_admissible = false;
    for (uint64_t n = c.size(); n < g.size(); ++n) {
      bool admissible;
      if (strategy == Strategy::Literal) {
        // n must be a marked value of (g, c)
        const auto cls = marked_class(g, c, Nat(g.size()));
        admissible = std::binary_search(cls.begin(), cls.end(), Nat(n));
      } else {
        admissible = core::residue_member(Nat(n), c);
      }
      if (!admissible) continue;
      any_admissible = true;
      Bits c1 = extend_stem(c, n);
      bool first = g[n] == coded_value_under(spec, g, c1, n);
      if (first || !has_order_witness(spec, g, c1, n)) {
        c = std::move(c1);
        res.picks.push_back(n);
        res.via_first_disjunct.push_back(first ? 1 : 0);
        picked = true;
        break;
      }
    }
    if (!picked) {
      res.stopped_early = any_admissible;
      break;
    }
  }

  res.good = core::is_good(c);
  Bits padded = c;
  padded.resize(g.size(), 0);
  res.c = std::move(c);
  core::ConstructionContext ctx(spec, g, padded);
  FinSeq eh = core::e_hat_prefix(ctx, g.size());
  for (size_t n = 0; n < g.size(); ++n)
    if (eh[n] == g[n]) ++res.agreements;
  return res;
}

std::optional<MatchResult> match_finder(const BoundSpec& spec, const FinSeq& g,
                                        uint64_t min_agreements,
                                        Strategy strategy, uint64_t max_stem) {
  if (g.empty()) return std::nullopt;

  auto agreements_with = [&](const FinSeq& member) {
    std::vector<uint64_t> pos;
    for (size_t n = 0; n < g.size() && n < member.size(); ++n)
      if (member[n] == g[n]) pos.push_back(n);
    return pos;
  };

  // Self-match: g already looks like a family prefix.
  bool self = true;
  for (size_t k = 0; k <= g.size() && self; ++k) {
    FinSeq prefix(g.begin(), g.begin() + k);
    self = tree::is_tree_node(spec, prefix);
  }
  if (self && g.size() >= min_agreements) {
    MatchResult m;
    m.via = MatchResult::Via::SelfMatch;
    m.member = g;
    for (size_t n = 0; n < g.size(); ++n) m.agreement_positions.push_back(n);
    return m;
  }

  Case1Result c1 = case1_search(spec, g, max_stem);
  if (c1.success) {
    core::ConstructionContext ctx(spec, c1.h, c1.d);
    FinSeq member = core::e_hat_prefix(ctx, g.size());
    auto pos = agreements_with(member);
    if (pos.size() >= min_agreements) {
      MatchResult m;
      m.via = MatchResult::Via::Case1;
      m.member = std::move(member);
      m.agreement_positions = std::move(pos);
      return m;
    }
  }

  Case2Result c2 = case2_greedy(spec, g, strategy);
  Bits padded = c2.c;
  padded.resize(g.size(), 0);
  core::ConstructionContext ctx(spec, g, padded);
  FinSeq member = core::e_hat_prefix(ctx, g.size());
  auto pos = agreements_with(member);
  if (pos.size() >= min_agreements) {
    MatchResult m;
    m.via = MatchResult::Via::Case2;
    m.member = std::move(member);
    m.agreement_positions = std::move(pos);
    return m;
  }
  return std::nullopt;
}

std::optional<Nat> pigeonhole_bound(const BoundSpec& spec) {
  bounds::RegimeReport reg = bounds::classify_regime(spec);
  if (!reg.liminf.is_finite()) return std::nullopt;
  return reg.liminf.value() + 1;
}

}  // namespace edf::probe
