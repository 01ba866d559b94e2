#include "edf/coding.hpp"

#include <algorithm>
#include <stdexcept>

namespace edf::coding {

using bounds::eval_bound;

Nat encode_seq(const FinSeq& s) {
  Nat code = 0;
  for (const Nat& a : s) code = pair(code, a) + 1;
  return code;
}

FinSeq decode_seq(Nat code) {
  FinSeq s;
  while (code != 0) {
    Nat prev, a;
    unpair(code - 1, prev, a);
    s.push_back(std::move(a));
    code = std::move(prev);
  }
  std::reverse(s.begin(), s.end());
  return s;
}

ExtNat level_count(const BoundSpec& spec, uint64_t l) {
  ExtNat product(1);
  for (uint64_t k = 0; k < l; ++k) product = product * eval_bound(spec, k);
  return product * ExtNat(pow2(l));
}

ExtNat level_offset(const BoundSpec& spec, uint64_t l) {
  ExtNat total(0);
  ExtNat product(1);
  for (uint64_t j = 0; j < l; ++j) {
    total = total + product * ExtNat(pow2(j));
    product = product * eval_bound(spec, j);
  }
  return total;
}

std::optional<uint64_t> first_infinite_level(const BoundSpec& spec,
                                             uint64_t bound) {
  for (uint64_t k = 0; k + 1 <= bound; ++k)
    if (eval_bound(spec, k).is_inf()) return k + 1;
  return std::nullopt;
}

bool pair_valid(const BoundSpec& spec, const PairCode& p) {
  if (p.h.size() != p.d.size()) return false;
  for (size_t k = 0; k < p.h.size(); ++k) {
    if (p.d[k] > 1) return false;
    ExtNat fk = eval_bound(spec, k);
    if (fk.is_finite() && p.h[k] >= fk.value()) return false;
  }
  return true;
}

namespace {

Nat bit_rank(const Bits& d) {
  Nat r = 0;
  for (uint8_t b : d) r = r * 2 + b;
  return r;
}

Bits bit_unrank(Nat r, uint64_t len) {
  Bits d(len, 0);
  for (uint64_t i = len; i-- > 0;) {
    d[i] = static_cast<uint8_t>(r % 2);
    r /= 2;
  }
  return d;
}

// Rank code without the growth precondition; verify_appropriate needs to see
// codes that overflow F rather than have the encoder reject them.
Nat rank_code_unchecked(const BoundSpec& spec, const PairCode& p) {
  uint64_t l = p.level();
  auto inf_level = first_infinite_level(spec, l);

  if (!inf_level) {
    // all predecessors finite: consecutive rank within the level
    Nat offset = level_offset(spec, l).value();
    Nat hrank = 0;
    for (uint64_t k = 0; k < l; ++k)
      hrank = hrank * eval_bound(spec, k).value() + p.h[k];
    return offset + hrank * pow2(l) + bit_rank(p.d);
  }

  // Dovetail: split h into its finite-bound and infinite-bound coordinates.
  // The finite part (including d) has S = prod(finite F) * 2^l states; the
  // infinite coordinates are folded into one natural with the diagonal
  // pairing. Then (level - l*, infrank * S + finpart) is paired again and
  // shifted past every finitely counted code.
  uint64_t lstar = *inf_level;
  Nat base = level_offset(spec, lstar).value();
  Nat S = pow2(l);
  Nat fin_rank = 0;
  Nat inf_rank = 0;
  bool have_inf = false;
  for (uint64_t k = 0; k < l; ++k) {
    ExtNat fk = eval_bound(spec, k);
    if (fk.is_finite()) {
      S *= fk.value();
      fin_rank = fin_rank * fk.value() + p.h[k];
    } else {
      inf_rank = have_inf ? pair(inf_rank, p.h[k]) : p.h[k];
      have_inf = true;
    }
  }
  Nat within = inf_rank * S + fin_rank * pow2(l) + bit_rank(p.d);
  return base + pair(Nat(l - lstar), within);
}

}  // namespace

Nat encode_pair(const BoundSpec& spec, const PairCode& p) {
  if (!pair_valid(spec, p)) throw std::invalid_argument("invalid pair");
  uint64_t l = p.level();
  if (!first_infinite_level(spec, l)) {
    bounds::GrowthReport g = bounds::check_growth(spec, l);
    if (!g.pass)
      throw std::domain_error("growth condition fails at level " +
                              std::to_string(g.first_fail));
  }
  return rank_code_unchecked(spec, p);
}

PairCode decode_pair(const BoundSpec& spec, const Nat& code) {
  // Walk the finitely counted levels; their counts are >= 2^l, so the offsets
  // pass any fixed code after finitely many steps.
  Nat offset = 0;
  for (uint64_t l = 0;; ++l) {
    ExtNat cnt = level_count(spec, l);
    if (cnt.is_inf()) {
      // dovetailed region
      Nat z = code - offset;
      Nat a, within;
      unpair(z, a, within);
      uint64_t lstar = l;
      uint64_t lev = lstar + static_cast<uint64_t>(a);

      Nat S = pow2(lev);
      std::vector<uint64_t> fin_pos, inf_pos;
      for (uint64_t k = 0; k < lev; ++k) {
        ExtNat fk = eval_bound(spec, k);
        if (fk.is_finite()) {
          S *= fk.value();
          fin_pos.push_back(k);
        } else {
          inf_pos.push_back(k);
        }
      }
      Nat inf_rank = within / S;
      Nat fin_part = within % S;
      Nat d_rank = fin_part % pow2(lev);
      Nat h_fin = fin_part / pow2(lev);

      PairCode p;
      p.h.assign(lev, Nat(0));
      p.d = bit_unrank(d_rank, lev);
      for (auto it = fin_pos.rbegin(); it != fin_pos.rend(); ++it) {
        Nat fk = eval_bound(spec, *it).value();
        p.h[*it] = h_fin % fk;
        h_fin /= fk;
      }
      for (size_t i = inf_pos.size(); i-- > 1;) {
        Nat rest, v;
        unpair(inf_rank, rest, v);
        p.h[inf_pos[i]] = std::move(v);
        inf_rank = std::move(rest);
      }
      if (!inf_pos.empty()) p.h[inf_pos[0]] = std::move(inf_rank);
      return p;
    }

    Nat next = offset + cnt.value();
    if (code < next) {
      Nat rank = code - offset;
      Nat h_rank = rank / pow2(l);
      PairCode p;
      p.d = bit_unrank(rank % pow2(l), l);
      p.h.assign(l, Nat(0));
      for (uint64_t k = l; k-- > 0;) {
        Nat fk = eval_bound(spec, k).value();
        p.h[k] = h_rank % fk;
        h_rank /= fk;
      }
      return p;
    }
    offset = std::move(next);
  }
}

AppropriatenessReport verify_appropriate(const BoundSpec& spec,
                                         uint64_t level_bound,
                                         uint64_t budget) {
  AppropriatenessReport rep;
  for (uint64_t l = 0; l <= level_bound; ++l) {
    ExtNat cnt = level_count(spec, l);
    if (cnt.is_inf()) break;  // this and all later levels are dovetailed
    if (Nat(rep.pairs_checked) + cnt.value() > budget)
      throw std::length_error("appropriateness enumeration budget exceeded");
    ExtNat fl = eval_bound(spec, l);

    // odometer over all level-l pairs
    PairCode p;
    p.h.assign(l, Nat(0));
    p.d.assign(l, 0);
    while (true) {
      Nat code = rank_code_unchecked(spec, p);
      ++rep.pairs_checked;
      if (!(ExtNat(code) < fl)) {
        rep.pass = false;
        rep.witness_level = l;
        rep.witness = p;
        rep.witness_code = code;
        rep.bound_at_level = fl;
        return rep;
      }
      // increment d, then h, most-significant-last so lex order is irrelevant
      size_t i = l;
      while (i > 0 && p.d[i - 1] == 1) p.d[--i] = 0;
      if (i > 0) {
        p.d[i - 1] = 1;
        continue;
      }
      size_t k = l;
      while (k > 0 && p.h[k - 1] + 1 == eval_bound(spec, k - 1).value())
        p.h[--k] = 0;
      if (k == 0) break;
      p.h[k - 1] += 1;
    }
  }
  return rep;
}

}  // namespace edf::coding
