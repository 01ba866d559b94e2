#include "edf/core.hpp"

#include <stdexcept>

namespace edf::core {

using bounds::eval_bound;
using coding::decode_pair;
using coding::encode_pair;
using coding::encode_seq;

bool residue_member(const Nat& n, const Bits& c) {
  Nat modulus = pow2(c.size());
  Nat target = 0;
  for (size_t i = 0; i < c.size(); ++i)
    if (c[i]) target += pow2(i);
  return n % modulus == target;
}

bool is_good(const Bits& c) {
  std::optional<size_t> last_one;
  for (size_t n = 0; n < c.size(); ++n) {
    if (!c[n]) continue;
    if (last_one) {
      Bits prefix(c.begin(), c.begin() + *last_one + 1);
      if (!residue_member(Nat(n), prefix)) return false;
    }
    last_one = n;
  }
  return true;
}

ConstructionContext::ConstructionContext(BoundSpec s, FinSeq g_, Bits c_)
    : spec(std::move(s)), g(std::move(g_)), c(std::move(c_)) {
  if (g.size() != c.size())
    throw std::invalid_argument("g and c must have equal length");
  for (size_t k = 0; k < g.size(); ++k) {
    if (c[k] > 1) throw std::invalid_argument("c must be a bit sequence");
    ExtNat fk = eval_bound(spec, k);
    if (fk.is_finite() && g[k] >= fk.value())
      throw std::invalid_argument("g leaves the product space");
  }
}

std::vector<Nat> marked_values(const FinSeq& g, const Bits& c) {
  std::vector<Nat> out;
  Nat code = 0;  // encode_seq(g | j), maintained incrementally
  for (size_t j = 0; j < g.size(); ++j) {
    if (c[j]) out.push_back(2 * code);
    code = pair(code, g[j]) + 1;
  }
  return out;
}

std::vector<Nat> marked_set(const ConstructionContext& ctx) {
  std::vector<Nat> marks = marked_values(ctx.g, ctx.c);
  std::vector<Nat> out;
  uint64_t n = ctx.length();
  for (Nat& v : marks) {
    if (v < n) {
      uint64_t idx = static_cast<uint64_t>(v);
      Bits cp(ctx.c.begin(), ctx.c.begin() + idx);
      FinSeq gp(ctx.g.begin(), ctx.g.begin() + idx);
      if (ctx.g[idx] == encode_pair(ctx.spec, {std::move(gp), std::move(cp)}))
        continue;
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Nat> marked_class(const FinSeq& g, const Bits& c,
                              const Nat& value_bound) {
  std::vector<Nat> out;
  Nat code = 0;
  for (size_t n = 0; n < g.size(); ++n) {
    if (2 * code >= value_bound) break;  // prefix codes strictly increase
    if (residue_member(Nat(n), c)) out.push_back(2 * code);
    code = pair(code, g[n]) + 1;
  }
  return out;
}

bool order_rel(const BoundSpec& spec, const FinSeq& g, uint64_t n0,
               uint64_t n1) {
  if (n0 >= n1 || n1 >= g.size()) return false;
  PairCode p0 = decode_pair(spec, g[n0]);
  if (p0.level() != n0) return false;
  PairCode p1 = decode_pair(spec, g[n1]);
  if (p1.level() != n1) return false;
  for (uint64_t k = 0; k < n0; ++k)
    if (p0.h[k] != p1.h[k] || p0.d[k] != p1.d[k]) return false;
  return true;
}

FinSeq e_prefix(const ConstructionContext& ctx, uint64_t upto) {
  if (upto > ctx.length()) throw std::out_of_range("prefix longer than context");
  FinSeq out;
  out.reserve(upto);
  for (uint64_t n = 0; n < upto; ++n) {
    Bits cp(ctx.c.begin(), ctx.c.begin() + n);
    FinSeq gp(ctx.g.begin(), ctx.g.begin() + n);
    out.push_back(encode_pair(ctx.spec, {std::move(gp), std::move(cp)}));
  }
  return out;
}

namespace {

// n = 2*encode_seq(g|j) for some j with c(j) = 1? Codes grow strictly, so the
// scan stops once 2*code passes n (and encode_seq(s) >= |s| bounds j <= n/2).
bool is_marked(const FinSeq& g, const Bits& c, uint64_t n) {
  if (n % 2 != 0) return false;
  Nat code = 0;
  for (size_t j = 0; j < g.size(); ++j) {
    if (2 * code > n) return false;
    if (2 * code == n) return c[j] != 0;
    code = pair(code, g[j]) + 1;
  }
  return false;
}

}  // namespace

FinSeq e_hat_prefix(const ConstructionContext& ctx, uint64_t upto) {
  FinSeq e = e_prefix(ctx, upto);
  FinSeq out;
  out.reserve(upto);
  std::vector<uint64_t> nu;     // marked-set elements below the current index
  bool good = true;             // goodness of c|n, latched
  bool ordered_pair = false;    // some pair in nu is order-related, latched
  for (uint64_t n = 0; n < upto; ++n) {
    if (good) {
      Bits cp(ctx.c.begin(), ctx.c.begin() + n);
      good = is_good(cp);
    }
    bool in_nu = is_marked(ctx.g, ctx.c, n) && ctx.g[n] != e[n];
    out.push_back(in_nu && !ordered_pair && good ? ctx.g[n] : e[n]);
    if (in_nu) {
      if (!ordered_pair)
        for (uint64_t v : nu)
          if (order_rel(ctx.spec, ctx.g, v, n)) {
            ordered_pair = true;
            break;
          }
      nu.push_back(n);
    }
  }
  return out;
}

}  // namespace edf::core
