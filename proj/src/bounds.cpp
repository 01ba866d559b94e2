#include "edf/bounds.hpp"

#include <stdexcept>

namespace edf::bounds {

TailRule TailRule::constant(Nat k) {
  TailRule t;
  t.kind = Kind::Constant;
  t.constant_value = std::move(k);
  return t;
}

TailRule TailRule::infinity() {
  TailRule t;
  t.kind = Kind::Infinity;
  return t;
}

TailRule TailRule::affine(Nat a, Nat b) {
  TailRule t;
  t.kind = Kind::Affine;
  t.affine_a = std::move(a);
  t.affine_b = std::move(b);
  return t;
}

TailRule TailRule::periodic(std::vector<ExtNat> pat) {
  TailRule t;
  t.kind = Kind::Periodic;
  t.pattern = std::move(pat);
  return t;
}

BoundSpec::BoundSpec(std::vector<ExtNat> pfx, TailRule t)
    : prefix(std::move(pfx)), tail(std::move(t)) {
  for (size_t i = 0; i < prefix.size(); ++i) {
    if (prefix[i].is_finite() && prefix[i].value() < 1)
      throw std::invalid_argument("bound prefix value must be >= 1");
  }
  switch (tail.kind) {
    case TailRule::Kind::Constant:
      if (tail.constant_value < 1)
        throw std::invalid_argument("constant tail must be >= 1");
      break;
    case TailRule::Kind::Infinity:
      break;
    case TailRule::Kind::Affine: {
      // first tail index is |prefix|; all later values are at least this one
      Nat first = tail.affine_a * prefix.size() + tail.affine_b;
      if (first < 1) throw std::invalid_argument("affine tail must be >= 1");
      break;
    }
    case TailRule::Kind::Periodic:
      if (tail.pattern.empty())
        throw std::invalid_argument("periodic tail needs a nonempty pattern");
      for (const auto& v : tail.pattern)
        if (v.is_finite() && v.value() < 1)
          throw std::invalid_argument("periodic tail value must be >= 1");
      break;
  }
}

ExtNat eval_bound(const BoundSpec& spec, uint64_t n) {
  if (n < spec.prefix.size()) return spec.prefix[n];
  switch (spec.tail.kind) {
    case TailRule::Kind::Constant:
      return ExtNat(spec.tail.constant_value);
    case TailRule::Kind::Infinity:
      return ExtNat::infinity();
    case TailRule::Kind::Affine:
      return ExtNat(spec.tail.affine_a * n + spec.tail.affine_b);
    case TailRule::Kind::Periodic: {
      uint64_t i = (n - spec.prefix.size()) % spec.tail.pattern.size();
      return spec.tail.pattern[i];
    }
  }
  throw std::logic_error("unreachable tail kind");
}

GrowthReport check_growth(const BoundSpec& spec, uint64_t up_to) {
  GrowthReport rep;
  ExtNat cumulative(0);   // sum_{l<=n} |prod_{k<l} F(k)| * 2^l
  ExtNat product(1);      // |prod_{k<l} F(k)| entering level n
  for (uint64_t n = 0; n <= up_to; ++n) {
    cumulative = cumulative + product * ExtNat(pow2(n));
    ExtNat fn = eval_bound(spec, n);
    if (fn < cumulative) {
      rep.pass = false;
      rep.first_fail = n;
      rep.lhs = cumulative;
      rep.rhs = fn;
      return rep;
    }
    product = product * fn;
  }
  rep.pass = true;
  rep.lhs = cumulative;
  rep.rhs = eval_bound(spec, up_to);
  return rep;
}

RegimeReport classify_regime(const BoundSpec& spec) {
  RegimeReport rep;
  switch (spec.tail.kind) {
    case TailRule::Kind::Constant:
      rep.liminf = ExtNat(spec.tail.constant_value);
      rep.finite_infinitely_often = true;
      break;
    case TailRule::Kind::Infinity:
      rep.liminf = ExtNat::infinity();
      rep.finite_infinitely_often = false;
      break;
    case TailRule::Kind::Affine:
      if (spec.tail.affine_a == 0) {
        rep.liminf = ExtNat(spec.tail.affine_b);
        rep.finite_infinitely_often = true;
      } else {
        rep.liminf = ExtNat::infinity();
        rep.finite_infinitely_often = true;  // every tail value is finite
      }
      break;
    case TailRule::Kind::Periodic: {
      ExtNat lo = ExtNat::infinity();
      bool any_finite = false;
      for (const auto& v : spec.tail.pattern) {
        if (v.is_finite()) {
          any_finite = true;
          if (v < lo) lo = v;
        }
      }
      rep.liminf = lo;
      rep.finite_infinitely_often = any_finite;
      break;
    }
  }
  rep.regime =
      rep.liminf.is_finite() ? Regime::LiminfFinite : Regime::LimInfinite;
  return rep;
}

namespace {

void require_reindexable(const BoundSpec& spec, const ReindexOptions& opts) {
  RegimeReport reg = classify_regime(spec);
  if (reg.regime != Regime::LimInfinite)
    throw std::domain_error("reindexing requires lim F = inf");
  if (opts.restrict_to_finite && !reg.finite_infinitely_often)
    throw std::domain_error(
        "restricted reindexing requires infinitely many finite values");
}

// Least n in [from, to] with F(n) >= needed (and finite, in restricted mode).
std::optional<uint64_t> scan_entry(const BoundSpec& spec,
                                   const ReindexOptions& opts,
                                   const ExtNat& needed, uint64_t from,
                                   uint64_t to) {
  for (uint64_t n = from; n <= to; ++n) {
    ExtNat fn = eval_bound(spec, n);
    if (opts.restrict_to_finite && fn.is_inf()) continue;
    if (needed <= fn) return n;
  }
  return std::nullopt;
}

}  // namespace

std::vector<uint64_t> reindex_sequence(const BoundSpec& spec, uint64_t count,
                                       const ReindexOptions& opts) {
  require_reindexable(spec, opts);
  std::vector<uint64_t> e;
  if (count == 0) return e;

  // e_0: index 0, or the least finite-valued index in restricted mode. The
  // level-0 requirement (2^0 <= F) holds everywhere since F >= 1.
  ExtNat cumulative = ExtNat(pow2(0));  // sum_{l<=m} prod_{k<l} F(e_k) * 2^l
  ExtNat product(1);                    // prod_{k<l} F(e_k) entering level m
  auto first = scan_entry(spec, opts, cumulative, 0, opts.scan_bound);
  if (!first)
    throw ScanBoundExceeded("no admissible start index within scan bound");
  e.push_back(*first);

  for (uint64_t m = 1; m < count; ++m) {
    product = product * eval_bound(spec, e.back());
    cumulative = cumulative + product * ExtNat(pow2(m));
    auto next =
        scan_entry(spec, opts, cumulative, e.back() + 1, opts.scan_bound);
    if (!next) throw ScanBoundExceeded("reindexing scan bound exceeded");
    e.push_back(*next);
  }
  return e;
}

std::vector<uint64_t> reindex_up_to(const BoundSpec& spec, uint64_t max_index,
                                    const ReindexOptions& opts) {
  require_reindexable(spec, opts);
  std::vector<uint64_t> e;
  ExtNat cumulative = ExtNat(pow2(0));
  ExtNat product(1);
  auto first = scan_entry(spec, opts, cumulative, 0, max_index);
  if (!first) return e;
  e.push_back(*first);

  for (uint64_t m = 1;; ++m) {
    product = product * eval_bound(spec, e.back());
    cumulative = cumulative + product * ExtNat(pow2(m));
    if (e.back() == max_index) break;
    auto next = scan_entry(spec, opts, cumulative, e.back() + 1, max_index);
    if (!next) break;
    e.push_back(*next);
  }
  return e;
}

std::vector<uint64_t> finite_support_set(const BoundSpec& spec,
                                         uint64_t up_to) {
  std::vector<uint64_t> out;
  for (uint64_t n = 0; n <= up_to; ++n)
    if (eval_bound(spec, n).is_finite()) out.push_back(n);
  return out;
}

std::vector<Nat> constant_medf(const BoundSpec& spec) {
  RegimeReport reg = classify_regime(spec);
  if (!reg.liminf.is_finite())
    throw std::domain_error("constant family requires liminf F < inf");
  Nat m = reg.liminf.value();
  if (m > Nat(1'000'000))
    throw std::domain_error("constant family too large to enumerate");
  std::vector<Nat> out;
  for (Nat v = 0; v < m; ++v) out.push_back(v);
  return out;
}

}  // namespace edf::bounds
