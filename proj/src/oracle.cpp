#include "edf/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <stdexcept>

#include "edf/coding.hpp"
#include "edf/tree.hpp"

namespace edf::oracle {

using bounds::eval_bound;
using json_io::json;

namespace {

uint64_t coordinate_bound(const BoundSpec& spec, uint64_t k,
                          uint64_t value_cap) {
  ExtNat fk = eval_bound(spec, k);
  if (fk.is_inf()) {
    if (value_cap == 0)
      throw std::invalid_argument(
          "infinite coordinate needs a value cap for enumeration");
    return value_cap;
  }
  uint64_t b = static_cast<uint64_t>(fk.value());
  return value_cap ? std::min(b, value_cap) : b;
}

struct Timer {
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
  }
};

json context_json(const ConstructionContext& ctx) {
  return {{"g", json_io::finseq_to_json(ctx.g)},
          {"c", json_io::bits_to_json(ctx.c)}};
}

uint64_t divergence(const ConstructionContext& a,
                    const ConstructionContext& b) {
  uint64_t n = 0;
  while (n < a.g.size() && a.g[n] == b.g[n] && a.c[n] == b.c[n]) ++n;
  return n;  // == length when equal
}

// Marks shared by construction: both c bits set at a source j whose
// generating prefix g|j is common to the two contexts. The first index where
// the g's differ is still such a source (g|j excludes index j); beyond it the
// prefixes, and hence the mark values, diverge for good.
std::vector<Nat> shared_prefix_marks(const ConstructionContext& a,
                                     const ConstructionContext& b) {
  std::vector<Nat> out;
  Nat code = 0;
  for (size_t j = 0; j < a.g.size(); ++j) {
    if (a.c[j] && b.c[j]) out.push_back(2 * code);
    if (a.g[j] != b.g[j]) break;
    code = pair(code, a.g[j]) + 1;
  }
  return out;
}

}  // namespace

std::vector<ConstructionContext> enumerate_contexts(const BoundSpec& spec,
                                                    uint64_t horizon,
                                                    uint64_t value_cap,
                                                    uint64_t budget) {
  Nat total = pow2(horizon);
  std::vector<uint64_t> bound(horizon);
  for (uint64_t k = 0; k < horizon; ++k) {
    bound[k] = coordinate_bound(spec, k, value_cap);
    total *= bound[k];
  }
  if (total > budget)
    throw std::length_error("context enumeration budget exceeded");

  std::vector<ConstructionContext> out;
  std::vector<uint64_t> gv(horizon, 0);
  while (true) {
    for (uint64_t cm = 0; cm < (uint64_t(1) << horizon); ++cm) {
      FinSeq g;
      Bits c;
      for (uint64_t k = 0; k < horizon; ++k) {
        g.emplace_back(gv[k]);
        c.push_back(static_cast<uint8_t>((cm >> k) & 1));
      }
      out.emplace_back(spec, std::move(g), std::move(c));
    }
    uint64_t k = horizon;
    while (k > 0 && gv[k - 1] + 1 == bound[k - 1]) gv[--k] = 0;
    if (k == 0) break;
    ++gv[k - 1];
  }
  return out;
}

std::vector<ConstructionContext> sample_contexts(const BoundSpec& spec,
                                                 uint64_t horizon,
                                                 uint64_t value_cap,
                                                 uint64_t count,
                                                 uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<ConstructionContext> out;
  for (uint64_t i = 0; i < count; ++i) {
    FinSeq g;
    Bits c;
    for (uint64_t k = 0; k < horizon; ++k) {
      uint64_t b = coordinate_bound(spec, k, value_cap);
      g.emplace_back(rng() % b);
      c.push_back(static_cast<uint8_t>(rng() % 2));
    }
    out.emplace_back(spec, std::move(g), std::move(c));
  }
  return out;
}

namespace {

// Runs fn over distinct context pairs: all unordered pairs when sampling is
// off, otherwise `samples` consecutively drawn pairs. fn returns false to
// stop (failure recorded by the caller).
template <typename Fn>
void for_each_pair(const BoundSpec& spec, const SuiteOptions& opts,
                   VerifyReport& rep, Fn&& fn) {
  if (opts.samples == 0) {
    auto ctxs = enumerate_contexts(spec, opts.horizon, opts.value_cap,
                                   opts.budget);
    rep.contexts = ctxs.size();
    for (size_t i = 0; i < ctxs.size(); ++i)
      for (size_t j = i + 1; j < ctxs.size(); ++j) {
        ++rep.pairs;
        if (!fn(ctxs[i], ctxs[j])) return;
      }
  } else {
    auto ctxs = sample_contexts(spec, opts.horizon, opts.value_cap,
                                2 * opts.samples, opts.seed);
    rep.contexts = ctxs.size();
    for (uint64_t t = 0; t < opts.samples; ++t) {
      ++rep.pairs;
      if (!fn(ctxs[2 * t], ctxs[2 * t + 1])) return;
    }
  }
}

}  // namespace

VerifyReport verify_ad_suite(const BoundSpec& spec, const SuiteOptions& opts) {
  Timer timer;
  VerifyReport rep;
  rep.suite = "ad";
  rep.horizon = opts.horizon;
  rep.samples = opts.samples;
  rep.seed = opts.seed;

  auto marked = opts.marked_set_fn
                    ? opts.marked_set_fn
                    : [](const ConstructionContext& c) {
                        return core::marked_set(c);
                      };

  for_each_pair(spec, opts, rep, [&](const ConstructionContext& a,
                                     const ConstructionContext& b) {
    if (a.g == b.g && a.c == b.c) return true;  // distinctness precondition

    std::vector<Nat> na = marked(a), nb = marked(b);
    std::vector<Nat> inter;
    std::set_intersection(na.begin(), na.end(), nb.begin(), nb.end(),
                          std::back_inserter(inter));
    std::vector<Nat> allowed = shared_prefix_marks(a, b);
    for (const Nat& v : inter) {
      if (!std::binary_search(allowed.begin(), allowed.end(), v)) {
        rep.pass = false;
        rep.counterexample = {{"kind", "marked-set-intersection"},
                              {"first", context_json(a)},
                              {"second", context_json(b)},
                              {"value", json_io::nat_to_json(v)}};
        return false;
      }
    }

    if (a.c != b.c && core::is_good(a.c) && core::is_good(b.c)) {
      uint64_t d = 0;
      while (a.c[d] == b.c[d]) ++d;
      uint64_t common = 0;
      for (uint64_t p = d; p < a.c.size(); ++p)
        if (a.c[p] && b.c[p]) ++common;
      if (common > 1) {
        rep.pass = false;
        rep.counterexample = {{"kind", "good-ones-overlap"},
                              {"first", json_io::bits_to_json(a.c)},
                              {"second", json_io::bits_to_json(b.c)},
                              {"common_past_divergence", common}};
        return false;
      }
    }
    return true;
  });

  rep.elapsed_sec = timer.seconds();
  return rep;
}

VerifyReport verify_ed_suite(const BoundSpec& spec, const SuiteOptions& opts) {
  Timer timer;
  VerifyReport rep;
  rep.suite = "ed";
  rep.horizon = opts.horizon;
  rep.samples = opts.samples;
  rep.seed = opts.seed;

  auto e_hat = opts.e_hat_fn ? opts.e_hat_fn
                             : [](const ConstructionContext& c, uint64_t n) {
                                 return core::e_hat_prefix(c, n);
                               };

  struct Row {
    FinSeq eh, e;
    std::vector<Nat> nu;
  };
  auto row_of = [&](const ConstructionContext& ctx) {
    Row r;
    r.eh = e_hat(ctx, ctx.length());
    r.e = core::e_prefix(ctx, ctx.length());
    r.nu = core::marked_set(ctx);
    return r;
  };

  // Check one orientation of the structural invariant: two agreements of
  // x's e_hat with y's coded values inside x's marked set force an
  // order-related pair and reversion afterwards.
  auto structural_ok = [&](const ConstructionContext& x, const Row& rx,
                           const Row& ry, uint64_t nstar, json& why) {
    uint64_t N = x.length();
    std::vector<uint64_t> hits;
    for (uint64_t n = nstar + 1; n < N; ++n)
      if (rx.eh[n] == ry.e[n] &&
          std::binary_search(rx.nu.begin(), rx.nu.end(), Nat(n)))
        hits.push_back(n);
    for (size_t i = 0; i < hits.size(); ++i)
      for (size_t j = i + 1; j < hits.size(); ++j) {
        if (!core::order_rel(spec, x.g, hits[i], hits[j])) {
          why = {{"kind", "missing-order-pair"},
                 {"n0", hits[i]},
                 {"n1", hits[j]}};
          return false;
        }
        for (uint64_t m = hits[j] + 1; m < N; ++m)
          if (rx.eh[m] != rx.e[m]) {
            why = {{"kind", "missing-reversion"},
                   {"n0", hits[i]},
                   {"n1", hits[j]},
                   {"m", m}};
            return false;
          }
      }
    return true;
  };

  for_each_pair(spec, opts, rep, [&](const ConstructionContext& a,
                                     const ConstructionContext& b) {
    if (a.g == b.g && a.c == b.c) return true;
    uint64_t nstar = divergence(a, b);
    Row ra = row_of(a), rb = row_of(b);

    // Coded values depend on the prefix strictly below n, so the divergence
    // at nstar becomes visible in the codes only from nstar + 1 on.
    for (uint64_t n = nstar + 1; n < a.length(); ++n) {
      if (ra.eh[n] != rb.eh[n]) continue;
      bool in_nu = std::binary_search(ra.nu.begin(), ra.nu.end(), Nat(n)) ||
                   std::binary_search(rb.nu.begin(), rb.nu.end(), Nat(n));
      if (!in_nu) {
        rep.pass = false;
        rep.counterexample = {{"kind", "agreement-outside-marks"},
                              {"first", context_json(a)},
                              {"second", context_json(b)},
                              {"n", n}};
        return false;
      }
    }

    json why;
    if (!structural_ok(a, ra, rb, nstar, why) ||
        !structural_ok(b, rb, ra, nstar, why)) {
      rep.pass = false;
      rep.counterexample = {{"kind", "structure"},
                            {"first", context_json(a)},
                            {"second", context_json(b)},
                            {"detail", why}};
      return false;
    }
    return true;
  });

  rep.elapsed_sec = timer.seconds();
  return rep;
}

VerifyReport verify_tree_suite(const BoundSpec& spec,
                               const SuiteOptions& opts) {
  Timer timer;
  VerifyReport rep;
  rep.suite = "tree";
  rep.horizon = opts.horizon;
  rep.samples = opts.samples;
  rep.seed = opts.seed;

  auto is_node = opts.tree_node_fn
                     ? opts.tree_node_fn
                     : [](const BoundSpec& s, const FinSeq& f) {
                         return tree::is_tree_node(s, f);
                       };

  std::vector<ConstructionContext> ctxs =
      opts.samples == 0
          ? enumerate_contexts(spec, opts.horizon, opts.value_cap, opts.budget)
          : sample_contexts(spec, opts.horizon, opts.value_cap, opts.samples,
                            opts.seed);
  rep.contexts = ctxs.size();

  std::set<FinSeq> family_prefixes;
  for (const auto& ctx : ctxs) {
    FinSeq eh = core::e_hat_prefix(ctx, ctx.length());
    for (size_t k = 0; k <= eh.size(); ++k) {
      FinSeq prefix(eh.begin(), eh.begin() + k);
      if (!is_node(spec, prefix)) {
        rep.pass = false;
        rep.counterexample = {{"kind", "family-prefix-not-a-node"},
                              {"context", context_json(ctx)},
                              {"prefix", json_io::finseq_to_json(prefix)}};
        rep.elapsed_sec = timer.seconds();
        return rep;
      }
    }
    family_prefixes.insert(std::move(eh));
  }
  rep.extra["family_prefix_count"] = family_prefixes.size();

  // Tree level size and extendability, when the level is finitely branching
  // and fully enumerated (no sampling, no cap).
  bool finite_level = true;
  for (uint64_t n = 0; n < opts.horizon; ++n)
    if (eval_bound(spec, n).is_inf()) finite_level = false;
  if (finite_level && opts.samples == 0 && opts.value_cap == 0) {
    std::vector<FinSeq> level =
        tree::level_set(spec, opts.horizon, std::nullopt, opts.budget);
    rep.extra["tree_level_count"] = level.size();
    uint64_t non_family = 0, extendable = 0;
    for (const FinSeq& f : level) {
      if (family_prefixes.count(f)) continue;
      ++non_family;
      if (!tree::children(spec, f, Nat(64)).empty()) ++extendable;
    }
    rep.extra["non_family_nodes"] = non_family;
    rep.extra["non_family_extendable"] = extendable;
  }

  rep.elapsed_sec = timer.seconds();
  return rep;
}

VerifyReport verify_lift_suite(const BoundSpec& spec,
                               const SuiteOptions& opts) {
  Timer timer;
  VerifyReport rep;
  rep.suite = "lift";
  rep.horizon = opts.horizon;
  rep.samples = opts.samples;
  rep.seed = opts.seed;

  auto lift_fn = opts.lift_fn
                     ? opts.lift_fn
                     : [](const lift::LiftContext& c, const FinSeq& f,
                          uint64_t upto) {
                         return lift::lift_member_prefix(c, f, upto);
                       };

  lift::LiftContext ctx =
      lift::make_lift_context(spec, opts.horizon, opts.compact);
  uint64_t depth = std::min<uint64_t>(opts.lift_depth, ctx.entries.size());
  std::optional<Nat> cap;
  if (opts.value_cap) cap = Nat(opts.value_cap);
  std::vector<FinSeq> members =
      tree::level_set(ctx.reindexed, depth, cap, opts.budget);
  rep.extra["members"] = members.size();
  rep.extra["entries"] = ctx.entries;

  std::vector<FinSeq> lifted;
  for (const FinSeq& f : members) {
    FinSeq l = lift_fn(ctx, f, opts.horizon);
    if (!lift::lift_membership(ctx, l)) {
      rep.pass = false;
      rep.counterexample = {{"kind", "round-trip-membership"},
                            {"member", json_io::finseq_to_json(f)},
                            {"lifted", json_io::finseq_to_json(l)}};
      rep.elapsed_sec = timer.seconds();
      return rep;
    }
    lifted.push_back(std::move(l));
  }

  std::set<uint64_t> entry_set(ctx.entries.begin(), ctx.entries.end());

  // Pairwise: off-entry agreements must decode to restriction prefixes that
  // stop before the members diverge.
  for (size_t i = 0; i < members.size(); ++i)
    for (size_t j = i + 1; j < members.size(); ++j) {
      ++rep.pairs;
      uint64_t kdiv = 0;
      while (kdiv < members[i].size() && members[i][kdiv] == members[j][kdiv])
        ++kdiv;
      if (kdiv == members[i].size()) continue;
      for (uint64_t n = 0; n < opts.horizon; ++n) {
        if (lifted[i][n] != lifted[j][n]) continue;
        if (entry_set.count(n)) continue;  // mirrors a direct f-agreement
        uint64_t len = coding::decode_seq(lifted[i][n]).size();
        if (len > kdiv) {
          rep.pass = false;
          rep.counterexample = {{"kind", "off-entry-agreement-past-divergence"},
                                {"first", json_io::finseq_to_json(members[i])},
                                {"second", json_io::finseq_to_json(members[j])},
                                {"n", n},
                                {"restriction_length", len}};
          rep.elapsed_sec = timer.seconds();
          return rep;
        }
      }
    }

  if (opts.compact) {
    // Predicted finite code set per position: codes of all tuples over the
    // entry alphabet with length up to the number of entries below n.
    for (size_t i = 0; i < members.size(); ++i) {
      for (uint64_t n = 0; n < opts.horizon; ++n) {
        if (entry_set.count(n)) continue;
        if (!ctx.entries.empty() && n < ctx.entries[0]) {
          if (lifted[i][n] != 0) {
            rep.pass = false;
            rep.counterexample = {{"kind", "compact-zero-prefix"},
                                  {"n", n}};
            rep.elapsed_sec = timer.seconds();
            return rep;
          }
          continue;
        }
        uint64_t max_len = 0;
        while (max_len < ctx.entries.size() && ctx.entries[max_len] < n)
          ++max_len;
        std::set<Nat> predicted{Nat(0)};
        std::vector<Nat> frontier{Nat(0)};
        for (uint64_t l = 0; l < max_len; ++l) {
          std::vector<Nat> next;
          Nat bound = eval_bound(spec, ctx.entries[l]).value();
          for (const Nat& code : frontier)
            for (Nat v = 0; v < bound; ++v) {
              Nat c2 = pair(code, v) + 1;
              predicted.insert(c2);
              next.push_back(std::move(c2));
            }
          frontier = std::move(next);
        }
        if (!predicted.count(lifted[i][n])) {
          rep.pass = false;
          rep.counterexample = {{"kind", "compact-value-outside-code-set"},
                                {"member", json_io::finseq_to_json(members[i])},
                                {"n", n}};
          rep.elapsed_sec = timer.seconds();
          return rep;
        }
      }
    }
  }

  rep.elapsed_sec = timer.seconds();
  return rep;
}

json report_to_json(const VerifyReport& rep, bool include_timings) {
  json j = {{"suite", rep.suite},
            {"pass", rep.pass},
            {"horizon", rep.horizon},
            {"samples", rep.samples},
            {"seed", rep.seed},
            {"contexts", rep.contexts},
            {"pairs", rep.pairs},
            {"counterexample", rep.counterexample},
            {"extra", rep.extra}};
  if (include_timings) j["elapsed_sec"] = rep.elapsed_sec;
  return j;
}

}  // namespace edf::oracle
