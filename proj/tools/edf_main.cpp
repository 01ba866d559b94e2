#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "edf/bounds.hpp"
#include "edf/coding.hpp"
#include "edf/core.hpp"
#include "edf/json_io.hpp"
#include "edf/lift.hpp"
#include "edf/oracle.hpp"
#include "edf/probe.hpp"
#include "edf/tree.hpp"

namespace {

using edf::Bits;
using edf::ExtNat;
using edf::FinSeq;
using edf::Nat;
using edf::bounds::BoundSpec;
using edf::json_io::json;

constexpr int kOk = 0;           // success / property verified
constexpr int kViolated = 1;     // property violated, counterexample emitted
constexpr int kUsage = 2;        // usage or configuration error
constexpr int kInconclusive = 3; // budget or horizon exhausted

struct Output {
  std::ostream* out = &std::cout;
  std::ofstream file;

  void open(const std::string& path) {
    if (path.empty()) return;
    file.open(path);
    if (!file) throw std::invalid_argument("cannot open output file: " + path);
    out = &file;
  }
  void emit(const json& record) { (*out) << record.dump() << "\n"; }
};

FinSeq parse_seq(const std::string& s) {
  FinSeq out;
  if (s.empty()) return out;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t comma = s.find(',', pos);
    std::string tok = s.substr(pos, comma == std::string::npos
                                        ? std::string::npos
                                        : comma - pos);
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad natural in sequence: '" + tok + "'");
    out.emplace_back(tok);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

Bits parse_bits(const std::string& s) {
  Bits out;
  for (char ch : s) {
    if (ch != '0' && ch != '1')
      throw std::invalid_argument("bit string may only contain 0 and 1");
    out.push_back(ch == '1' ? 1 : 0);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"effective maximal eventually different family toolkit"};
  app.require_subcommand(1);

  std::string fspec_path, output_path;
  bool timings = false;
  app.add_option("--fspec", fspec_path, "bound function JSON file")
      ->required();
  app.add_option("--output", output_path, "write JSONL here (default stdout)");
  app.add_flag("--timings", timings, "include timings in verify reports");

  // growth-check
  auto* growth = app.add_subcommand("growth-check", "check the growth condition");
  uint64_t growth_upto = 8;
  growth->add_option("--up-to", growth_upto, "largest level checked");

  // classify
  auto* classify = app.add_subcommand("classify", "classify the bound regime");

  // reindex
  auto* reindex = app.add_subcommand("reindex", "compute the reindexing sequence");
  uint64_t reindex_count = 4, reindex_scan = 1'000'000;
  bool reindex_restrict = false;
  reindex->add_option("--count", reindex_count, "number of entries");
  reindex->add_option("--scan-bound", reindex_scan, "index scan bound");
  reindex->add_flag("--restrict-finite", reindex_restrict,
                    "draw entries from the finite-valued coordinates");

  // codec-selftest
  auto* codec = app.add_subcommand("codec-selftest", "round-trip both codecs");
  uint64_t codec_max = 10'000, codec_levels = 6;
  codec->add_option("--max-code", codec_max, "largest code round-tripped");
  codec->add_option("--level-bound", codec_levels,
                    "levels checked for appropriateness");

  // member
  auto* member = app.add_subcommand("member", "construct a family member prefix");
  std::string member_g, member_c;
  uint64_t member_horizon = 0;
  member->add_option("--g", member_g, "comma-separated values")->required();
  member->add_option("--c", member_c, "0/1 string")->required();
  member->add_option("--horizon", member_horizon,
                     "prefix length (default: full input)");

  // tree enum / tree check
  auto* tree_cmd = app.add_subcommand("tree", "tree node operations");
  tree_cmd->require_subcommand(1);
  auto* tree_enum = tree_cmd->add_subcommand("enum", "list nodes at a level");
  uint64_t tree_level = 2, tree_node_budget = 100'000;
  uint64_t tree_value_budget = 0;
  tree_enum->add_option("--level", tree_level, "node length")->required();
  tree_enum->add_option("--value-budget", tree_value_budget,
                        "cap values on infinite coordinates");
  tree_enum->add_option("--node-budget", tree_node_budget, "max nodes");
  auto* tree_check = tree_cmd->add_subcommand("check", "test one node");
  std::string tree_node_arg;
  tree_check->add_option("--node", tree_node_arg, "comma-separated values")
      ->required();

  // lift extend / lift check
  auto* lift_cmd = app.add_subcommand("lift", "lift between index sets");
  lift_cmd->require_subcommand(1);
  auto* lift_extend = lift_cmd->add_subcommand("extend", "lift a member");
  std::string lift_f;
  uint64_t lift_horizon = 16;
  bool lift_compact = false;
  lift_extend->add_option("--f", lift_f, "values on the entry set")->required();
  lift_extend->add_option("--horizon", lift_horizon, "lifted prefix length");
  lift_extend->add_flag("--compact", lift_compact, "compact variant");
  auto* lift_check = lift_cmd->add_subcommand("check", "test lifted membership");
  std::string lift_g;
  bool lift_check_compact = false;
  lift_check->add_option("--g", lift_g, "full-space prefix")->required();
  lift_check->add_flag("--compact", lift_check_compact, "compact variant");

  // probe
  auto* probe_cmd = app.add_subcommand("probe", "search for an agreeing member");
  std::string probe_g, probe_strategy = "direct";
  uint64_t probe_min = 1, probe_max_stem = 6;
  probe_cmd->add_option("--g", probe_g, "target prefix")->required();
  probe_cmd->add_option("--min-agreements", probe_min, "success threshold");
  probe_cmd->add_option("--strategy", probe_strategy, "literal or direct")
      ->check(CLI::IsMember({"literal", "direct"}));
  probe_cmd->add_option("--max-stem", probe_max_stem, "stem search bound");

  // verify
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string verify_suite;
  uint64_t verify_horizon = 3, verify_samples = 0, verify_seed = 1;
  uint64_t verify_cap = 0, verify_budget = 2'000'000;
  bool verify_compact = false;
  verify->add_option("--suite", verify_suite, "ad, ed, tree, lift, or all")
      ->required()
      ->check(CLI::IsMember({"ad", "ed", "tree", "lift", "all"}));
  verify->add_option("--horizon", verify_horizon, "context length");
  verify->add_option("--samples", verify_samples,
                     "randomized pair count (0 = exhaustive)");
  verify->add_option("--seed", verify_seed, "sampling seed");
  verify->add_option("--value-cap", verify_cap,
                     "cap values on infinite coordinates");
  verify->add_option("--budget", verify_budget, "enumeration budget");
  verify->add_flag("--compact", verify_compact, "compact-mode lift checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp") {
      app.exit(e);
      return kOk;
    }
    std::cerr << e.what() << "\n";
    return kUsage;
  }

  Output out;
  BoundSpec spec;
  try {
    out.open(output_path);
    spec = edf::json_io::load_fspec(fspec_path);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*growth) {
      auto rep = edf::bounds::check_growth(spec, growth_upto);
      json j = {{"op", "growth-check"},
                {"up_to", growth_upto},
                {"pass", rep.pass},
                {"lhs", edf::json_io::extnat_to_json(rep.lhs)},
                {"rhs", edf::json_io::extnat_to_json(rep.rhs)}};
      if (!rep.pass) j["first_fail"] = rep.first_fail;
      out.emit(j);
      return rep.pass ? kOk : kViolated;
    }

    if (*classify) {
      auto rep = edf::bounds::classify_regime(spec);
      const char* name =
          rep.regime == edf::bounds::Regime::LiminfFinite ? "liminf_finite"
          : rep.regime == edf::bounds::Regime::LimInfinite ? "lim_infinite"
                                                           : "mixed_compactable";
      out.emit({{"op", "classify"},
                {"regime", name},
                {"liminf", edf::json_io::extnat_to_json(rep.liminf)},
                {"finite_infinitely_often", rep.finite_infinitely_often}});
      return kOk;
    }

    if (*reindex) {
      edf::bounds::ReindexOptions opts;
      opts.restrict_to_finite = reindex_restrict;
      opts.scan_bound = reindex_scan;
      try {
        auto entries = edf::bounds::reindex_sequence(spec, reindex_count, opts);
        out.emit({{"op", "reindex"}, {"entries", entries}});
        return kOk;
      } catch (const edf::bounds::ScanBoundExceeded& e) {
        out.emit({{"op", "reindex"}, {"error", e.what()}});
        return kInconclusive;
      }
    }

    if (*codec) {
      // Check appropriateness first: on a failing bound the pair encoder
      // refuses some decoded pairs, so round-trips are only meaningful
      // once the witness search has come back clean.
      auto rep = edf::coding::verify_appropriate(spec, codec_levels);
      if (!rep.pass) {
        out.emit({{"op", "codec-selftest"},
                  {"pass", false},
                  {"kind", "appropriateness"},
                  {"witness_level", rep.witness_level},
                  {"witness_code", edf::json_io::nat_to_json(rep.witness_code)},
                  {"pairs_checked", rep.pairs_checked}});
        return kViolated;
      }
      for (Nat code = 0; code <= codec_max; ++code) {
        FinSeq s = edf::coding::decode_seq(code);
        if (edf::coding::encode_seq(s) != code) {
          out.emit({{"op", "codec-selftest"},
                    {"pass", false},
                    {"kind", "sequence-codec"},
                    {"code", edf::json_io::nat_to_json(code)}});
          return kViolated;
        }
        auto p = edf::coding::decode_pair(spec, code);
        if (edf::coding::encode_pair(spec, p) != code) {
          out.emit({{"op", "codec-selftest"},
                    {"pass", false},
                    {"kind", "pair-codec"},
                    {"code", edf::json_io::nat_to_json(code)}});
          return kViolated;
        }
      }
      out.emit({{"op", "codec-selftest"},
                {"pass", true},
                {"codes_round_tripped", codec_max + 1},
                {"pairs_checked", rep.pairs_checked}});
      return kOk;
    }

    if (*member) {
      FinSeq g = parse_seq(member_g);
      Bits c = parse_bits(member_c);
      uint64_t horizon = member_horizon ? member_horizon : g.size();
      if (horizon > g.size() || g.size() != c.size()) {
        std::cerr << "member: need |g| = |c| >= horizon\n";
        return kUsage;
      }
      edf::core::ConstructionContext ctx(spec, g, c);
      FinSeq eh = edf::core::e_hat_prefix(ctx, horizon);
      FinSeq e = edf::core::e_prefix(ctx, horizon);
      auto nu = edf::core::marked_set(ctx);
      out.emit({{"op", "member"},
                {"e_hat", edf::json_io::finseq_to_json(eh)},
                {"e", edf::json_io::finseq_to_json(e)},
                {"marked_set", edf::json_io::finseq_to_json(nu)},
                {"good", edf::core::is_good(c)}});
      return kOk;
    }

    if (*tree_enum) {
      std::optional<Nat> cap;
      if (tree_value_budget) cap = Nat(tree_value_budget);
      try {
        auto nodes =
            edf::tree::level_set(spec, tree_level, cap, tree_node_budget);
        for (const FinSeq& f : nodes)
          out.emit({{"f", edf::json_io::finseq_to_json(f)}, {"valid", true}});
        return kOk;
      } catch (const std::length_error& e) {
        std::cerr << e.what() << "\n";
        return kInconclusive;
      }
    }

    if (*tree_check) {
      FinSeq f = parse_seq(tree_node_arg);
      bool valid = edf::tree::is_tree_node(spec, f);
      out.emit({{"op", "tree-check"},
                {"f", edf::json_io::finseq_to_json(f)},
                {"valid", valid}});
      return valid ? kOk : kViolated;
    }

    if (*lift_extend) {
      auto ctx = edf::lift::make_lift_context(spec, lift_horizon, lift_compact);
      FinSeq f = parse_seq(lift_f);
      try {
        FinSeq lifted = edf::lift::lift_member_prefix(ctx, f, lift_horizon);
        out.emit({{"op", "lift-extend"},
                  {"entries", ctx.entries},
                  {"lifted", edf::json_io::finseq_to_json(lifted)}});
        return kOk;
      } catch (const std::invalid_argument& e) {
        out.emit({{"op", "lift-extend"}, {"error", e.what()}});
        return kViolated;
      }
    }

    if (*lift_check) {
      FinSeq g = parse_seq(lift_g);
      auto ctx =
          edf::lift::make_lift_context(spec, g.size(), lift_check_compact);
      bool member_ok = edf::lift::lift_membership(ctx, g);
      out.emit({{"op", "lift-check"},
                {"entries", ctx.entries},
                {"member", member_ok}});
      return member_ok ? kOk : kViolated;
    }

    if (*probe_cmd) {
      FinSeq g = parse_seq(probe_g);
      auto strategy = probe_strategy == "literal"
                          ? edf::probe::Strategy::Literal
                          : edf::probe::Strategy::Direct;
      auto res =
          edf::probe::match_finder(spec, g, probe_min, strategy, probe_max_stem);
      if (!res) {
        out.emit({{"op", "probe"}, {"found", false}});
        return kInconclusive;
      }
      const char* via = res->via == edf::probe::MatchResult::Via::SelfMatch
                            ? "self"
                        : res->via == edf::probe::MatchResult::Via::Case1
                            ? "case1"
                            : "case2";
      out.emit({{"op", "probe"},
                {"found", true},
                {"via", via},
                {"member", edf::json_io::finseq_to_json(res->member)},
                {"agreements", res->agreement_positions}});
      return kOk;
    }

    if (*verify) {
      edf::oracle::SuiteOptions opts;
      opts.horizon = verify_horizon;
      opts.samples = verify_samples;
      opts.seed = verify_seed;
      opts.value_cap = verify_cap;
      opts.budget = verify_budget;
      opts.compact = verify_compact;

      std::vector<std::string> suites;
      if (verify_suite == "all")
        suites = {"ad", "ed", "tree", "lift"};
      else
        suites = {verify_suite};

      bool all_pass = true;
      try {
        for (const std::string& s : suites) {
          edf::oracle::VerifyReport rep;
          if (s == "ad") rep = edf::oracle::verify_ad_suite(spec, opts);
          else if (s == "ed") rep = edf::oracle::verify_ed_suite(spec, opts);
          else if (s == "tree") rep = edf::oracle::verify_tree_suite(spec, opts);
          else rep = edf::oracle::verify_lift_suite(spec, opts);
          out.emit(edf::oracle::report_to_json(rep, timings));
          all_pass = all_pass && rep.pass;
        }
      } catch (const std::length_error& e) {
        std::cerr << e.what() << "\n";
        return kInconclusive;
      }
      return all_pass ? kOk : kViolated;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
