// Command-line front door: field inspection, point counting, quotient
// verification, cover decision/construction, maximal-curve construction,
// N_q(3) tables, the m-sequence, and verification sweeps.
//
// Exit codes: 0 success, 1 violated invariant (sweep/identity failures,
// requested construction impossible), 2 usage error.
#include <cstdint>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "g3/covers.hpp"
#include "g3/maximal.hpp"
#include "g3/quotients.hpp"
#include "g3/serialize.hpp"
#include "json.hpp"

using nlohmann::json;
using namespace g3;

namespace {

struct Config {
  int n = 0;
  std::string modulus_hex;
  std::uint64_t seed = 0;
  std::string format = "json";  // json | csv | pretty
};

Field make_field(const Config& cfg) {
  if (cfg.n < 1) throw CLI::ValidationError("--n", "field degree is required");
  if (cfg.modulus_hex.empty()) return Field(cfg.n);
  Fe mod = 0;
  for (char c : cfg.modulus_hex) {
    int d;
    if (c >= '0' && c <= '9') d = c - '0';
    else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
    else throw std::invalid_argument(std::string("invalid hex digit '") + c + "' in modulus");
    mod = mod * 16 + d;
  }
  return Field(cfg.n, mod);
}

void add_field_opts(CLI::App* cmd, Config& cfg) {
  cmd->add_option("--n", cfg.n, "extension degree n of GF(2^n)")->required();
  cmd->add_option("--modulus", cfg.modulus_hex,
                  "modulus polynomial as a hex bitmask (default: smallest irreducible)");
}

void add_format_opt(CLI::App* cmd, Config& cfg) {
  cmd->add_option("--format", cfg.format, "output format: json, csv or pretty")
      ->check(CLI::IsMember({"json", "csv", "pretty"}));
}

json triple_json(const Field& k, const EllipticTriple& t) {
  json arr = json::array();
  if (t.ordinary())
    for (const auto& e : t.ord()) arr.push_back(serialize(k, e));
  else
    for (const auto& e : t.ss()) arr.push_back(serialize(k, e));
  return arr;
}

json witness_json(const Field& k, const CoverWitness& w) {
  return json{{"curve", serialize(k, w.curve)},
              {"family", family_tag(w.curve)},
              {"permutation", w.permutation}};
}

json report_json(const Field* k, const MaximalReport& rep) {
  json j{{"n", rep.n},        {"q", rep.q},
         {"m", rep.m},        {"m_mod8", rep.m_mod8},
         {"status", to_string(rep.status)}};
  j["frac_below_threshold"] = rep.frac_below ? json(*rep.frac_below) : json();
  j["nq3_lo"] = rep.nq3_lo ? json(*rep.nq3_lo) : json();
  j["nq3_hi"] = rep.nq3_hi ? json(*rep.nq3_hi) : json();
  j["witness"] = rep.witness && k ? json(serialize(*k, *rep.witness)) : json();
  j["count"] = rep.count ? json(*rep.count) : json();
  return j;
}

// Parse "--sgn 0,1,0" into signature elements {0, r0}.
std::array<Fe, 3> parse_sgn(const Field& k, const std::string& s) {
  std::array<Fe, 3> out{};
  int idx = 0;
  for (size_t pos = 0; pos < s.size() && idx < 3;) {
    size_t comma = s.find(',', pos);
    if (comma == std::string::npos) comma = s.size();
    const std::string item = s.substr(pos, comma - pos);
    if (item == "0") out[idx] = 0;
    else if (item == "1") out[idx] = k.r0();
    else throw std::invalid_argument("--sgn entries must be 0 or 1, got '" + item + "'");
    ++idx;
    pos = comma + 1;
  }
  if (idx != 3) throw std::invalid_argument("--sgn needs exactly three comma-separated bits");
  return out;
}

std::array<long long, 3> parse_traces(const std::string& s) {
  std::array<long long, 3> out{};
  int idx = 0;
  for (size_t pos = 0; pos < s.size() && idx < 3;) {
    size_t comma = s.find(',', pos);
    if (comma == std::string::npos) comma = s.size();
    out[idx++] = std::stoll(s.substr(pos, comma - pos));
    pos = comma + 1;
  }
  if (idx != 3) throw std::invalid_argument("--traces needs exactly three integers");
  return out;
}

// Triple input shared by cover-exists / cover-construct: either three
// (j, sgn) pairs or three serialized ordinary curves.
struct TripleArgs {
  std::string j1, j2, j3, sgn;
  std::vector<std::string> curves;
};

void add_triple_opts(CLI::App* cmd, TripleArgs& args) {
  cmd->add_option("--j1", args.j1, "j-invariant of E1 (hex)");
  cmd->add_option("--j2", args.j2, "j-invariant of E2 (hex)");
  cmd->add_option("--j3", args.j3, "j-invariant of E3 (hex)");
  cmd->add_option("--sgn", args.sgn, "signature bits of the triple, e.g. 0,1,0");
  cmd->add_option("--curve", args.curves,
                  "alternative: three serialized ordinary curves (repeat the flag)")
      ->expected(0, 3);
}

TripleInvariants triple_from_args(const Field& k, const TripleArgs& args) {
  if (args.curves.size() == 3) {
    std::array<WeierstrassOrd, 3> es;
    for (int i = 0; i < 3; ++i) {
      const auto e = parse_elliptic(k, args.curves[i]);
      if (!std::holds_alternative<WeierstrassOrd>(e))
        throw std::invalid_argument("cover decisions take ordinary curves");
      es[i] = std::get<WeierstrassOrd>(e);
      if (es[i].a == 0) throw std::invalid_argument("ordinary curve needs a != 0");
    }
    return triple_invariants(k, es[0], es[1], es[2]);
  }
  if (args.j1.empty() || args.j2.empty() || args.j3.empty() || args.sgn.empty())
    throw std::invalid_argument("give --j1/--j2/--j3 and --sgn, or three --curve entries");
  return make_triple_invariants(
      k, {fe_from_hex(k, args.j1), fe_from_hex(k, args.j2), fe_from_hex(k, args.j3)},
      parse_sgn(k, args.sgn));
}

json invariants_json(const Field& k, const TripleInvariants& t) {
  json j{{"j", {to_hex(t.j[0]), to_hex(t.j[1]), to_hex(t.j[2])}},
         {"sgn", {t.sgn[0] ? 1 : 0, t.sgn[1] ? 1 : 0, t.sgn[2] ? 1 : 0}},
         {"sgn_sum", to_hex(t.sgn_sum)},
         {"ta", to_hex(t.ta)}};
  j["tb"] = t.tb ? json(to_hex(*t.tb)) : json();
  return j;
}

int run_sweep(const Field& k, const std::string& family, bool exhaustive_flag,
              std::uint64_t samples, std::uint64_t seed) {
  // Policy: exhaustive when tuple count x per-curve cost stays within 1e8
  // elementary field operations; otherwise seeded sampling.
  const double q = static_cast<double>(k.order());
  const bool quartic = family_index(family) >= 2;
  const double per_curve = (quartic ? q * q : 2 * q) + 3 * q;
  const double est = estimated_tuple_count(k, family) * per_curve;
  bool exhaustive = exhaustive_flag || (samples == 0 && est <= 1e8);

  long long curves = 0, failures = 0;
  const auto visit = [&](const Genus3Curve& c) {
    ++curves;
    const auto rep = verify_isogeny(k, c);
    if (!rep.ok) {
      ++failures;
      std::cout << json{{"curve", serialize(k, c)},
                        {"count", rep.count},
                        {"trace_sum", rep.trace_sum},
                        {"expected", rep.expected},
                        {"ok", false}}
                       .dump()
                << "\n";
    }
  };
  if (exhaustive) {
    for_each_valid_tuple(k, family, visit);
  } else {
    if (samples == 0) samples = 1000;
    std::mt19937_64 rng(seed);
    for (std::uint64_t i = 0; i < samples; ++i) visit(random_valid_tuple(k, family, rng));
  }
  json summary{{"family", family},
               {"n", k.degree()},
               {"mode", exhaustive ? "exhaustive" : "sampled"},
               {"curves", curves},
               {"failures", failures}};
  if (!exhaustive) {
    summary["seed"] = seed;
    summary["coverage"] = static_cast<double>(curves) / estimated_tuple_count(k, family);
  }
  std::cout << summary.dump() << std::endl;
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"genus-3 curves with split Jacobians over GF(2^n): counting, elliptic "
               "quotients, Artin-Schreier covers, and maximal-curve tables"};
  app.require_subcommand(1);
  Config cfg;

  // field-info
  auto* cmd_info = app.add_subcommand("field-info", "describe GF(2^n) and its constants");
  add_field_opts(cmd_info, cfg);
  add_format_opt(cmd_info, cfg);

  // count
  std::string curve_str;
  auto* cmd_count = app.add_subcommand("count", "count rational points of a genus-3 curve");
  add_field_opts(cmd_count, cfg);
  cmd_count->add_option("--curve", curve_str, "serialized curve, e.g. hypa:a=1,r=0,t=2")
      ->required();

  // quotients
  auto* cmd_quot = app.add_subcommand("quotients", "the three elliptic quotients");
  add_field_opts(cmd_quot, cfg);
  cmd_quot->add_option("--curve", curve_str, "serialized genus-3 curve")->required();

  // verify-isogeny
  auto* cmd_verify = app.add_subcommand(
      "verify-isogeny", "check #C = q+1 - (tr E1 + tr E2 + tr E3) for one curve");
  add_field_opts(cmd_verify, cfg);
  cmd_verify->add_option("--curve", curve_str, "serialized genus-3 curve")->required();

  // cover-exists / cover-construct
  TripleArgs triple_args;
  auto* cmd_exists = app.add_subcommand(
      "cover-exists", "decide hyperelliptic and non-hyperelliptic cover existence");
  add_field_opts(cmd_exists, cfg);
  add_triple_opts(cmd_exists, triple_args);

  std::string kind = "nonhyp";
  auto* cmd_construct =
      app.add_subcommand("cover-construct", "construct a cover witness of the given kind");
  add_field_opts(cmd_construct, cfg);
  add_triple_opts(cmd_construct, triple_args);
  cmd_construct->add_option("--kind", kind, "hyp or nonhyp")
      ->check(CLI::IsMember({"hyp", "nonhyp"}));

  // ss-cover-search
  std::string traces_str;
  std::uint64_t max_candidates = 200000000;
  auto* cmd_ss = app.add_subcommand("ss-cover-search",
                                    "search the SS family for a trace-multiset match");
  add_field_opts(cmd_ss, cfg);
  cmd_ss->add_option("--traces", traces_str, "target traces, e.g. 0,4,-4")->required();
  cmd_ss->add_option("--max-candidates", max_candidates, "search budget in (f,g,d,e) tuples");

  // maximal
  int defect = -1;
  bool minimal = false;
  auto* cmd_max = app.add_subcommand("maximal", "construct a defect-0/3 (or minimal) curve");
  cmd_max->add_option("--n", cfg.n, "odd extension degree")->required();
  cmd_max->add_option("--defect", defect, "0 or 3 (default: by the class of m mod 8)")
      ->check(CLI::IsMember({0, 3}));
  cmd_max->add_flag("--minimal", minimal, "construct the trace +m minimal-curve analogue");

  // nq3-table
  int n_max = 13;
  auto* cmd_table = app.add_subcommand("nq3-table", "N_q(3) reports for odd n up to --n-max");
  cmd_table->add_option("--n-max", n_max, "largest degree (witnesses attached for n <= 13)")
      ->required();
  add_format_opt(cmd_table, cfg);

  // m-seq
  int count = 64;
  auto* cmd_mseq = app.add_subcommand("m-seq", "the m_n sequence with its recurrence bits");
  cmd_mseq->add_option("--count", count, "number of entries (<= 200)")->required();
  add_format_opt(cmd_mseq, cfg);

  // sweep
  std::string family = "hypa";
  bool exhaustive = false;
  std::uint64_t samples = 0;
  auto* cmd_sweep =
      app.add_subcommand("sweep", "verify the counting identity across parameter tuples");
  add_field_opts(cmd_sweep, cfg);
  cmd_sweep->add_option("--family", family, "hypa, hypb, ss, nhypa, nhypb or all")->required();
  auto* ex_flag = cmd_sweep->add_flag("--exhaustive", exhaustive, "visit every valid tuple");
  cmd_sweep->add_option("--samples", samples, "sampled sweep size")->excludes(ex_flag);
  cmd_sweep->add_option("--seed", cfg.seed, "seed for sampled sweeps");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_info->parsed()) {
      const Field k = make_field(cfg);
      if (cfg.format == "pretty") {
        std::cout << "GF(2^" << k.degree() << "), q = " << k.order() << "\n"
                  << "modulus = " << to_hex(k.modulus()) << " (bitmask, bit i <-> x^i)\n"
                  << "r0 = " << to_hex(k.r0()) << " (trace-1 representative)\n";
      } else {
        std::cout << json{{"n", k.degree()},
                          {"q", k.order()},
                          {"modulus", to_hex(k.modulus())},
                          {"r0", to_hex(k.r0())}}
                         .dump()
                  << std::endl;
      }
      return 0;
    }
    if (cmd_count->parsed()) {
      const Field k = make_field(cfg);
      const auto c = parse_genus3(k, curve_str);
      std::cout << json{{"curve", serialize(k, c)},
                        {"n", k.degree()},
                        {"count", count_points(k, c)}}
                       .dump()
                << std::endl;
      return 0;
    }
    if (cmd_quot->parsed()) {
      const Field k = make_field(cfg);
      const auto c = parse_genus3(k, curve_str);
      const auto triple = quotients_of(k, c);
      json out{{"curve", serialize(k, c)}, {"triple", triple_json(k, triple)}};
      out["traces"] = traces_of(k, triple);
      if (triple.ordinary()) {
        json js = json::array(), sg = json::array();
        for (const auto& e : triple.ord()) {
          js.push_back(to_hex(j_invariant(k, e)));
          sg.push_back(signature(k, e) ? 1 : 0);
        }
        out["j"] = js;
        out["sgn"] = sg;
      }
      std::cout << out.dump() << std::endl;
      return 0;
    }
    if (cmd_verify->parsed()) {
      const Field k = make_field(cfg);
      const auto c = parse_genus3(k, curve_str);
      const auto rep = verify_isogeny(k, c);
      std::cout << json{{"curve", serialize(k, c)},
                        {"triple", triple_json(k, rep.triple)},
                        {"count", rep.count},
                        {"trace_sum", rep.trace_sum},
                        {"expected", rep.expected},
                        {"ok", rep.ok}}
                       .dump()
                << std::endl;
      return rep.ok ? 0 : 1;
    }
    if (cmd_exists->parsed()) {
      const Field k = make_field(cfg);
      const auto t = triple_from_args(k, triple_args);
      json out{{"invariants", invariants_json(k, t)}};
      const auto wh = exists_hyp_cover(k, t);
      const auto wn = exists_nonhyp_cover(k, t);
      out["hyp"] = json{{"exists", wh.has_value()}};
      if (wh) out["hyp"]["witness"] = witness_json(k, *wh);
      out["nonhyp"] = json{{"exists", wn.has_value()}};
      if (wn) out["nonhyp"]["witness"] = witness_json(k, *wn);
      std::cout << out.dump() << std::endl;
      return 0;
    }
    if (cmd_construct->parsed()) {
      const Field k = make_field(cfg);
      const auto t = triple_from_args(k, triple_args);
      const auto w = kind == "hyp" ? exists_hyp_cover(k, t) : exists_nonhyp_cover(k, t);
      json out{{"kind", kind}, {"found", w.has_value()}};
      if (w) out["witness"] = witness_json(k, *w);
      std::cout << out.dump() << std::endl;
      return w ? 0 : 1;
    }
    if (cmd_ss->parsed()) {
      const Field k = make_field(cfg);
      const auto res = exists_ss_cover(k, parse_traces(traces_str), max_candidates);
      json out{{"tried", res.tried}};
      switch (res.status) {
        case SearchStatus::found: out["status"] = "found"; break;
        case SearchStatus::none: out["status"] = "none"; break;
        case SearchStatus::exhausted: out["status"] = "exhausted"; break;
      }
      if (res.witness) out["witness"] = witness_json(k, *res.witness);
      std::cout << out.dump() << std::endl;
      if (res.status == SearchStatus::exhausted) {
        std::cerr << "error: search budget of " << max_candidates
                  << " candidates exhausted before covering the space" << std::endl;
        return 2;
      }
      return 0;
    }
    if (cmd_max->parsed()) {
      MaximalReport rep;
      if (minimal) rep = construct_minimal(cfg.n);
      else if (defect == 0) rep = construct_defect0(cfg.n);
      else if (defect == 3) rep = construct_defect3(cfg.n);
      else {
        const int cls = static_cast<int>(m_of(cfg.n) % 8);
        rep = (cls == 1 || cls == 5 || cls == 7) ? construct_defect0(cfg.n)
                                                 : construct_defect3(cfg.n);
      }
      std::optional<Field> k;
      if (rep.witness) k.emplace(cfg.n);
      std::cout << report_json(k ? &*k : nullptr, rep).dump() << std::endl;
      return rep.status == MaxStatus::not_covered ? 1 : 0;
    }
    if (cmd_table->parsed()) {
      if (cfg.format == "csv") std::cout << "n,q,m,class,status,nq3_lo,nq3_hi,witness\n";
      for (int n = 1; n <= n_max; n += 2) {
        const auto rep = nq3(n);
        std::optional<Field> k;
        if (rep.witness) k.emplace(n);
        if (cfg.format == "csv") {
          std::cout << rep.n << "," << rep.q << "," << rep.m << "," << rep.m_mod8 << ","
                    << to_string(rep.status) << ","
                    << (rep.nq3_lo ? std::to_string(*rep.nq3_lo) : "") << ","
                    << (rep.nq3_hi ? std::to_string(*rep.nq3_hi) : "") << ","
                    << (rep.witness && k ? serialize(*k, *rep.witness) : "") << "\n";
        } else {
          std::cout << report_json(k ? &*k : nullptr, rep).dump() << "\n";
        }
      }
      std::cout.flush();
      return 0;
    }
    if (cmd_mseq->parsed()) {
      const auto seq = m_sequence(count);
      long long res1 = 0, res2 = 0;
      for (const auto& e : seq) {
        if (e.residue4 == 1) ++res1;
        if (e.residue4 == 2) ++res2;
        if (cfg.format == "csv")
          std::cout << e.n << "," << e.m.get_str() << "," << (e.eps_half ? 1 : 0) << ","
                    << e.residue4 << "\n";
        else
          std::cout << json{{"n", e.n},
                            {"m", e.m.get_str()},
                            {"eps_half", e.eps_half},
                            {"residue4", e.residue4}}
                           .dump()
                    << "\n";
      }
      if (cfg.format == "csv")
        std::cout << "# tallies mod 4: 1 -> " << res1 << ", 2 -> " << res2 << "\n";
      else
        std::cout << json{{"tally_mod4_1", res1}, {"tally_mod4_2", res2}}.dump() << "\n";
      std::cout.flush();
      return 0;
    }
    if (cmd_sweep->parsed()) {
      const Field k = make_field(cfg);
      if (family == "all") {
        int rc = 0;
        for (const char* fam : {"hypa", "hypb", "ss", "nhypa", "nhypb"})
          rc |= run_sweep(k, fam, exhaustive, samples, cfg.seed);
        return rc;
      }
      if (family_index(family) < 0)
        throw std::invalid_argument("unknown family '" + family + "'");
      return run_sweep(k, family, exhaustive, samples, cfg.seed);
    }
  } catch (const std::invalid_argument& ex) {
    std::cerr << "error: " << ex.what() << std::endl;
    return 2;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << std::endl;
    return 1;
  }
  return 2;
}
