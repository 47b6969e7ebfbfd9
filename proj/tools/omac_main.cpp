/*
 * Copyright 2026 the omac authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

// Command-line test bench: generate instance families, run the online
// algorithms, query the offline oracle, sweep parameter grids to CSV, and
// execute the acceptance suite. Exit codes: 0 success, 1 acceptance-criterion
// failure, 2 usage or input error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "omac/acceptance.hpp"
#include "omac/engine.hpp"
#include "omac/families.hpp"
#include "omac/io.hpp"
#include "omac/model.hpp"
#include "omac/oks.hpp"
#include "omac/oracle.hpp"

namespace {

using nlohmann::json;
using namespace omac;

constexpr const char* kVersion = "1.0.0";

std::vector<std::string> split_list(const std::string& csv) {
  std::vector<std::string> out;
  std::stringstream ss(csv);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (!part.empty()) out.push_back(part);
  }
  return out;
}

std::vector<Rational> parse_rational_list(const std::string& csv) {
  std::vector<Rational> out;
  for (const std::string& s : split_list(csv)) out.push_back(parse_rational(s));
  return out;
}

std::vector<int> parse_int_list(const std::string& csv) {
  std::vector<int> out;
  for (const std::string& s : split_list(csv)) out.push_back(std::stoi(s));
  return out;
}

json set_to_json_1based(const AgentSet& s) {
  json arr = json::array();
  for (AgentId i : s) arr.push_back(i + 1);
  return arr;
}

json trajectory_to_json(const Trajectory& t) {
  json steps = json::array();
  for (size_t i = 0; i < t.steps.size(); ++i) {
    const StepRecord& rec = t.steps[i];
    json s;
    s["step"] = i + 1;
    s["arrival"] = rec.arrival + 1;
    s["accepted"] = set_to_json_1based(rec.accepted);
    s["dismissed"] = set_to_json_1based(rec.dismissed);
    s["hired"] = rec.hired_count;
    s["utility"] = rec.utility.str();
    steps.push_back(s);
  }
  json out;
  out["algorithm"] = t.algorithm;
  out["steps"] = steps;
  out["final_set"] = set_to_json_1based(t.final_set);
  out["final_utility"] = t.final_utility.str();
  out["final_utility_decimal"] = t.final_utility.to_double();
  return out;
}

void emit(const json& j, const std::string& out_path, int argc, char** argv) {
  std::string text = j.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for writing: " + out_path);
  f << text;
  // Run metadata goes to a sidecar so report content stays deterministic.
  json meta;
  std::string cmd;
  for (int i = 0; i < argc; ++i) {
    if (i) cmd += ' ';
    cmd += argv[i];
  }
  meta["command"] = cmd;
  meta["tool_version"] = kVersion;
  meta["written_at_unix"] =
      std::chrono::duration_cast<std::chrono::seconds>(
          std::chrono::system_clock::now().time_since_epoch())
          .count();
  std::ofstream m(out_path + ".meta", std::ios::binary);
  if (m) m << meta.dump(2) << "\n";
}

Instance require_omac(const LoadedFile& f, const std::string& path) {
  if (f.instance) return *f.instance;
  if (f.oks) return phi_reduction(*f.oks);
  throw std::runtime_error(path + ": no usable instance");
}

// ---- gen -------------------------------------------------------------------

struct GenArgs {
  std::string family;
  std::string epsilon = "1/10";
  int n = 2;
  int m = 3;
  std::string q = "1";
  std::string beta = "1/2";
  std::string sigma;
  std::string out;
};

int cmd_gen(const GenArgs& a) {
  Rational eps = parse_rational(a.epsilon);
  if (a.family == "det_lb" || a.family == "rand_ub") {
    Instance inst = a.family == "det_lb" ? gen_det_lb(eps) : gen_rand_ub(eps);
    save_instance(inst, a.out);
  } else if (a.family == "xos_dist") {
    if (a.sigma.empty()) throw std::runtime_error("xos_dist needs --sigma (per-group indices)");
    Instance inst = gen_xos_instance(a.n, a.m, eps, parse_int_list(a.sigma));
    save_instance(inst, a.out);
  } else if (a.family == "example1") {
    save_instance(gen_example1(eps), a.out);
  } else if (a.family == "no_preempt") {
    save_instance(gen_no_preempt(a.n, eps, parse_rational(a.q)), a.out);
  } else if (a.family == "thm9_lb") {
    save_oks_instance(gen_thm9_lb_items(parse_rational(a.beta), eps), a.out);
  } else {
    throw std::runtime_error("unknown family '" + a.family +
                             "' (det_lb, rand_ub, xos_dist, example1, no_preempt, thm9_lb)");
  }
  std::cerr << "wrote " << a.out << "\n";
  return 0;
}

// ---- run / cr ----------------------------------------------------------------

struct RunArgs {
  std::string alg = "bp";
  std::string input;
  std::string out;
  std::string beta = "1/2";
  bool want_cr = false;
  bool sampled = false;
  std::uint64_t seed = 0;
};

json cr_to_json(const PrefixAdversaryResult& adv) {
  json out;
  out["worst_prefix"] = adv.worst_prefix;
  out["worst_cr"] = adv.worst_cr.str();
  out["worst_cr_decimal"] = adv.worst_cr.to_double();
  json per = json::array();
  for (size_t i = 1; i < adv.per_prefix_cr.size(); ++i) {
    json row;
    row["prefix"] = i;
    row["utility"] = adv.per_prefix_utility[i].str();
    row["opt"] = adv.per_prefix_opt[i].str();
    row["cr"] = adv.per_prefix_cr[i].str();
    per.push_back(row);
  }
  out["per_prefix"] = per;
  return out;
}

int cmd_run(const RunArgs& a, int argc, char** argv) {
  auto kind = alg_from_name(a.alg);
  if (!kind) throw std::runtime_error("unknown algorithm '" + a.alg + "'");
  LoadedFile f = load_file(a.input);
  Instance inst = require_omac(f, a.input);

  OnlineAlgorithm alg;
  alg.kind = *kind;
  alg.analytic = !a.sampled;
  alg.seed = a.seed;
  alg.beta = parse_rational(a.beta);

  json report;
  report["version"] = 1;
  report["instance"] = inst.label;
  report["agents"] = inst.size();
  report["algorithm"] = a.alg;

  if (alg.kind == AlgKind::alg_omac && alg.analytic) {
    Trajectory bp = run_bp(inst);
    Trajectory mx = run_max(inst);
    report["expected_utility"] = alg_omac_expected_utility(inst).str();
    report["expected_utility_decimal"] = alg_omac_expected_utility(inst).to_double();
    report["bp"] = trajectory_to_json(bp);
    report["max"] = trajectory_to_json(mx);
  } else if (alg.kind == AlgKind::oks_beta) {
    Trajectory g = run_oks_beta_greedy(inst, alg.beta);
    Trajectory m = run_oks_beta_max(inst);
    report["beta"] = alg.beta.str();
    report["expected_utility"] = alg_omac_beta_expected(inst, alg.beta).str();
    report["expected_utility_decimal"] = alg_omac_beta_expected(inst, alg.beta).to_double();
    report["greedy"] = trajectory_to_json(g);
    report["max"] = trajectory_to_json(m);
  } else {
    Trajectory t = run_online(alg, inst);
    report["trajectory"] = trajectory_to_json(t);
  }
  if (a.want_cr) {
    report["cr"] = cr_to_json(adaptive_prefix_adversary(alg, inst));
  }
  emit(report, a.out, argc, argv);
  return 0;
}

int cmd_cr(const RunArgs& a, int argc, char** argv) {
  auto kind = alg_from_name(a.alg);
  if (!kind) throw std::runtime_error("unknown algorithm '" + a.alg + "'");
  LoadedFile f = load_file(a.input);
  Instance inst = require_omac(f, a.input);
  OnlineAlgorithm alg;
  alg.kind = *kind;
  alg.analytic = true;
  alg.beta = parse_rational(a.beta);
  json report;
  report["version"] = 1;
  report["instance"] = inst.label;
  report["algorithm"] = a.alg;
  report["cr"] = cr_to_json(adaptive_prefix_adversary(alg, inst));
  emit(report, a.out, argc, argv);
  return 0;
}

// ---- opt ---------------------------------------------------------------------

struct OptArgs {
  std::string input;
  std::string out;
  bool prefixes = false;
};

int cmd_opt(const OptArgs& a, int argc, char** argv) {
  LoadedFile f = load_file(a.input);
  Instance inst = require_omac(f, a.input);
  json report;
  report["version"] = 1;
  report["instance"] = inst.label;
  report["agents"] = inst.size();
  if (a.prefixes) {
    OracleResult r = prefix_opts(inst);
    report["opt_set"] = set_to_json_1based(r.best_set);
    report["opt"] = r.best_value.str();
    report["opt_decimal"] = r.best_value.to_double();
    json per = json::array();
    for (size_t i = 0; i < r.per_prefix.size(); ++i) {
      json row;
      row["prefix"] = i;
      row["opt"] = r.per_prefix[i].str();
      per.push_back(row);
    }
    report["per_prefix"] = per;
  } else {
    auto [set, value] = brute_force_opt(inst, inst.size());
    report["opt_set"] = set_to_json_1based(set);
    report["opt"] = value.str();
    report["opt_decimal"] = value.to_double();
  }
  emit(report, a.out, argc, argv);
  return 0;
}

// ---- sweep ---------------------------------------------------------------------

struct SweepArgs {
  std::string family;
  std::string epsilons;  // comma list
  std::string ns;        // comma list (xos/no_preempt)
  std::string m = "3";
  std::string q = "1";
  std::string betas;  // comma list; also enables the oks-beta column
  std::string out;
};

struct SweepPoint {
  Instance inst;
  std::string epsilon;
  std::string n;
  std::string m;
  std::string q;
  std::string beta;  // value used for the oks-beta column ("" = skip)
};

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

int cmd_sweep(const SweepArgs& a, int /*argc*/, char** /*argv*/) {
  std::vector<SweepPoint> points;
  std::vector<Rational> eps_list = parse_rational_list(a.epsilons);
  std::vector<Rational> beta_list =
      a.betas.empty() ? std::vector<Rational>{} : parse_rational_list(a.betas);
  if (!a.family.empty()) {
    for (const Rational& eps : eps_list) {
      if (a.family == "det_lb" || a.family == "rand_ub") {
        SweepPoint p;
        p.inst = a.family == "det_lb" ? gen_det_lb(eps) : gen_rand_ub(eps);
        p.epsilon = eps.str();
        points.push_back(std::move(p));
      } else if (a.family == "no_preempt") {
        for (int n : parse_int_list(a.ns)) {
          SweepPoint p;
          p.inst = gen_no_preempt(n, eps, parse_rational(a.q));
          p.epsilon = eps.str();
          p.n = std::to_string(n);
          p.q = a.q;
          points.push_back(std::move(p));
        }
      } else if (a.family == "thm9_lb") {
        for (const Rational& beta : beta_list) {
          SweepPoint p;
          p.inst = gen_thm9_lb(beta, eps);
          p.epsilon = eps.str();
          p.beta = beta.str();
          points.push_back(std::move(p));
        }
      } else {
        throw std::runtime_error("sweep supports det_lb, rand_ub, no_preempt, thm9_lb");
      }
    }
  }

  std::ostringstream csv;
  csv << "family,epsilon,n,m,q,beta,agents,opt,g_bp,g_max,omac_expected,oks_beta_expected,"
         "worst_cr_bp,worst_cr_max,worst_cr_omac,worst_cr_oks_beta,opt_decimal,"
         "worst_cr_bp_decimal,worst_cr_max_decimal,worst_cr_omac_decimal,"
         "worst_cr_oks_beta_decimal\n";
  for (const SweepPoint& p : points) {
    const Instance& inst = p.inst;
    std::string family = inst.family ? inst.family->name : "custom";
    std::vector<std::string> cells(21, "");
    cells[0] = family;
    cells[1] = p.epsilon;
    cells[2] = p.n;
    cells[3] = p.m;
    cells[4] = p.q;
    cells[5] = p.beta;
    cells[6] = std::to_string(inst.size());
    try {
      OracleResult opts = prefix_opts(inst);
      OnlineAlgorithm bp{AlgKind::bp, true, 0, Rational()};
      OnlineAlgorithm mx{AlgKind::max, true, 0, Rational()};
      OnlineAlgorithm om{AlgKind::alg_omac, true, 0, Rational()};
      PrefixAdversaryResult abp = adaptive_prefix_adversary(bp, inst, {}, &opts.per_prefix);
      PrefixAdversaryResult amx = adaptive_prefix_adversary(mx, inst, {}, &opts.per_prefix);
      PrefixAdversaryResult aom = adaptive_prefix_adversary(om, inst, {}, &opts.per_prefix);
      cells[7] = opts.best_value.str();
      cells[8] = run_bp(inst).final_utility.str();
      cells[9] = run_max(inst).final_utility.str();
      cells[10] = alg_omac_expected_utility(inst).str();
      cells[12] = abp.worst_cr.str();
      cells[13] = amx.worst_cr.str();
      cells[14] = aom.worst_cr.str();
      cells[16] = std::to_string(opts.best_value.to_double());
      cells[17] = std::to_string(abp.worst_cr.to_double());
      cells[18] = std::to_string(amx.worst_cr.to_double());
      cells[19] = std::to_string(aom.worst_cr.to_double());
      if (!p.beta.empty()) {
        OnlineAlgorithm ob{AlgKind::oks_beta, true, 0, parse_rational(p.beta)};
        PrefixAdversaryResult aob = adaptive_prefix_adversary(ob, inst, {}, &opts.per_prefix);
        cells[11] = alg_omac_beta_expected(inst, parse_rational(p.beta)).str();
        cells[15] = aob.worst_cr.str();
        cells[20] = std::to_string(aob.worst_cr.to_double());
      }
    } catch (const OracleCapExceeded&) {
      for (size_t i = 7; i < cells.size(); ++i) cells[i] = "CAP";
    }
    for (size_t i = 0; i < cells.size(); ++i) {
      if (i) csv << ',';
      csv << csv_escape(cells[i]);
    }
    csv << "\n";
  }
  if (a.out.empty()) {
    std::cout << csv.str();
  } else {
    std::ofstream f(a.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + a.out);
    f << csv.str();
    std::cerr << "wrote " << a.out << " (" << points.size() << " rows)\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"omac: online multi-agent contract test bench"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  GenArgs gen;
  CLI::App* cgen = app.add_subcommand("gen", "generate an instance family to a file");
  cgen->add_option("--family", gen.family, "det_lb | rand_ub | xos_dist | example1 | no_preempt | thm9_lb")
      ->required();
  cgen->add_option("--epsilon", gen.epsilon, "rational p/q");
  cgen->add_option("--n", gen.n, "group size / agent count");
  cgen->add_option("--m", gen.m, "group count");
  cgen->add_option("--q", gen.q, "uniform quality (no_preempt)");
  cgen->add_option("--beta", gen.beta, "budget (thm9_lb)");
  cgen->add_option("--sigma", gen.sigma, "designated per-group indices, e.g. 1,1");
  cgen->add_option("-o,--out", gen.out, "output path")->required();

  RunArgs run;
  CLI::App* crun = app.add_subcommand("run", "run an online algorithm over an instance file");
  crun->add_option("--alg", run.alg, "bp | max | omac | oks-beta | noop")->required();
  crun->add_option("-i,--input", run.input, "instance file")->required();
  crun->add_option("-o,--out", run.out, "report path (stdout if omitted)");
  crun->add_option("--beta", run.beta, "threshold for oks-beta");
  crun->add_flag("--cr", run.want_cr, "also compute per-prefix competitive ratios");
  crun->add_flag("--sampled", run.sampled, "sample ALG-OMAC's coin instead of the exact mixture");
  crun->add_option("--seed", run.seed, "coin seed for --sampled");

  RunArgs cr;
  CLI::App* ccr = app.add_subcommand("cr", "worst-prefix competitive ratio of an algorithm");
  ccr->add_option("--alg", cr.alg, "bp | max | omac | oks-beta | noop")->required();
  ccr->add_option("-i,--input", cr.input, "instance file")->required();
  ccr->add_option("-o,--out", cr.out, "report path (stdout if omitted)");
  ccr->add_option("--beta", cr.beta, "threshold for oks-beta");

  OptArgs opt;
  CLI::App* copt = app.add_subcommand("opt", "exact offline optimum of an instance file");
  copt->add_option("-i,--input", opt.input, "instance file")->required();
  copt->add_option("-o,--out", opt.out, "report path (stdout if omitted)");
  copt->add_flag("--prefixes", opt.prefixes, "also report OPT of every arrival prefix");

  SweepArgs sweep;
  CLI::App* csweep = app.add_subcommand("sweep", "evaluate a family over a parameter grid (CSV)");
  csweep->add_option("--family", sweep.family, "det_lb | rand_ub | no_preempt | thm9_lb");
  csweep->add_option("--epsilon", sweep.epsilons, "comma-separated rationals");
  csweep->add_option("--n", sweep.ns, "comma-separated integers (no_preempt)");
  csweep->add_option("--q", sweep.q, "uniform quality (no_preempt)");
  csweep->add_option("--beta", sweep.betas, "comma-separated budgets (thm9_lb / oks-beta column)");
  csweep->add_option("-o,--out", sweep.out, "CSV path (stdout if omitted)");

  bool acceptance = false;
  std::string filter;
  CLI::App* csuite = app.add_subcommand("suite", "run the acceptance suite");
  csuite->add_flag("--acceptance", acceptance, "run every acceptance criterion (default)");
  csuite->add_option("--filter", filter, "only criteria whose name contains this substring");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cgen->parsed()) return cmd_gen(gen);
    if (crun->parsed()) return cmd_run(run, argc, argv);
    if (ccr->parsed()) return cmd_cr(cr, argc, argv);
    if (copt->parsed()) return cmd_opt(opt, argc, argv);
    if (csweep->parsed()) return cmd_sweep(sweep, argc, argv);
    if (csuite->parsed()) {
      auto outcomes = omac::acceptance::run_all(filter);
      return omac::acceptance::report(outcomes, std::cout);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
