#include "hyperwalk/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "hyperwalk/error.hpp"
#include "hyperwalk/schedule_enum.hpp"

namespace hyperwalk::cli {

using io::Json;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse:
    case ErrorCode::Validation:
    case ErrorCode::KeyMismatch:
    case ErrorCode::InvalidSchedule:
    case ErrorCode::IsolatedVertex:
    case ErrorCode::Domain:
      return kInputError;
    case ErrorCode::Overflow:
    case ErrorCode::Internal:
      return kInternal;
  }
  return kInternal;
}

std::uint64_t resolve_seed(std::optional<std::uint64_t> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("HYPERWALK_SEED"); env && *env) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0') return v;
    throw ParseError("HYPERWALK_SEED", "expected an unsigned integer");
  }
  return kDefaultSeed;
}

std::optional<int> parse_args(int argc, const char* const* argv, RunConfig& cfg,
                              std::string& message) {
  CLI::App app{"hyperwalk: loading schedules, exponent LPs and lemma checks"};
  app.require_subcommand(1);
  std::optional<std::uint64_t> seed;
  std::string output;
  app.add_option("--output", output, "Write the JSON report to this file");

  auto* schedules = app.add_subcommand("schedules", "Count, list or sample loading schedules");
  schedules->add_option("--pattern", cfg.pattern_path)->required();
  auto* count_only = schedules->add_flag("--count-only", "Only count complete schedules");
  auto* heuristic_s = schedules->add_flag("--heuristic", "Sample schedules heuristically");
  schedules->add_option("--budget", cfg.budget);
  schedules->add_option("--seed", seed);
  schedules->add_option("--limit", cfg.limit, "Schedules to list");
  schedules->add_option("--schedule", cfg.schedule_path, "Validate this schedule instead");

  auto* optimize = app.add_subcommand("optimize", "Minimize the cost exponent");
  optimize->add_option("--pattern", cfg.pattern_path)->required();
  auto* exhaustive = optimize->add_flag("--exhaustive");
  auto* heuristic_o = optimize->add_flag("--heuristic");
  optimize->add_option("--budget", cfg.budget);
  optimize->add_option("--seed", seed);
  optimize->add_option("--schedule", cfg.schedule_path,
                       "Fixed schedule, heuristic seed, or reference for --exhaustive");
  optimize->add_option("--margin", cfg.margin, "Strict-row margin p/q");
  optimize->add_option("--jobs", cfg.jobs);
  auto* no_prune = optimize->add_flag("--no-prune", "Solve every leaf LP");
  auto* strict_vertex_o = optimize->add_flag("--strict-vertex", "Keep n/r_i strict");

  auto* evaluate = app.add_subcommand("evaluate", "Cost exponent for fixed parameters");
  evaluate->add_option("--pattern", cfg.pattern_path)->required();
  evaluate->add_option("--schedule", cfg.schedule_path)->required();
  evaluate->add_option("--params", cfg.params_path)->required();
  auto* strict_vertex_e = evaluate->add_flag("--strict-vertex", "Keep n/r_i strict");

  auto* simulate = app.add_subcommand("simulate", "Monte-Carlo and exact lemma checks");
  simulate->add_option("--check", cfg.check)
      ->required()
      ->check(CLI::IsMember({"lambda-claim", "lemma3", "regularity", "vertex-swap", "pair-swap"}));
  simulate->add_option("--n", cfg.n);
  simulate->add_option("--params", cfg.params_path);
  simulate->add_option("--trials", cfg.trials);
  simulate->add_option("--seed", seed);

  auto* verify = app.add_subcommand("verify", "Verify tail bounds");
  verify->require_subcommand(1);
  auto* tails = verify->add_subcommand("tails", "Hypergeometric tail bounds");
  tails->add_option("--nmax", cfg.nmax);

  auto* find = app.add_subcommand("find", "Brute-force sub-hypergraph search");
  find->add_option("--pattern", cfg.pattern_path)->required();
  find->add_option("--instance", cfg.instance_path)->required();

  auto* assoc = app.add_subcommand("assoc", "Ternary associativity");
  assoc->require_subcommand(1);
  auto* check = assoc->add_subcommand("check", "Exhaustive associativity check");
  check->add_option("--table", cfg.table_path)->required();
  auto* certificate = assoc->add_subcommand("certificate", "Find a certificate");
  certificate->add_option("--table", cfg.table_path)->required();
  certificate->add_option("--case", cfg.assoc_case)->check(CLI::IsMember({"i", "ii"}));
  certificate->add_flag("--via-reduction", cfg.via_reduction,
                        "Search the weighted hypergraph instead of the table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    message = app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    message = e.what();
    return kUsage;
  }

  cfg.output_path = output;
  cfg.command = app.get_subcommands().front()->get_name();
  if (cfg.command == "verify") cfg.subcommand = "tails";
  if (cfg.command == "assoc") cfg.subcommand = check->parsed() ? "check" : "certificate";
  if (cfg.command == "schedules") {
    if (count_only->count() && heuristic_s->count()) {
      message = "--count-only and --heuristic are exclusive";
      return kUsage;
    }
    cfg.mode = count_only->count() ? "count-only" : heuristic_s->count() ? "heuristic" : "list";
  }
  if (cfg.command == "optimize") {
    if (exhaustive->count() && heuristic_o->count()) {
      message = "--exhaustive and --heuristic are exclusive";
      return kUsage;
    }
    if (exhaustive->count()) {
      cfg.mode = "exhaustive";
    } else if (heuristic_o->count()) {
      cfg.mode = "heuristic";
    } else if (!cfg.schedule_path.empty()) {
      cfg.mode = "fixed";
    } else {
      message = "optimize needs --exhaustive, --heuristic or --schedule";
      return kUsage;
    }
    if (cfg.jobs < 1) {
      message = "--jobs must be at least 1";
      return kUsage;
    }
    cfg.prune = no_prune->count() == 0;
    cfg.relax_vertex = strict_vertex_o->count() == 0;
  }
  if (cfg.command == "evaluate") cfg.relax_vertex = strict_vertex_e->count() == 0;
  cfg.seed = resolve_seed(seed);
  return std::nullopt;
}

namespace {

Json witness_json(const LinearProgram& lp, const LPSolution& sol) {
  Json out = Json::object();
  for (std::size_t j = 0; j < lp.variables.size() && j < sol.witness.size(); ++j) {
    out[lp.variables[j]] = io::exact(sol.witness[j]);
  }
  return out;
}

Json tight_json(const LinearProgram& lp, const LPSolution& sol) {
  Json out = Json::array();
  for (std::size_t i : sol.tight_rows) out.push_back(lp.rows[i].label);
  return out;
}

Report run_schedules(const RunConfig& cfg) {
  const PatternHypergraph pattern = io::parse_pattern(cfg.pattern_path);
  Report rep;
  rep.body["command"] = "schedules";
  if (!cfg.schedule_path.empty()) {
    const auto schedule = io::parse_schedule(cfg.schedule_path);
    const auto v = is_valid_schedule(pattern, schedule);
    rep.body["valid"] = v.valid;
    if (!v.valid) {
      rep.body["clause"] = to_string(*v.clause);
      rep.body["position"] = v.position;
      rep.body["message"] = v.message;
      rep.exit_code = kVerdictFail;
    }
    return rep;
  }
  if (cfg.mode == "count-only") {
    rep.body["count"] = count_complete_schedules(pattern);
    return rep;
  }
  if (cfg.mode == "heuristic") {
    EnumerationConfig ec;
    ec.mode = EnumerationConfig::Mode::Heuristic;
    ec.budget = cfg.budget;
    ec.seed = cfg.seed;
    Json list = Json::array();
    for (const auto& s : heuristic_schedules(pattern, ec)) list.push_back(io::to_json(s));
    rep.body["seed"] = cfg.seed;
    rep.body["schedules"] = list;
    return rep;
  }
  rep.body["count"] = count_complete_schedules(pattern);
  Json list = Json::array();
  enumerate_complete_schedules(pattern, [&](const LoadingSchedule& s) {
    if (list.size() >= cfg.limit) return false;
    list.push_back(io::to_json(s));
    return true;
  });
  rep.body["schedules"] = list;
  return rep;
}

Report run_optimize(const RunConfig& cfg) {
  const PatternHypergraph pattern = io::parse_pattern(cfg.pattern_path);
  const Rational margin = Rational::parse(cfg.margin);
  if (margin.sign() <= 0) throw DomainError("--margin must be positive");
  std::optional<LoadingSchedule> reference;
  if (!cfg.schedule_path.empty()) reference = io::parse_schedule(cfg.schedule_path);
  Report rep;
  rep.body["command"] = "optimize";
  rep.body["mode"] = cfg.mode;
  ScheduleLPResult detail;
  if (cfg.mode == "fixed") {
    detail = solve_schedule(pattern, *reference, margin, cfg.relax_vertex);
  } else {
    OptimizeConfig oc;
    oc.mode = cfg.mode == "exhaustive" ? OptimizeConfig::Mode::Exhaustive
                                       : OptimizeConfig::Mode::Heuristic;
    oc.budget = cfg.budget;
    oc.seed = cfg.seed;
    oc.jobs = cfg.jobs;
    oc.margin = margin;
    oc.relax_vertex = cfg.relax_vertex;
    oc.prune = cfg.prune;
    if (reference && oc.mode == OptimizeConfig::Mode::Heuristic) oc.injected.push_back(*reference);
    const OptimizeResult res = optimize_over_schedules(pattern, oc);
    detail = res.best_detail;
    rep.body["schedules_considered"] = res.schedules_considered;
    rep.body["lps_solved"] = res.lps_solved;
    rep.body["argmin_count"] = res.argmins.size();
    if (oc.mode == OptimizeConfig::Mode::Heuristic) rep.body["seed"] = cfg.seed;
    if (reference) {
      rep.body["reference_in_argmins"] =
          std::find(res.argmins.begin(), res.argmins.end(), *reference) != res.argmins.end();
    }
  }
  if (detail.solution.status != LPStatus::Optimal) {
    throw Error(ErrorCode::Internal, std::string("LP is ") + to_string(detail.solution.status));
  }
  ExponentLPOptions options;
  options.relax_vertex = cfg.relax_vertex;
  const LinearProgram lp = build_exponent_lp(pattern, detail.schedule, options);
  rep.body["exponent"] = io::exact(detail.solution.optimum);
  rep.body["schedule"] = io::to_json(detail.schedule);
  rep.body["witness"] = witness_json(lp, detail.solution);
  rep.body["tight_rows"] = tight_json(lp, detail.solution);
  rep.body["certificate_verified"] = verify_optimality_certificate(lp, detail.solution);
  rep.body["strict_ok"] = detail.strict_ok;
  if (detail.margin_solution) {
    rep.body["margin"] = io::exact(detail.margin);
    rep.body["margin_status"] = to_string(detail.margin_solution->status);
    if (detail.margin_solution->status == LPStatus::Optimal) {
      rep.body["margin_exponent"] = io::exact(detail.margin_solution->optimum);
    }
  }
  return rep;
}

Report run_evaluate(const RunConfig& cfg) {
  const PatternHypergraph pattern = io::parse_pattern(cfg.pattern_path);
  const LoadingSchedule schedule = io::parse_schedule(cfg.schedule_path);
  const ParameterExponents params = io::parse_params(cfg.params_path);
  params.check_keys(pattern);
  const CostBreakdown cost = cost_exponent(pattern, schedule, params);
  const AdmissibilityReport adm = check_admissibility(pattern, params, cfg.relax_vertex);
  Report rep;
  rep.body["command"] = "evaluate";
  rep.body["exponent"] = io::exact(cost.overall);
  rep.body["cost"] = io::to_json(cost);
  rep.body["admissibility"] = io::to_json(adm);
  rep.exit_code = adm.strict_ok ? kOk : kVerdictFail;
  return rep;
}

struct SimParams {
  int r[3] = {16, 16, 16};
  std::int64_t f[3] = {128, 128, 128};
  int kappa = 1;
  std::size_t gamma_size = 100;
  std::size_t delta = 20;
  std::uint32_t p = 120;
  std::uint32_t r_size = 30;
  double max_frequency = 0.01;
  double min_frequency = 0.99;
};

SimParams sim_params(const std::string& path) {
  SimParams sp;
  if (path.empty()) return sp;
  const Json doc = io::read_json(path);
  if (!doc.is_object()) throw ParseError(path, "expected a JSON object");
  try {
    if (doc.contains("r")) {
      const auto& r = doc.at("r");
      if (!r.is_array() || r.size() != 3) throw ParseError(path + ":/r", "expected [r_i, r_j, r_k]");
      for (int i = 0; i < 3; ++i) sp.r[i] = r.at(i).get<int>();
    }
    if (doc.contains("f")) {
      const auto& f = doc.at("f");
      if (!f.is_array() || f.size() < 2 || f.size() > 3) {
        throw ParseError(path + ":/f", "expected [f_ij, f_ik] or [f_ij, f_ik, f_jk]");
      }
      for (std::size_t i = 0; i < f.size(); ++i) sp.f[i] = f.at(i).get<std::int64_t>();
    }
    if (doc.contains("kappa")) sp.kappa = doc.at("kappa").get<int>();
    if (doc.contains("gamma_size")) sp.gamma_size = doc.at("gamma_size").get<std::size_t>();
    if (doc.contains("delta")) sp.delta = doc.at("delta").get<std::size_t>();
    if (doc.contains("p")) sp.p = doc.at("p").get<std::uint32_t>();
    if (doc.contains("r_size")) sp.r_size = doc.at("r_size").get<std::uint32_t>();
    if (doc.contains("max_frequency")) sp.max_frequency = doc.at("max_frequency").get<double>();
    if (doc.contains("min_frequency")) sp.min_frequency = doc.at("min_frequency").get<double>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path, e.what());
  }
  return sp;
}

Report run_simulate(const RunConfig& cfg) {
  const SimParams sp = sim_params(cfg.params_path);
  Report rep;
  rep.body["command"] = "simulate";
  rep.body["check"] = cfg.check;
  rep.body["seed"] = cfg.seed;
  bool pass = false;
  if (cfg.check == "lambda-claim") {
    const int n = cfg.n ? cfg.n : 4;
    const auto audit = audit_claim_lambda(n, cfg.trials ? cfg.trials : 10000, cfg.seed);
    pass = audit.failures == 0;
    rep.body["n"] = n;
    rep.body["checked"] = audit.checked;
    rep.body["failures"] = audit.failures;
    rep.body["frequency"] = io::round6(
        audit.checked ? 1.0 - static_cast<double>(audit.failures) / audit.checked : 0.0);
    rep.body["bound"] = "|L1 sym-diff L1'| <= 2 |G sym-diff G'|";
    rep.body["pass"] = pass;
  } else if (cfg.check == "lemma3") {
    const int n = cfg.n ? cfg.n : 8;
    const TripleUniverse u(n);
    Rng rng(cfg.seed);
    const auto [g, gp] = random_gamma_pair(u, sp.gamma_size, sp.delta, rng);
    const auto r = mc_lemma3(g, gp, sp.p, sp.r_size, cfg.trials ? cfg.trials : 10000, cfg.seed, u,
                             sp.min_frequency);
    pass = r.pass;
    rep.body["n"] = n;
    rep.body.update(io::to_json(r));
  } else if (cfg.check == "regularity") {
    const auto r = mc_regularity(sp.r[0], sp.r[1], sp.r[2], sp.f[0], sp.f[1],
                                 cfg.trials ? cfg.trials : 10000, cfg.seed, sp.kappa);
    pass = r.pass;
    rep.body.update(io::to_json(r));
  } else {
    const SwapParams p{sp.r[0], sp.r[1], sp.r[2], sp.f[0], sp.f[1], sp.f[2]};
    const std::uint64_t trials = cfg.trials ? cfg.trials : 1000;
    const auto r = cfg.check == "vertex-swap" ? mc_vertex_swap(p, trials, cfg.seed, sp.max_frequency)
                                              : mc_pair_swap(p, trials, cfg.seed, sp.max_frequency);
    pass = r.pass;
    rep.body.update(io::to_json(r));
  }
  rep.exit_code = pass ? kOk : kVerdictFail;
  return rep;
}

Report run_verify(const RunConfig& cfg) {
  const auto report = verify_tail_bounds(TailGrid::standard(cfg.nmax));
  Report rep;
  rep.body["command"] = "verify tails";
  rep.body.update(io::to_json(report));
  rep.exit_code = report.pass() ? kOk : kVerdictFail;
  return rep;
}

Report run_find(const RunConfig& cfg) {
  const PatternHypergraph pattern = io::parse_pattern(cfg.pattern_path);
  const InstanceHypergraph instance = io::parse_instance(cfg.instance_path);
  QueryCounter counter;
  const auto found = find_subhypergraph(instance, pattern, counter);
  Report rep;
  rep.body["command"] = "find";
  rep.body["found"] = found.has_value();
  rep.body["embedding"] = found ? Json(*found) : Json();
  rep.body["queries"] = Json{{"total", counter.total()}, {"distinct", counter.distinct()}};
  return rep;
}

Report run_assoc(const RunConfig& cfg) {
  const TernaryOperator op = io::parse_operator(cfg.table_path);
  Report rep;
  rep.body["command"] = "assoc " + cfg.subcommand;
  if (cfg.subcommand == "check") {
    const auto violation = is_associative(op);
    rep.body["associative"] = !violation.has_value();
    rep.body["violation"] = violation ? Json(*violation) : Json();
    return rep;
  }
  const AssocCase which = cfg.assoc_case == "ii" ? AssocCase::II : AssocCase::I;
  std::optional<AssocCertificate> cert;
  if (cfg.via_reduction) {
    QueryCounter counter;
    cert = find_occurrence(build_reduction(op, which), counter);
    rep.body["queries"] = Json{{"total", counter.total()}, {"distinct", counter.distinct()}};
  } else {
    cert = find_certificate(op, which);
  }
  rep.body["case"] = to_string(which);
  rep.body["found"] = cert.has_value();
  rep.body["certificate"] = cert ? io::to_json(*cert) : Json();
  rep.body["verified"] = cert ? verify_certificate(op, *cert) : false;
  return rep;
}

}  // namespace

Report run(const RunConfig& cfg) {
  if (cfg.command == "schedules") return run_schedules(cfg);
  if (cfg.command == "optimize") return run_optimize(cfg);
  if (cfg.command == "evaluate") return run_evaluate(cfg);
  if (cfg.command == "simulate") return run_simulate(cfg);
  if (cfg.command == "verify") return run_verify(cfg);
  if (cfg.command == "find") return run_find(cfg);
  if (cfg.command == "assoc") return run_assoc(cfg);
  throw Error(ErrorCode::Internal, "unknown command '" + cfg.command + "'");
}

int main_entry(int argc, const char* const* argv) {
  RunConfig cfg;
  std::string message;
  try {
    if (auto code = parse_args(argc, argv, cfg, message)) {
      (*code == kOk ? std::cout : std::cerr) << message << "\n";
      return *code;
    }
    const Report rep = run(cfg);
    const std::string text = io::dump(rep.body);
    if (cfg.output_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(cfg.output_path, std::ios::binary);
      if (!out) throw ParseError(cfg.output_path, "cannot write output file");
      out << text;
    }
    return rep.exit_code;
  } catch (const Error& e) {
    std::cerr << io::dump(Json{{"error", to_string(e.code())}, {"message", e.what()}});
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << io::dump(Json{{"error", "internal"}, {"message", e.what()}});
    return kInternal;
  }
}

}  // namespace hyperwalk::cli
