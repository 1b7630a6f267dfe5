// Subcommands for the remaining applications:
// phase, catch, epidemic, apportion, graph, summax.

#include <cmath>
#include <memory>

#include "commands.hpp"
#include "input.hpp"
#include "majorkit/apportionment.hpp"
#include "majorkit/catchability.hpp"
#include "majorkit/epidemics.hpp"
#include "majorkit/errors.hpp"
#include "majorkit/phase_type.hpp"
#include "majorkit/random_graph.hpp"
#include "majorkit/sum_max.hpp"

namespace majorkit::cli {

namespace {

const char* verdict(bool ok) { return ok ? "consistent" : "violated"; }

// ---- phase ----------------------------------------------------------------

struct PhaseArgs {
  std::string file;
  std::size_t erlang_order = 0;
  double rate = 1.0;
  bool moments = false;
  bool cv = false;
  std::size_t sample = 0;
  std::size_t lorenz = 0;
};

PHParams load_phase(const PhaseArgs& a) {
  if (!a.file.empty() && a.erlang_order > 0) throw InvalidArgument("give --file or --erlang, not both");
  if (a.erlang_order > 0) return erlang(a.erlang_order, a.rate);
  if (a.file.empty()) throw InvalidArgument("give --file with {\"alpha\": [...], \"Q\": [[...]]} or --erlang n");
  Json j;
  try {
    j = Json::parse(read_text_file(a.file));
  } catch (const Json::parse_error& e) {
    throw InvalidArgument(a.file + ": " + e.what());
  }
  if (!j.is_object() || !j.contains("alpha") || !j.contains("Q"))
    throw InvalidArgument(a.file + ": expected an object with keys alpha and Q");
  try {
    const auto alpha = j.at("alpha").get<std::vector<double>>();
    const auto rows = j.at("Q").get<std::vector<std::vector<double>>>();
    const std::size_t n = rows.size();
    std::vector<double> flat;
    for (const auto& r : rows) {
      if (r.size() != n) throw InvalidArgument(a.file + ": Q must be square");
      flat.insert(flat.end(), r.begin(), r.end());
    }
    return PHParams(ProbVec(alpha), SquareMatrix(n, std::move(flat)));
  } catch (const Json::exception& e) {
    throw InvalidArgument(a.file + ": " + e.what());
  }
}

Output run_phase(const PhaseArgs& a, std::uint64_t seed) {
  const PHParams params = load_phase(a);
  const bool defaults = !a.moments && !a.cv && a.sample == 0 && a.lorenz == 0;
  Output o;
  Json fields = {{"order", params.order()}};
  if (a.moments || defaults) {
    const Moments m = moments(params);
    fields["mean"] = m.mean;
    fields["second_moment"] = m.second;
    fields["variance"] = m.second - m.mean * m.mean;
  }
  if (a.cv || defaults) {
    const double cv = coefficient_of_variation(params);
    const double bound = 1.0 / std::sqrt(static_cast<double>(params.order()));
    fields["cv"] = cv;
    fields["cv_lower_bound"] = bound;
    fields["cv_bound_holds"] = cv >= bound - 1e-9;
    if (cv < bound - 1e-9) o.violated = true;
  }
  if (a.sample > 0) {
    const Sample s = sample_absorption(params, a.sample, seed);
    RunningStats stats;
    for (double v : s.values()) stats.push(v);
    fields["sample_trials"] = a.sample;
    fields["sample_mean"] = stats.mean();
    fields["sample_standard_error"] = stats.standard_error();
    fields["sample_variance"] = stats.variance();
  }
  if (a.lorenz > 0) {
    const ErlangLorenzVerdict v = lorenz_vs_erlang(params, a.lorenz, seed);
    fields["lorenz_trials"] = a.lorenz;
    fields["lorenz_relation"] = to_string(v.relation);
    fields["erlang_dominates"] = v.erlang_dominates;
    fields["lorenz_tolerance"] = v.tolerance;
    fields["lorenz_max_excess"] = v.max_excess;
    if (!v.erlang_dominates) o.violated = true;
  }
  if (a.sample > 0 || a.lorenz > 0) fields["seed"] = seed;
  summary(o, fields);
  return o;
}

// ---- catch ----------------------------------------------------------------

struct CatchArgs {
  VectorSource probs;
  unsigned captures = 0;
  std::size_t trials = 100000;
  std::size_t bias_pairs = 0;
  unsigned species = 0;
};

Output run_catch(const CatchArgs& a, std::uint64_t seed) {
  if (a.captures < 1) throw InvalidArgument("--captures must be >= 1");
  Output o;
  if (a.bias_pairs > 0) {
    const unsigned species = a.probs.given() ? static_cast<unsigned>(a.probs.get().size()) : a.species;
    if (species < 2) throw InvalidArgument("--bias-pairs needs --species >= 2");
    const CatchabilityReport r = schur_bias_experiment(species, a.captures, a.bias_pairs, a.trials, seed);
    summary(o, {{"experiment", "catchability-bias"},
                {"species", species},
                {"captures", a.captures},
                {"pairs", a.bias_pairs},
                {"trials", a.trials},
                {"seed", seed},
                {"tail_violations", r.lower_tail.violations.size()},
                {"bias_violations", r.bias.violations.size()},
                {"verdict", verdict(r.lower_tail.consistent() && r.bias.consistent())}});
    o.violated = !(r.lower_tail.consistent() && r.bias.consistent());
    return o;
  }

  Json fields = {{"captures", a.captures}};
  std::optional<TrapResult> sim;
  if (a.probs.given()) {
    const ProbVec p(a.probs.get());
    sim = trap_simulation(p, a.captures, a.trials, seed);
    fields["species"] = p.size();
    fields["probs"] = to_json(p.vector());
    fields["trials"] = a.trials;
    fields["seed"] = seed;
    fields["mean_distinct"] = sim->distinct_mean.value;
    fields["mean_distinct_standard_error"] = sim->distinct_mean.standard_error;
    fields["mean_nu_hat"] = sim->nu_hat_mean.value;
    fields["mean_nu_hat_standard_error"] = sim->nu_hat_mean.standard_error;
  }
  summary(o, fields);

  Json rows = Json::array();
  std::vector<std::string> columns{"r", "stirling_n_r", "stirling_n1_r", "nu_hat"};
  if (sim) columns.push_back("p_distinct");
  auto& t = o.table("estimator", columns);
  for (unsigned r = 1; r <= a.captures; ++r) {
    const std::string s = stirling2(a.captures, r).str();
    const std::string s1 = stirling2(a.captures + 1, r).str();
    const double nu = nu_hat(a.captures, r);
    Json row = {{"r", r}, {"stirling_n_r", s}, {"stirling_n1_r", s1}, {"nu_hat", nu}};
    std::vector<Json> cells{r, s, s1, nu};
    if (sim) {
      const double pr = r < sim->distinct_distribution.size() ? sim->distinct_distribution[r] : 0.0;
      row["p_distinct"] = pr;
      cells.push_back(pr);
    }
    rows.push_back(std::move(row));
    t.add(std::move(cells));
  }
  o.doc["estimator"] = std::move(rows);
  return o;
}

// ---- epidemic -------------------------------------------------------------

struct EpidemicArgs {
  VectorSource alpha, p;
  std::string lifestyle;
  std::vector<std::uint64_t> schur;
};

Output run_epidemic(const EpidemicArgs& a, std::uint64_t seed) {
  Output o;
  if (!a.schur.empty()) {
    if (a.schur.size() < 3 || a.schur.size() > 4) throw InvalidArgument("--schur takes J,n,models[,seed]");
    const std::uint64_t s = a.schur.size() == 4 ? a.schur[3] : seed;
    const auto r = lifestyle_schur_check(static_cast<unsigned>(a.schur[0]), a.schur[1], a.schur[2], s);
    summary(o, {{"experiment", "lifestyle-schur-convexity"},
                {"contacts", a.schur[0]},
                {"carriers", a.schur[1]},
                {"models", a.schur[2]},
                {"seed", s},
                {"compositions", r.compositions},
                {"comparable_pairs", r.comparable_pairs},
                {"violations", r.report.violations.size()},
                {"extremes_ordered", r.extremes_ordered},
                {"verdict", verdict(r.report.consistent() && r.extremes_ordered)}});
    o.violated = !(r.report.consistent() && r.extremes_ordered);
    return o;
  }
  if (a.lifestyle.empty()) throw InvalidArgument("give --lifestyle with --alpha and --p, or --schur J,n,models");
  const ContactModel model(ProbVec(a.alpha.get()), a.p.get());
  const Lifestyle k(parse_integer_list(a.lifestyle, "--lifestyle"));
  summary(o, {{"lifestyle", k.blocks()},
              {"contacts", k.contacts()},
              {"escape_probability", escape_probability(k, model)},
              {"infection_probability", 1.0 - escape_probability(k, model)}});
  return o;
}

// ---- apportion ------------------------------------------------------------

struct ApportionArgs {
  VectorSource votes;
  unsigned long seats = 0;
  std::string rule = "webster";
  bool chain = false;
  bool trace = false;
};

Json seats_json(const std::vector<unsigned long>& s) { return Json(s); }

Output run_apportion(const ApportionArgs& a) {
  const std::vector<double> votes = a.votes.get();
  const DivisorRule rule = DivisorRule::parse(a.rule);
  const Apportionment result = apportion({votes, a.seats, rule});
  Output o;
  summary(o, {{"rule", rule.name()},
              {"p", number(rule.p)},
              {"house_size", a.seats},
              {"seats", seats_json(result.seats)},
              {"tie_affected", result.tie_affected()}});
  auto& pt = o.table("parties", {"party", "votes", "seats"});
  for (std::size_t i = 0; i < votes.size(); ++i) pt.add({i, votes[i], result.seats[i]});

  Json ties = Json::array();
  for (const auto& t : result.ties)
    ties.push_back({{"seat", t.seat_index}, {"parties", t.parties}, {"decisive", t.decisive}});
  o.doc["ties"] = std::move(ties);

  if (a.trace) {
    Json tr = Json::array();
    auto& tt = o.table("trace", {"seat", "party", "priority"});
    for (const auto& aw : result.trace) {
      tr.push_back({{"seat", aw.seat_index}, {"party", aw.party}, {"priority", number(aw.priority)}});
      tt.add({aw.seat_index, aw.party, number(aw.priority)});
    }
    o.doc["trace"] = std::move(tr);
  }
  if (a.chain) {
    const ChainReport c = rule_chain_check(votes, a.seats);
    Json entries = Json::array();
    auto& ct = o.table("chain", {"rule", "seats", "tie_affected"});
    for (const auto& e : c.entries) {
      entries.push_back({{"rule", e.rule.name()}, {"seats", seats_json(e.result.seats)},
                         {"tie_affected", e.result.tie_affected()}});
      ct.add({e.rule.name(), seats_json(e.result.seats), e.result.tie_affected()});
    }
    Json violations = Json::array();
    for (const auto& v : c.violations)
      violations.push_back({{"smaller_p", c.entries[v.smaller].rule.name()},
                            {"larger_p", c.entries[v.larger].rule.name()}});
    o.doc["chain"] = {{"entries", std::move(entries)},
                      {"comparisons", c.comparisons},
                      {"violations", std::move(violations)},
                      {"holds", c.holds()}};
    o.violated = !c.holds();
  }
  return o;
}

// ---- graph ----------------------------------------------------------------

struct GraphArgs {
  VectorSource probs;
  bool exact = false;
  bool mc = false;
  std::size_t trials = 100000;
  std::size_t schur_n = 0;
  std::size_t pairs = 200;
};

Output run_graph(const GraphArgs& a, std::uint64_t seed) {
  Output o;
  if (a.schur_n > 0) {
    const GraphSchurReport r = schur_concavity_check(a.schur_n, a.pairs, seed);
    summary(o, {{"experiment", "components-schur-concavity"},
                {"n", a.schur_n},
                {"pairs", a.pairs},
                {"seed", seed},
                {"uniform_value", r.uniform_value},
                {"uniform_maximal", r.uniform_maximal},
                {"violations", r.report.violations.size()},
                {"verdict", verdict(r.report.consistent() && r.uniform_maximal)}});
    o.violated = !(r.report.consistent() && r.uniform_maximal);
    return o;
  }
  const ProbVec p(a.probs.get());
  Json fields = {{"n", p.size()}, {"probs", to_json(p.vector())}};
  if (a.exact || !a.mc) fields["expected_components"] = expected_components_exact(p);
  if (a.mc) {
    const Estimate e = expected_components_mc(p, a.trials, seed);
    fields["trials"] = a.trials;
    fields["seed"] = seed;
    fields["estimate"] = e.value;
    fields["standard_error"] = e.standard_error;
  }
  summary(o, fields);
  return o;
}

// ---- summax ---------------------------------------------------------------

struct SummaxArgs {
  std::string family = "abs-normal";
  double rho = 0.0;
  double sigma = 1.0;
  std::size_t half_normal_n = 0;
  std::size_t trials = 100000;
  std::string grid;
  bool probe = false;
  std::size_t resolution = 60;
  double extent = 8.0;
};

void add_comparison(Output& o, const SumMaxReport& r) {
  Json pts = Json::array();
  auto& t = o.table("comparison", {"c", "p_sum", "p_max", "difference", "standard_error", "violated"});
  for (const auto& p : r.points) {
    pts.push_back({{"c", p.c},
                   {"p_sum", p.p_sum},
                   {"p_max", p.p_max},
                   {"difference", p.difference},
                   {"standard_error", p.standard_error},
                   {"violated", p.violated}});
    t.add({p.c, p.p_sum, p.p_max, p.difference, p.standard_error, p.violated});
  }
  o.doc["comparison"] = std::move(pts);
}

Output run_summax(const SummaxArgs& a, std::uint64_t seed) {
  const std::vector<double> grid = a.grid.empty() ? kDefaultCGrid : parse_list(a.grid, "--grid");
  Output o;
  if (a.half_normal_n > 0) {
    const NdimReport r = ndim_check(half_normal(a.sigma), a.half_normal_n, a.trials, seed, grid);
    summary(o, {{"family", "half-normal"},
                {"n", a.half_normal_n},
                {"sigma", a.sigma},
                {"trials", a.trials},
                {"seed", seed},
                {"conditions_pass", r.conditions.passes()},
                {"concavity_failures", r.conditions.concavity_failures.size()},
                {"ratio_failures", r.conditions.ratio_failures.size()},
                {"violations", r.comparison.violations()},
                {"verdict", verdict(r.comparison.holds())}});
    add_comparison(o, r.comparison);
    o.violated = !r.comparison.holds();
    return o;
  }
  if (a.family != "abs-normal") throw InvalidArgument("unknown family '" + a.family + "'");
  const SumMaxReport r = sum_vs_max_check(abs_bivariate_normal(a.rho, a.sigma), a.trials, seed, grid);
  Json fields = {{"family", a.family}, {"rho", a.rho}, {"sigma", a.sigma}, {"trials", a.trials}, {"seed", seed}};
  if (a.probe) {
    const ProbeReport p = schur_condition_probe(abs_bivariate_normal_density(a.rho, a.sigma), a.resolution, a.extent);
    fields["probe_checks"] = p.checks;
    fields["probe_violations"] = p.violations.size();
    fields["probe_passes"] = p.passes();
  }
  fields["violations"] = r.violations();
  fields["verdict"] = verdict(r.holds());
  summary(o, fields);
  add_comparison(o, r);
  o.violated = !r.holds();
  return o;
}

}  // namespace

void register_app_commands(CLI::App& app, Common& common, std::vector<Command>& commands) {
  {
    auto a = std::make_shared<PhaseArgs>();
    auto* sub = app.add_subcommand("phase", "Phase-type distributions: moments, variability, Lorenz order");
    sub->add_option("--file", a->file, "JSON file {\"alpha\": [...], \"Q\": [[...]]}");
    sub->add_option("--erlang", a->erlang_order, "Use the Erlang distribution of this order");
    sub->add_option("--rate", a->rate, "Erlang rate")->capture_default_str();
    sub->add_flag("--moments", a->moments, "Exact mean and second moment");
    sub->add_flag("--cv", a->cv, "Coefficient of variation against 1/sqrt(n)");
    sub->add_option("--sample", a->sample, "Simulate this many absorption times");
    sub->add_option("--lorenz-vs-erlang", a->lorenz, "Compare Lorenz curves with Erlang(n) at this many samples");
    add_seed(sub, common);
    add_format(sub, common);
    commands.push_back({sub, [a, &common] { return run_phase(*a, common.seed); }});
  }
  {
    auto a = std::make_shared<CatchArgs>();
    auto* sub = app.add_subcommand("catch", "Catchability: distinct species in a trap and the Stirling estimator");
    add_vector(sub, a->probs, "species-probs", "Catch probabilities per species");
    sub->add_option("--captures", a->captures, "Number of captures n")->required();
    sub->add_option("--trials", a->trials, "Monte Carlo trials")->check(CLI::PositiveNumber)->capture_default_str();
    sub->add_option("--bias-pairs", a->bias_pairs, "Run the bias experiment over this many pairs");
    sub->add_option("--species", a->species, "Species count for --bias-pairs");
    add_seed(sub, common);
    add_format(sub, common);
    commands.push_back({sub, [a, &common] { return run_catch(*a, common.seed); }});
  }
  {
    auto a = std::make_shared<EpidemicArgs>();
    auto* sub = app.add_subcommand("epidemic", "Escape probability under a contact lifestyle");
    add_vector(sub, a->alpha, "alpha", "Partner preferences");
    add_vector(sub, a->p, "p", "Per-contact avoidance probabilities");
    sub->add_option("--lifestyle", a->lifestyle, "Contacts per partner block, e.g. 2,1,1");
    sub->add_option("--schur", a->schur, "Exhaustive check: J,n,models[,seed]")->delimiter(',')->expected(3, 4);
    add_seed(sub, common);
    add_format(sub, common);
    commands.push_back({sub, [a, &common] { return run_epidemic(*a, common.seed); }});
  }
  {
    auto a = std::make_shared<ApportionArgs>();
    auto* sub = app.add_subcommand("apportion", "Divisor-method apportionment");
    add_vector(sub, a->votes, "votes", "Votes per party");
    sub->add_option("--seats", a->seats, "House size N")->required();
    sub->add_option("--rule", a->rule, "adams, dean, hill, webster, jefferson or p=<value>")->capture_default_str();
    sub->add_flag("--chain-check", a->chain, "Check the majorization chain across the five classical rules");
    sub->add_flag("--trace", a->trace, "Print the priority of every awarded seat");
    add_format(sub, common);
    commands.push_back({sub, [a] { return run_apportion(*a); }});
  }
  {
    auto a = std::make_shared<GraphArgs>();
    auto* sub = app.add_subcommand("graph", "Components of the random functional graph");
    add_vector(sub, a->probs, "probs", "Arc endpoint probabilities");
    sub->add_flag("--exact", a->exact, "Exact expectation (default)");
    sub->add_flag("--mc", a->mc, "Monte Carlo estimate");
    sub->add_option("--trials", a->trials, "Monte Carlo trials")->check(CLI::PositiveNumber)->capture_default_str();
    sub->add_option("--schur", a->schur_n, "Run the Schur concavity check at this n");
    sub->add_option("--pairs", a->pairs, "Pairs for --schur")->capture_default_str();
    add_seed(sub, common);
    add_format(sub, common);
    commands.push_back({sub, [a, &common] { return run_graph(*a, common.seed); }});
  }
  {
    auto a = std::make_shared<SummaxArgs>();
    auto* sub = app.add_subcommand("summax", "Sum versus scaled maximum in the stochastic order");
    sub->add_option("--family", a->family, "Pair family")->check(CLI::IsMember({"abs-normal"}))->capture_default_str();
    sub->add_option("--rho", a->rho, "Correlation")->capture_default_str();
    sub->add_option("--sigma", a->sigma, "Scale")->capture_default_str();
    sub->add_option("--half-normal", a->half_normal_n, "i.i.d. half-normal in this many dimensions");
    sub->add_option("--trials", a->trials, "Paired samples")->check(CLI::PositiveNumber)->capture_default_str();
    sub->add_option("--grid", a->grid, "c values, comma-separated");
    sub->add_flag("--probe", a->probe, "Probe the density condition on a grid");
    sub->add_option("--resolution", a->resolution, "Probe grid resolution")->capture_default_str();
    sub->add_option("--extent", a->extent, "Probe grid extent")->capture_default_str();
    add_seed(sub, common);
    add_format(sub, common);
    commands.push_back({sub, [a, &common] { return run_summax(*a, common.seed); }});
  }
}

}  // namespace majorkit::cli
