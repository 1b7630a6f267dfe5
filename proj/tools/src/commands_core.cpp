// Subcommands for the order itself and the first group of applications:
// majorize, schur-check, lorenz, cover, pattern, paired.

#include <cmath>
#include <map>
#include <memory>

#include "commands.hpp"
#include "input.hpp"
#include "majorkit/circle_covering.hpp"
#include "majorkit/errors.hpp"
#include "majorkit/lorenz.hpp"
#include "majorkit/majorization.hpp"
#include "majorkit/paired_comparisons.hpp"
#include "majorkit/pattern_waiting.hpp"
#include "majorkit/schur_harness.hpp"

namespace majorkit::cli {

namespace {

Json matrix_json(const SquareMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    Json r = Json::array();
    for (std::size_t j = 0; j < m.size(); ++j) r.push_back(m(i, j));
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<std::string> numbered_columns(const std::string& first, std::size_t n) {
  std::vector<std::string> cols{first};
  for (std::size_t j = 0; j < n; ++j) cols.push_back("c" + std::to_string(j));
  return cols;
}

// ---- majorize -------------------------------------------------------------

struct MajorizeArgs {
  VectorSource x, y, s;
  bool witness = false;
};

Output run_majorize(const MajorizeArgs& a) {
  const RealVec x(a.x.get());
  const RealVec y(a.y.get());
  Output o;
  const bool xy = majorizes(x, y);
  Json fields = {{"x", to_json(x.vector())}, {"y", to_json(y.vector())}, {"x_majorizes_y", xy},
                 {"y_majorizes_x", majorizes(y, x)}};
  if (a.s.given()) {
    const ProbVec s(a.s.get());
    // x majorizes y relative to s: y = T x with T column stochastic and T s = s.
    fields["relative_to"] = to_json(s.vector());
    fields["x_majorizes_y_relative"] = relative_majorizes(ProbVec(y.vector()), ProbVec(x.vector()), s);
  }
  summary(o, fields);
  if (a.witness) {
    if (!xy) throw OrderViolation("--witness needs x to majorize y");
    const auto chain = transfer_chain(x, y);
    Json steps = Json::array();
    auto& t = o.table("transfers", {"step", "donor", "recipient", "amount"});
    for (std::size_t i = 0; i < chain.size(); ++i) {
      steps.push_back({{"donor", chain[i].donor}, {"recipient", chain[i].recipient}, {"amount", chain[i].amount}});
      t.add({i + 1, chain[i].donor, chain[i].recipient, chain[i].amount});
    }
    const SquareMatrix w = doubly_stochastic_witness(x, y);
    o.doc["transfers"] = std::move(steps);
    o.doc["witness"] = matrix_json(w);
    o.doc["witness_doubly_stochastic"] = is_doubly_stochastic(w);
    auto& wt = o.table("witness", numbered_columns("row", w.size()));
    for (std::size_t i = 0; i < w.size(); ++i) {
      std::vector<Json> row{i};
      for (std::size_t j = 0; j < w.size(); ++j) row.push_back(w(i, j));
      wt.add(std::move(row));
    }
  }
  return o;
}

// ---- schur-check ----------------------------------------------------------

struct NamedFunction {
  VectorFunction g;
  Sense sense;
  std::string domain;  // default constraint
};

const std::map<std::string, NamedFunction>& named_functions() {
  static const std::map<std::string, NamedFunction> table = [] {
    std::map<std::string, NamedFunction> m;
    m["sum"] = {separable([](double t) { return t; }), Sense::convex, "none"};
    m["sum-squares"] = {separable([](double t) { return t * t; }), Sense::convex, "none"};
    m["sum-abs"] = {separable([](double t) { return std::abs(t); }), Sense::convex, "none"};
    m["sum-exp"] = {separable([](double t) { return std::exp(t); }), Sense::convex, "none"};
    m["neg-entropy"] = {separable(xlogx), Sense::convex, "probability"};
    m["entropy"] = {separable([](double t) { return -xlogx(t); }), Sense::concave, "probability"};
    m["max"] = {[](const RealVec& x) { return *std::max_element(x.begin(), x.end()); }, Sense::convex, "none"};
    m["min"] = {[](const RealVec& x) { return *std::min_element(x.begin(), x.end()); }, Sense::concave, "none"};
    m["product"] = {[](const RealVec& x) {
                      double p = 1.0;
                      for (double v : x) p *= v;
                      return p;
                    },
                    Sense::concave, "nonnegative"};
    m["variance"] = {[](const RealVec& x) {
                       const double mean = x.sum() / static_cast<double>(x.size());
                       double s = 0.0;
                       for (double v : x) s += (v - mean) * (v - mean);
                       return s / static_cast<double>(x.size());
                     },
                     Sense::convex, "none"};
    return m;
  }();
  return table;
}

std::vector<std::string> function_names() {
  std::vector<std::string> names;
  for (const auto& [k, _] : named_functions()) names.push_back(k);
  return names;
}

struct SchurArgs {
  std::string function;
  std::size_t n = 4;
  std::string sense;
  std::size_t trials = 1000;
  std::string constraint;
  long total = 0;
  double tolerance = kExactTolerance;
};

Constraint make_constraint(const std::string& name, long total, std::size_t n) {
  if (name == "none") return constraint::None{};
  if (name == "nonnegative") return constraint::Nonnegative{};
  if (name == "probability") return constraint::Probability{};
  if (name == "composition")
    return constraint::IntegerComposition{total > 0 ? total : 3 * static_cast<long>(n)};
  throw InvalidArgument("unknown constraint '" + name + "'");
}

Output run_schur(const SchurArgs& a, std::uint64_t seed) {
  const NamedFunction& f = named_functions().at(a.function);
  const Sense sense = a.sense.empty() ? f.sense : (a.sense == "convex" ? Sense::convex : Sense::concave);
  const Constraint c = make_constraint(a.constraint.empty() ? f.domain : a.constraint, a.total, a.n);
  const SchurReport r = check_schur(f.g, a.n, sense, a.trials, c, a.tolerance, seed);
  Output o;
  summary(o, {{"function", a.function},
              {"n", a.n},
              {"sense", sense == Sense::convex ? "convex" : "concave"},
              {"constraint", describe(c)},
              {"trials", r.trials},
              {"tolerance", a.tolerance},
              {"seed", seed},
              {"violations", r.violations.size()},
              {"verdict", r.consistent() ? "consistent" : "violated"}});
  Json list = Json::array();
  auto& t = o.table("violations", {"upper", "lower", "g_upper", "g_lower"});
  for (const auto& v : r.violations) {
    list.push_back({{"upper", to_json(v.pair.upper.vector())},
                    {"lower", to_json(v.pair.lower.vector())},
                    {"g_upper", v.g_upper},
                    {"g_lower", v.g_lower}});
    t.add({to_json(v.pair.upper.vector()), to_json(v.pair.lower.vector()), v.g_upper, v.g_lower});
  }
  o.doc["violation_list"] = std::move(list);
  o.violated = !r.consistent();
  return o;
}

// ---- lorenz ---------------------------------------------------------------

struct LorenzArgs {
  std::vector<std::string> files;
  VectorSource x, y;
};

Output run_lorenz(const LorenzArgs& a) {
  std::vector<std::pair<std::string, LorenzCurve>> curves;
  if (a.x.given()) curves.emplace_back("x", lorenz_curve(Sample(a.x.get())));
  if (a.y.given()) curves.emplace_back("y", lorenz_curve(Sample(a.y.get())));
  for (const auto& f : a.files) curves.emplace_back(f, lorenz_curve(Sample(read_vector_file(f))));
  if (curves.empty()) throw InvalidArgument("give at least one sample (files, --x or --y)");

  Output o;
  Json cj = Json::array();
  auto& ct = o.table("curves", {"sample", "population_share", "income_share"});
  for (const auto& [name, curve] : curves) {
    Json pts = Json::array();
    for (const auto& p : curve.points()) {
      pts.push_back({p.population_share, p.income_share});
      ct.add({name, p.population_share, p.income_share});
    }
    cj.push_back({{"sample", name}, {"points", std::move(pts)}});
  }
  Json comparisons = Json::array();
  auto& vt = o.table("comparisons", {"first", "second", "relation"});
  for (std::size_t i = 0; i < curves.size(); ++i)
    for (std::size_t j = i + 1; j < curves.size(); ++j) {
      const char* rel = to_string(lorenz_compare(curves[i].second, curves[j].second));
      comparisons.push_back({{"first", curves[i].first}, {"second", curves[j].first}, {"relation", rel}});
      vt.add({curves[i].first, curves[j].first, rel});
    }
  o.doc["curves"] = std::move(cj);
  o.doc["comparisons"] = std::move(comparisons);
  return o;
}

// ---- cover ----------------------------------------------------------------

struct CoverArgs {
  VectorSource lengths;
  bool exact = false;
  std::size_t trials = 100000;
  std::size_t schur_pairs = 0;
  std::size_t n = 3;
  double total = 1.5;
};

bool all_equal(const std::vector<double>& v) {
  return std::all_of(v.begin(), v.end(), [&](double x) { return x == v.front(); });
}

Output run_cover(const CoverArgs& a, std::uint64_t seed) {
  Output o;
  if (a.schur_pairs > 0) {
    const SchurReport r = coverage_schur_experiment(a.schur_pairs, a.n, a.total, a.trials, seed);
    summary(o, {{"experiment", "schur-convexity"},
                {"pairs", a.schur_pairs},
                {"n", a.n},
                {"total", a.total},
                {"trials", a.trials},
                {"seed", seed},
                {"violations", r.violations.size()},
                {"verdict", r.consistent() ? "consistent" : "violated"}});
    o.violated = !r.consistent();
    return o;
  }
  const std::vector<double> lengths = a.lengths.get();
  const ArcLengths arcs(lengths);
  Json fields = {{"n", lengths.size()}, {"lengths", to_json(lengths)}, {"total", arcs.total()}};
  if (all_equal(lengths))
    fields["exact"] = stevens_probability(static_cast<unsigned>(lengths.size()), lengths.front());
  else if (a.exact)
    throw InvalidArgument("--exact needs equal arc lengths; unequal arcs are estimated by simulation");
  if (!a.exact) {
    const Estimate e = coverage_monte_carlo(arcs, a.trials, seed);
    fields["trials"] = a.trials;
    fields["seed"] = seed;
    fields["estimate"] = e.value;
    fields["standard_error"] = e.standard_error;
  }
  summary(o, fields);
  return o;
}

// ---- pattern --------------------------------------------------------------

struct PatternArgs {
  VectorSource probs;
  bool exact = false;
  bool mc = false;
  std::size_t trials = 100000;
  std::vector<std::size_t> tail;
};

Output run_pattern(const PatternArgs& a, std::uint64_t seed) {
  const ProbVec p(a.probs.get());
  const bool exact = a.exact || !a.mc;
  Output o;
  Json fields = {{"k", p.size()}, {"probs", to_json(p.vector())}};
  if (exact) fields["expected_waiting"] = expected_waiting(p);
  if (a.mc) {
    const Estimate e = waiting_monte_carlo(p, a.trials, seed);
    fields["trials"] = a.trials;
    fields["seed"] = seed;
    fields["estimate"] = e.value;
    fields["standard_error"] = e.standard_error;
  }
  summary(o, fields);
  if (!a.tail.empty()) {
    const SuffixChain chain = build_chain(p);
    const std::size_t max_n = *std::max_element(a.tail.begin(), a.tail.end());
    const std::vector<double> tails = tail_probabilities(chain, max_n);
    Json tj = Json::array();
    auto& t = o.table("tail", {"n", "p_greater"});
    for (std::size_t n : a.tail) {
      tj.push_back({{"n", n}, {"p_greater", tails[n]}});
      t.add({n, tails[n]});
    }
    o.doc["tail"] = std::move(tj);
  }
  return o;
}

// ---- paired ---------------------------------------------------------------

struct PairedArgs {
  std::string file, matrix, against_file, against;
  std::size_t falsify = 0;
  double step = 0.05;
};

PairwiseMatrix load_pairwise(const std::string& file, const std::string& inline_text, const std::string& flag) {
  if (!file.empty() && !inline_text.empty()) throw InvalidArgument(flag + ": give a file or an inline matrix, not both");
  if (file.empty() && inline_text.empty()) throw InvalidArgument(flag + ": a matrix is required");
  const auto rows = file.empty() ? parse_matrix(inline_text) : read_csv(file);
  const std::size_t k = rows.size();
  std::vector<double> flat;
  for (std::size_t i = 0; i < k; ++i) {
    if (rows[i].size() != k) throw InvalidArgument(flag + ": matrix must be square");
    for (std::size_t j = 0; j < k; ++j) flat.push_back(i == j ? 0.5 : rows[i][j]);
  }
  return PairwiseMatrix(k, std::move(flat));
}

Json pairwise_json(const PairwiseMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.teams(); ++i) {
    Json r = Json::array();
    for (std::size_t j = 0; j < m.teams(); ++j) r.push_back(i == j ? Json() : Json(m(i, j)));
    rows.push_back(std::move(r));
  }
  return rows;
}

Output run_paired(const PairedArgs& a, std::uint64_t seed) {
  const PairwiseMatrix p = load_pairwise(a.file, a.matrix, "--file/--matrix");
  Output o;
  const bool strong = is_strongly_transitive(p);
  Json fields = {{"teams", p.teams()},
                 {"strengths", to_json(row_strengths(p).vector())},
                 {"weakly_transitive", is_weakly_transitive(p)},
                 {"strongly_transitive", strong}};
  if (!a.against_file.empty() || !a.against.empty()) {
    const PairwiseMatrix q = load_pairwise(a.against_file, a.against, "--against");
    fields["majorizes_against"] = matrix_majorizes(p, q);
    fields["majorized_by_against"] = matrix_majorizes(q, p);
  }
  std::optional<PairwiseMatrix> found;
  if (a.falsify > 0) {
    found = minimality_falsifier(p, a.falsify, a.step, seed);
    fields["falsifier_trials"] = a.falsify;
    fields["falsifier_step"] = a.step;
    fields["seed"] = seed;
    fields["counterexample_found"] = found.has_value();
  }
  summary(o, fields);
  if (found) {
    o.doc["counterexample"] = pairwise_json(*found);
    auto& t = o.table("counterexample", numbered_columns("row", found->teams()));
    for (std::size_t i = 0; i < found->teams(); ++i) {
      std::vector<Json> row{i};
      for (std::size_t j = 0; j < found->teams(); ++j) row.push_back(i == j ? Json() : Json((*found)(i, j)));
      t.add(std::move(row));
    }
    // Only a strongly transitive matrix is claimed to be minimal.
    o.violated = strong;
  }
  return o;
}

}  // namespace

void register_core_commands(CLI::App& app, Common& common, std::vector<Command>& commands) {
  {
    auto a = std::make_shared<MajorizeArgs>();
    auto* sub = app.add_subcommand("majorize", "Test whether x majorizes y");
    add_vector(sub, a->x, "x", "First vector");
    add_vector(sub, a->y, "y", "Second vector");
    add_vector(sub, a->s, "s", "Reference probability vector for relative majorization");
    sub->add_flag("--witness", a->witness, "Print a transfer chain and a doubly stochastic witness");
    add_format(sub, common);
    commands.push_back({sub, [a] { return run_majorize(*a); }});
  }
  {
    auto a = std::make_shared<SchurArgs>();
    auto* sub = app.add_subcommand("schur-check", "Empirical Schur convexity check of a built-in function");
    sub->add_option("--function", a->function, "Function to test")->required()->check(CLI::IsMember(function_names()));
    sub->add_option("--n", a->n, "Dimension")->check(CLI::Range(1, 64))->capture_default_str();
    sub->add_option("--sense", a->sense, "Expected sense (default: the function's own)")
        ->check(CLI::IsMember({"convex", "concave"}));
    sub->add_option("--trials", a->trials, "Number of comparable pairs")->capture_default_str();
    sub->add_option("--constraint", a->constraint, "Sampling domain (default: the function's own)")
        ->check(CLI::IsMember({"none", "nonnegative", "probability", "composition"}));
    sub->add_option("--total", a->total, "Total for integer compositions (default 3n)");
    sub->add_option("--tolerance", a->tolerance, "Allowed slack")->capture_default_str();
    add_seed(sub, common);
    add_format(sub, common);
    commands.push_back({sub, [a, &common] { return run_schur(*a, common.seed); }});
  }
  {
    auto a = std::make_shared<LorenzArgs>();
    auto* sub = app.add_subcommand("lorenz", "Lorenz curves and pairwise Lorenz order");
    sub->add_option("files", a->files, "One-column CSV files, one sample each");
    add_vector(sub, a->x, "x", "Sample x");
    add_vector(sub, a->y, "y", "Sample y");
    add_format(sub, common);
    commands.push_back({sub, [a] { return run_lorenz(*a); }});
  }
  {
    auto a = std::make_shared<CoverArgs>();
    auto* sub = app.add_subcommand("cover", "Probability that random arcs cover the circle");
    add_vector(sub, a->lengths, "lengths", "Arc lengths as fractions of the circumference");
    sub->add_flag("--exact", a->exact, "Exact value only (equal arcs)");
    sub->add_option("--trials", a->trials, "Monte Carlo trials")->check(CLI::PositiveNumber)->capture_default_str();
    sub->add_option("--schur", a->schur_pairs, "Run the Schur convexity experiment over this many pairs");
    sub->add_option("--n", a->n, "Arcs per pair for --schur")->capture_default_str();
    sub->add_option("--total", a->total, "Total arc length for --schur")->capture_default_str();
    add_seed(sub, common);
    add_format(sub, common);
    commands.push_back({sub, [a, &common] { return run_cover(*a, common.seed); }});
  }
  {
    auto a = std::make_shared<PatternArgs>();
    auto* sub = app.add_subcommand("pattern", "Waiting time until every symbol has appeared");
    add_vector(sub, a->probs, "probs", "Symbol probabilities");
    sub->add_flag("--exact", a->exact, "Exact Markov chain solution (default)");
    sub->add_flag("--mc", a->mc, "Monte Carlo estimate");
    sub->add_option("--trials", a->trials, "Monte Carlo trials")->check(CLI::PositiveNumber)->capture_default_str();
    sub->add_option("--tail", a->tail, "Values n for P(N > n)")->delimiter(',');
    add_seed(sub, common);
    add_format(sub, common);
    commands.push_back({sub, [a, &common] { return run_pattern(*a, common.seed); }});
  }
  {
    auto a = std::make_shared<PairedArgs>();
    auto* sub = app.add_subcommand("paired", "Paired comparison matrices: strengths, transitivity, minimality");
    sub->add_option("--file", a->file, "Square CSV matrix; diagonal cells are ignored");
    sub->add_option("--matrix", a->matrix, "Inline matrix, rows separated by ';'");
    sub->add_option("--against-file", a->against_file, "Second matrix for matrix majorization");
    sub->add_option("--against", a->against, "Second matrix inline");
    sub->add_option("--falsify", a->falsify, "Run the minimality falsifier for this many attempts");
    sub->add_option("--step", a->step, "Largest 3-cycle perturbation")->capture_default_str();
    add_seed(sub, common);
    add_format(sub, common);
    commands.push_back({sub, [a, &common] { return run_paired(*a, common.seed); }});
  }
}

}  // namespace majorkit::cli
