#include "majorkit/epidemics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "majorkit/errors.hpp"
#include "majorkit/majorization.hpp"

namespace majorkit {

Lifestyle::Lifestyle(std::vector<long> blocks) : blocks_(std::move(blocks)) {
  if (blocks_.empty()) throw InvalidArgument("Lifestyle: need at least one block");
  for (long b : blocks_) {
    if (b < 0) throw InvalidArgument("Lifestyle: block sizes must be >= 0");
    total_ += b;
  }
}

RealVec Lifestyle::as_real() const {
  return RealVec(std::vector<double>(blocks_.begin(), blocks_.end()));
}

ContactModel::ContactModel(ProbVec alpha, std::vector<double> avoid)
    : alpha_(std::move(alpha)), avoid_(std::move(avoid)) {
  if (alpha_.size() != avoid_.size())
    throw InvalidArgument("ContactModel: alpha has " + std::to_string(alpha_.size()) +
                          " carriers but p has " + std::to_string(avoid_.size()));
  for (double a : alpha_)
    if (!(a > 0.0)) throw InvalidArgument("ContactModel: preferences must be strictly positive");
  for (double p : avoid_)
    if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument("ContactModel: avoidance probabilities must lie in [0, 1]");
}

double escape_probability(const Lifestyle& k, const ContactModel& m) {
  double product = 1.0;
  for (long block : k.blocks()) {
    if (block == 0) continue;
    double factor = 0.0;
    for (std::size_t j = 0; j < m.carriers(); ++j)
      factor += m.alpha()[j] * std::pow(m.avoid()[j], static_cast<double>(block));
    product *= factor;
  }
  return std::clamp(product, 0.0, 1.0);
}

ContactModel random_contact_model(std::size_t carriers, Engine& engine) {
  std::vector<double> w(carriers), avoid(carriers);
  for (double& x : w) x = exponential(engine, 1.0) + 1e-3;
  for (double& x : avoid) x = uniform01(engine);
  return ContactModel(ProbVec::normalized(std::move(w)), std::move(avoid));
}

std::vector<std::vector<long>> compositions(unsigned contacts) {
  std::vector<std::vector<long>> out;
  if (contacts == 0) return {{0}};
  std::vector<long> current(contacts, 0);
  // Stars and bars over `contacts` slots.
  auto fill = [&](auto&& self, std::size_t slot, long remaining) -> void {
    if (slot + 1 == current.size()) {
      current[slot] = remaining;
      out.push_back(current);
      return;
    }
    for (long v = remaining; v >= 0; --v) {
      current[slot] = v;
      self(self, slot + 1, remaining - v);
    }
  };
  fill(fill, 0, static_cast<long>(contacts));
  return out;
}

LifestyleSchurReport lifestyle_schur_check(unsigned contacts, std::size_t carriers, std::size_t models,
                                           std::uint64_t seed) {
  if (contacts < 1 || contacts > kMaxExhaustiveContacts)
    throw SizeError("lifestyle_schur_check: J must lie in [1, " + std::to_string(kMaxExhaustiveContacts) + "]");
  if (carriers < 1 || carriers > kMaxExhaustiveCarriers)
    throw SizeError("lifestyle_schur_check: n must lie in [1, " + std::to_string(kMaxExhaustiveCarriers) + "]");

  const auto all = compositions(contacts);
  // Group compositions by sorted shape (a partition of J).
  std::map<std::vector<long>, std::vector<std::size_t>> by_shape;
  for (std::size_t c = 0; c < all.size(); ++c) {
    auto shape = all[c];
    std::sort(shape.begin(), shape.end(), std::greater<>());
    by_shape[shape].push_back(c);
  }
  std::vector<std::vector<long>> shapes;
  std::vector<const std::vector<std::size_t>*> members;
  for (const auto& [shape, ids] : by_shape) {
    shapes.push_back(shape);
    members.push_back(&ids);
  }
  const std::size_t s = shapes.size();
  std::vector<std::pair<std::size_t, std::size_t>> comparable;  // (upper shape, lower shape)
  std::size_t pair_count = 0;
  for (std::size_t a = 0; a < s; ++a)
    for (std::size_t b = 0; b < s; ++b) {
      const RealVec xa(std::vector<double>(shapes[a].begin(), shapes[a].end()));
      const RealVec xb(std::vector<double>(shapes[b].begin(), shapes[b].end()));
      if (majorizes(xa, xb)) {
        comparable.emplace_back(a, b);
        pair_count += members[a]->size() * members[b]->size();
      }
    }

  LifestyleSchurReport out;
  out.report.trials = models;
  out.comparable_pairs = pair_count;
  out.compositions = all.size();

  std::vector<long> monogamous(contacts, 0);
  monogamous[0] = contacts;
  const Lifestyle mono(monogamous);
  const Lifestyle random_style(std::vector<long>(contacts, 1));

  std::vector<double> h(all.size());
  for (std::size_t m = 0; m < models; ++m) {
    Engine engine = make_engine(seed, m);
    const ContactModel model = random_contact_model(carriers, engine);
    for (std::size_t c = 0; c < all.size(); ++c) h[c] = escape_probability(Lifestyle(all[c]), model);

    std::vector<std::size_t> argmin(s), argmax(s);
    for (std::size_t a = 0; a < s; ++a) {
      const auto& ids = *members[a];
      argmin[a] = *std::min_element(ids.begin(), ids.end(), [&](auto x, auto y) { return h[x] < h[y]; });
      argmax[a] = *std::max_element(ids.begin(), ids.end(), [&](auto x, auto y) { return h[x] < h[y]; });
    }
    for (const auto& [a, b] : comparable) {
      const std::size_t worst_upper = argmin[a];
      const std::size_t worst_lower = argmax[b];
      if (h[worst_upper] < h[worst_lower] - kEpidemicSlack) {
        out.report.record({ComparablePair{Lifestyle(all[worst_upper]).as_real(), Lifestyle(all[worst_lower]).as_real()},
                           h[worst_upper], h[worst_lower], kEpidemicSlack});
      }
    }
    if (escape_probability(mono, model) < escape_probability(random_style, model) - kEpidemicSlack)
      out.extremes_ordered = false;
  }
  return out;
}

}  // namespace majorkit
