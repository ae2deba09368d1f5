#include "pmskit/lipschitz.hpp"

namespace pmskit {

void require_sup_continuous(const TriangleFn& tf, const char* operation) {
  if (!tf.sup_continuous()) {
    throw DomainError(std::string(operation) + " needs a sup-continuous triangle function, got " + tag_of(tf));
  }
}

namespace {

void require_total(const ProbSpace& s, const LipMap& f) {
  if (f.size() != s.size()) {
    throw DomainError("map has " + std::to_string(f.size()) + " values for a carrier of " + std::to_string(s.size()));
  }
}

}  // namespace

Report is_one_lipschitz(const ProbSpace& s, const LipMap& f) {
  require_total(s, f);
  Report report;
  for (Point x = 0; x < s.size(); ++x) {
    for (Point y = 0; y < s.size(); ++y) {
      DistFn lhs = s.star(s.d(x, y), f(y));
      if (!leq(lhs, f(x))) report.add({"lipschitz", {s.label(x), s.label(y)}, std::move(lhs), f(x)});
    }
  }
  return report;
}

LipMap delta_embed(const ProbSpace& s, Point a) {
  if (a >= s.size()) throw DomainError("delta_embed: point outside the carrier");
  LipMap out;
  out.values.reserve(s.size());
  for (Point y = 0; y < s.size(); ++y) out.values.push_back(s.d(y, a));
  return out;
}

LipMap shift_map(const ProbSpace& s, const LipMap& f, const DistFn& shift) {
  require_total(s, f);
  LipMap out;
  out.values.reserve(f.size());
  for (const DistFn& v : f.values) out.values.push_back(s.star(v, shift));
  return out;
}

LipMap dist_to_set(const ProbSpace& s, const std::vector<Point>& subset) {
  require_sup_continuous(s.tf(), "dist_to_set");
  if (subset.empty()) throw DomainError("dist_to_set: empty subset");
  LipMap out;
  for (Point x = 0; x < s.size(); ++x) {
    std::vector<DistFn> family;
    for (Point y : subset) {
      if (y >= s.size()) throw DomainError("dist_to_set: point outside the carrier");
      family.push_back(s.d(x, y));
    }
    out.values.push_back(pmskit::pointwise_sup(family));
  }
  return out;
}

LipMap mcshane_extend(const ProbSpace& s, const PartialMap& partial) {
  require_sup_continuous(s.tf(), "mcshane_extend");
  if (partial.empty()) throw DomainError("mcshane_extend: empty domain");
  Report report;
  for (const auto& [a, fa] : partial) {
    if (a >= s.size()) throw DomainError("mcshane_extend: point outside the carrier");
    for (const auto& [b, fb] : partial) {
      DistFn lhs = s.star(s.d(a, b), fb);
      if (!leq(lhs, fa)) report.add({"lipschitz", {s.label(a), s.label(b)}, std::move(lhs), fa});
    }
  }
  if (!report.passed()) throw AxiomError("partial map is not 1-Lipschitz on its domain", std::move(report));

  LipMap out;
  out.values.reserve(s.size());
  for (Point x = 0; x < s.size(); ++x) {
    std::vector<DistFn> family;
    family.reserve(partial.size());
    for (const auto& [a, fa] : partial) family.push_back(s.star(s.d(a, x), fa));
    out.values.push_back(pmskit::pointwise_sup(family));
  }
  return out;
}

LipMap pointwise_sup(std::span<const LipMap> family) {
  if (family.empty()) throw DomainError("pointwise_sup: empty family of maps");
  LipMap out = family.front();
  for (std::size_t k = 1; k < family.size(); ++k) {
    if (family[k].size() != out.size()) throw DomainError("pointwise_sup: maps over different carriers");
    for (std::size_t x = 0; x < out.size(); ++x) out.values[x] = pmskit::pointwise_sup(out.values[x], family[k].values[x]);
  }
  return out;
}

ClassicalLift lift_classical(const ClassicalMetric& m, const std::vector<Rational>& height, const TriangleFn& tf) {
  const ProbSpace s = menger_from_classical(m, tf);
  if (height.size() != s.size()) throw DomainError("lift_classical: height table size mismatch");
  ClassicalLift out;
  for (const Rational& h : height) out.map.values.push_back(heaviside(h));
  out.probabilistic = is_one_lipschitz(s, out.map);
  for (Point x = 0; x < s.size(); ++x) {
    for (Point y = 0; y < s.size(); ++y) {
      if (height[x] > height[y] + m.at(x, y)) out.classical.add({"lipschitz", {s.label(x), s.label(y)}, {}, {}});
    }
  }
  return out;
}

}  // namespace pmskit
