#include "pmskit/space.hpp"

#include <set>

#include "pmskit/convolution.hpp"

namespace pmskit {

void Report::merge(const Report& other) {
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
}

ProbSpace::ProbSpace(std::vector<std::string> points, std::vector<DistFn> metric, TriangleFn tf)
    : points_(std::move(points)), metric_(std::move(metric)), tf_(tf) {
  if (metric_.size() != points_.size() * points_.size()) {
    throw DomainError("metric table has " + std::to_string(metric_.size()) + " entries, expected " +
                      std::to_string(points_.size() * points_.size()));
  }
  std::set<std::string_view> seen;
  for (const auto& p : points_) {
    if (!seen.insert(p).second) throw DomainError("duplicate point label '" + p + "'");
  }
}

Point ProbSpace::index_of(std::string_view label) const {
  for (Point p = 0; p < points_.size(); ++p) {
    if (points_[p] == label) return p;
  }
  throw DomainError("unknown point '" + std::string(label) + "'");
}

DistFn ProbSpace::star(const DistFn& f, const DistFn& g) const { return apply(tf_, f, g); }

ProbGroup::ProbGroup(ProbSpace space, std::vector<Point> table, Point identity)
    : space_(std::move(space)), table_(std::move(table)), identity_(identity) {
  const std::size_t n = space_.size();
  if (table_.size() != n * n) throw DomainError("group table must be " + std::to_string(n) + "x" + std::to_string(n));
  if (identity_ >= n) throw DomainError("group identity is not a point");
  for (Point x : table_) {
    if (x >= n) throw DomainError("group table entry outside the carrier");
  }
  inverse_.assign(n, npos);
  for (Point p = 0; p < n; ++p) {
    for (Point q = 0; q < n; ++q) {
      if (op(p, q) == identity_ && op(q, p) == identity_) {
        inverse_[p] = q;
        break;
      }
    }
  }
}

Report validate_space(const ProbSpace& s) {
  Report report;
  const std::size_t n = s.size();
  const DistFn h0 = heaviside(0);
  for (Point p = 0; p < n; ++p) {
    for (Point q = 0; q < n; ++q) {
      const DistFn& d = s.d(p, q);
      if (p == q && !d.is_identity()) {
        report.add({"identity", {s.label(p)}, d, h0});
      } else if (p != q && d.is_identity()) {
        report.add({"separation", {s.label(p), s.label(q)}, d, std::nullopt});
      }
      if (p < q && d != s.d(q, p)) report.add({"symmetry", {s.label(p), s.label(q)}, d, s.d(q, p)});
    }
  }
  for (Point p = 0; p < n; ++p) {
    for (Point q = 0; q < n; ++q) {
      for (Point r = 0; r < n; ++r) {
        DistFn lhs = s.star(s.d(p, q), s.d(q, r));
        if (!leq(lhs, s.d(p, r))) {
          report.add({"triangle", {s.label(p), s.label(q), s.label(r)}, std::move(lhs), s.d(p, r)});
        }
      }
    }
  }
  return report;
}

Report validate_invariant_group(const ProbGroup& g) {
  Report report;
  const ProbSpace& s = g.space();
  const std::size_t n = g.size();
  const Point e = g.identity();
  for (Point p = 0; p < n; ++p) {
    if (g.op(e, p) != p || g.op(p, e) != p) report.add({"group.identity", {s.label(p)}, {}, {}});
    if (g.inverse(p) == npos) report.add({"group.inverse", {s.label(p)}, {}, {}});
    for (Point q = 0; q < n; ++q) {
      for (Point r = 0; r < n; ++r) {
        if (g.op(g.op(p, q), r) != g.op(p, g.op(q, r))) {
          report.add({"group.associativity", {s.label(p), s.label(q), s.label(r)}, {}, {}});
        }
      }
    }
  }
  for (Point p = 0; p < n; ++p) {
    for (Point q = 0; q < n; ++q) {
      for (Point r = 0; r < n; ++r) {
        const DistFn& base = s.d(p, q);
        const DistFn& right = s.d(g.op(p, r), g.op(q, r));
        const DistFn& left = s.d(g.op(r, p), g.op(r, q));
        if (right != base) report.add({"invariance.right", {s.label(p), s.label(q), s.label(r)}, right, base});
        if (left != base) report.add({"invariance.left", {s.label(p), s.label(q), s.label(r)}, left, base});
      }
    }
  }
  return report;
}

Report validate_classical_metric(const ClassicalMetric& m) {
  Report report;
  const std::size_t n = m.points.size();
  if (m.d.size() != n * n) {
    report.add({"shape", {}, {}, {}});
    return report;
  }
  for (Point p = 0; p < n; ++p) {
    for (Point q = 0; q < n; ++q) {
      const Rational& x = m.at(p, q);
      if (sgn(x) < 0) report.add({"nonnegative", {m.points[p], m.points[q]}, {}, {}});
      if (p == q && sgn(x) != 0) report.add({"identity", {m.points[p]}, {}, {}});
      if (p != q && sgn(x) == 0) report.add({"separation", {m.points[p], m.points[q]}, {}, {}});
      if (p < q && x != m.at(q, p)) report.add({"symmetry", {m.points[p], m.points[q]}, {}, {}});
      for (Point r = 0; r < n; ++r) {
        if (m.at(p, r) > x + m.at(q, r)) report.add({"triangle", {m.points[p], m.points[q], m.points[r]}, {}, {}});
      }
    }
  }
  return report;
}

ProbSpace menger_from_classical(const ClassicalMetric& m, const TriangleFn& tf) {
  if (Report r = validate_classical_metric(m); !r.passed()) {
    throw AxiomError("classical table is not a metric (" + r.violations.front().axiom + ")", r);
  }
  std::set<Rational> distances(m.d.begin(), m.d.end());
  for (const Rational& a : distances) {
    for (const Rational& b : distances) {
      if (apply(tf, heaviside(a), heaviside(b)) != heaviside(a + b)) {
        throw DomainError("triangle function " + tag_of(tf) + " breaks H_a*H_b=H_{a+b} at a=" + to_string(a) +
                          ", b=" + to_string(b));
      }
    }
  }
  std::vector<DistFn> metric;
  metric.reserve(m.d.size());
  for (const Rational& x : m.d) metric.push_back(heaviside(x));
  return ProbSpace(m.points, std::move(metric), tf);
}

ProbSpace scale_metric(const ProbSpace& s, const Rational& k) {
  if (sgn(k) < 0) throw DomainError("scale_metric: negative factor " + to_string(k));
  std::vector<DistFn> metric;
  metric.reserve(s.metric().size());
  for (const DistFn& f : s.metric()) metric.push_back(scale_time(f, k));
  return ProbSpace(s.points(), std::move(metric), s.tf());
}

ProbSpace discrete_space(std::vector<std::string> points, const TriangleFn& tf) {
  if (points.empty()) throw DomainError("discrete_space: empty carrier");
  const std::size_t n = points.size();
  std::vector<DistFn> metric(n * n);
  for (Point p = 0; p < n; ++p) metric[p * n + p] = heaviside(0);
  return ProbSpace(std::move(points), std::move(metric), tf);
}

void require_valid(const ProbSpace& s) {
  if (Report r = validate_space(s); !r.passed()) {
    throw AxiomError("not a probabilistic metric space (" + r.violations.front().axiom + ")", r);
  }
}

}  // namespace pmskit
