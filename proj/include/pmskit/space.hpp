#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pmskit/dist_fn.hpp"
#include "pmskit/tnorm.hpp"

namespace pmskit {

using Point = std::size_t;
inline constexpr Point npos = std::numeric_limits<Point>::max();

// Outcome of an axiom check. Every violation carries the offending tuple
// (as point labels) and, where meaningful, both sides of the failed
// comparison.
struct Violation {
  std::string axiom;
  std::vector<std::string> witness;
  std::optional<DistFn> lhs;
  std::optional<DistFn> rhs;
};

struct Report {
  std::vector<Violation> violations;

  bool passed() const { return violations.empty(); }
  void add(Violation v) { violations.push_back(std::move(v)); }
  void merge(const Report& other);
};

// DomainError raised when an input fails an axiom check; keeps the report.
class AxiomError : public DomainError {
 public:
  AxiomError(const std::string& what, Report report) : DomainError(what), report_(std::move(report)) {}
  const Report& report() const { return report_; }

 private:
  Report report_;
};

// Finite carrier with a total table of distance distributions. The table is
// accepted as given; validate_space decides whether it is a probabilistic
// metric space.
class ProbSpace {
 public:
  ProbSpace() = default;
  ProbSpace(std::vector<std::string> points, std::vector<DistFn> metric, TriangleFn tf);

  std::size_t size() const { return points_.size(); }
  const std::vector<std::string>& points() const { return points_; }
  const std::string& label(Point p) const { return points_.at(p); }
  Point index_of(std::string_view label) const;  // throws DomainError

  const DistFn& d(Point p, Point q) const { return metric_[p * size() + q]; }
  const std::vector<DistFn>& metric() const { return metric_; }
  const TriangleFn& tf() const { return tf_; }

  DistFn star(const DistFn& f, const DistFn& g) const;

  friend bool operator==(const ProbSpace&, const ProbSpace&) = default;

 private:
  std::vector<std::string> points_;
  std::vector<DistFn> metric_;
  TriangleFn tf_;
};

// Finite group structure over a ProbSpace's carrier.
class ProbGroup {
 public:
  ProbGroup() = default;
  // `table[p * n + q]` is p·q. Entries must be valid point indices; group
  // laws are not checked here (see validate_invariant_group).
  ProbGroup(ProbSpace space, std::vector<Point> table, Point identity);

  const ProbSpace& space() const { return space_; }
  std::size_t size() const { return space_.size(); }
  Point op(Point p, Point q) const { return table_[p * size() + q]; }
  Point identity() const { return identity_; }
  // Two-sided inverse, or npos when the table has none for p.
  Point inverse(Point p) const { return inverse_[p]; }
  const std::vector<Point>& table() const { return table_; }

  friend bool operator==(const ProbGroup&, const ProbGroup&) = default;

 private:
  ProbSpace space_;
  std::vector<Point> table_;
  Point identity_ = 0;
  std::vector<Point> inverse_;
};

// Axioms: D(p,q) = H_0 iff p = q; symmetry; D(p,q) * D(q,r) <= D(p,r).
Report validate_space(const ProbSpace& s);

// Group laws (associativity, identity, inverses) by enumeration plus the
// invariance D(pr,qr) = D(rp,rq) = D(p,q) for every triple. The space axioms
// are not included; run validate_space separately.
Report validate_invariant_group(const ProbGroup& g);

// Classical metric table over points, row-major.
struct ClassicalMetric {
  std::vector<std::string> points;
  std::vector<Rational> d;

  const Rational& at(Point p, Point q) const { return d[p * points.size() + q]; }
};

// Witnesses that d is not a metric (empty when it is).
Report validate_classical_metric(const ClassicalMetric& m);

// D(p,q) = H_{d(p,q)}. Throws DomainError when d is not a metric or when tf
// breaks H_a * H_b = H_{a+b} on the distances involved.
ProbSpace menger_from_classical(const ClassicalMetric& m, const TriangleFn& tf);

// D_k(p,q)(t) = D(p,q)(t/k); k = 0 gives the all-H_0 table, which is not a
// metric space. The result is returned unchecked.
ProbSpace scale_metric(const ProbSpace& s, const Rational& k);

// D(p,p) = H_0, D(p,q) = H_inf otherwise.
ProbSpace discrete_space(std::vector<std::string> points, const TriangleFn& tf);

// Throws DomainError unless validate_space passes.
void require_valid(const ProbSpace& s);

}  // namespace pmskit
