#pragma once

#include <map>
#include <vector>

#include "pmskit/space.hpp"

namespace pmskit {

// A total map carrier -> Delta+, indexed by point. The space it lives over
// is supplied by the caller of each operation.
struct LipMap {
  std::vector<DistFn> values;

  const DistFn& operator()(Point p) const { return values.at(p); }
  std::size_t size() const { return values.size(); }

  friend bool operator==(const LipMap&, const LipMap&) = default;
};

// A map defined on a subset of the carrier.
using PartialMap = std::map<Point, DistFn>;

// D(x,y) * f(y) <= f(x) for every ordered pair. Witnesses are (x, y).
Report is_one_lipschitz(const ProbSpace& s, const LipMap& f);

// delta_a : y |-> D(y, a).
LipMap delta_embed(const ProbSpace& s, Point a);

// <f, F>(x) = f(x) * F.
LipMap shift_map(const ProbSpace& s, const LipMap& f, const DistFn& shift);

// x |-> sup_{y in A} D(x, y). Needs a sup-continuous triangle function.
LipMap dist_to_set(const ProbSpace& s, const std::vector<Point>& subset);

// f~(x) = sup_{a in A} D(a, x) * f(a); agrees with f on A and is
// 1-Lipschitz on the whole carrier. Throws AxiomError (with the failing
// pairs) when f is not 1-Lipschitz on A, DomainError for an empty domain or
// a triangle function that is not sup-continuous.
LipMap mcshane_extend(const ProbSpace& s, const PartialMap& partial);

// Pointwise supremum of a nonempty family of maps.
LipMap pointwise_sup(std::span<const LipMap> family);

struct ClassicalLift {
  LipMap map;               // x |-> H_{L(x)} over the Menger lift
  Report probabilistic;     // is_one_lipschitz on the lifted map
  Report classical;         // pairs with L(x) > L(y) + d(x, y)
  bool equivalent() const { return probabilistic.passed() == classical.passed(); }
};

// Lifts a nonnegative real map L on a classical metric space.
ClassicalLift lift_classical(const ClassicalMetric& m, const std::vector<Rational>& height, const TriangleFn& tf);

void require_sup_continuous(const TriangleFn& tf, const char* operation);

}  // namespace pmskit
