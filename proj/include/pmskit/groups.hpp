#pragma once

#include <string>
#include <vector>

#include "pmskit/space.hpp"

namespace pmskit {

// Bare Cayley table, row-major: op[p * n + q] = p·q.
struct GroupTable {
  std::vector<std::string> labels;
  std::vector<Point> op;
  Point identity = 0;

  std::size_t size() const { return labels.size(); }
  Point mul(Point p, Point q) const { return op[p * size() + q]; }
  Point inverse(Point p) const;
};

GroupTable cyclic_group(std::size_t n);
GroupTable direct_product(const GroupTable& a, const GroupTable& b);
GroupTable symmetric_group_3();

// D(x, y)(t) = profile(t / length(x^-1 y)), with length 0 only at the
// identity. With a symmetric, conjugation-invariant, subadditive length this
// is an invariant metric for every sup-convolution triangle function; the
// default profile H_1 gives the Menger lift D(x,y) = H_{length(x^-1 y)}.
ProbGroup group_from_length(const GroupTable& table, const std::vector<Rational>& length, const TriangleFn& tf,
                            const DistFn& profile = heaviside(1));

// Copy of g in which old point p becomes perm[p] with label labels[perm[p]].
ProbGroup relabel(const ProbGroup& g, const std::vector<Point>& perm, std::vector<std::string> labels);

// Every bijection of the carrier that is a group automorphism and preserves D.
std::vector<std::vector<Point>> isometric_automorphisms(const ProbGroup& g);

struct NamedGroup {
  std::string name;
  ProbGroup group;
};

// Z_2, Z_3, Z_4, Z_2 x Z_2 and S_3 with invariant Menger metrics.
std::vector<NamedGroup> standard_test_groups(const TriangleFn& tf);

}  // namespace pmskit
