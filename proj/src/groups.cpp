#include "pmskit/groups.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace pmskit {

Point GroupTable::inverse(Point p) const {
  for (Point q = 0; q < size(); ++q) {
    if (mul(p, q) == identity && mul(q, p) == identity) return q;
  }
  throw DomainError("group element '" + labels.at(p) + "' has no inverse");
}

GroupTable cyclic_group(std::size_t n) {
  if (n == 0) throw DomainError("cyclic_group: order must be positive");
  GroupTable g;
  for (std::size_t k = 0; k < n; ++k) g.labels.push_back(std::to_string(k));
  g.op.resize(n * n);
  for (Point p = 0; p < n; ++p) {
    for (Point q = 0; q < n; ++q) g.op[p * n + q] = (p + q) % n;
  }
  return g;
}

GroupTable direct_product(const GroupTable& a, const GroupTable& b) {
  GroupTable g;
  const std::size_t m = b.size();
  for (const auto& x : a.labels) {
    for (const auto& y : b.labels) g.labels.push_back("(" + x + "," + y + ")");
  }
  const std::size_t n = g.size();
  g.op.resize(n * n);
  for (Point p = 0; p < n; ++p) {
    for (Point q = 0; q < n; ++q) g.op[p * n + q] = a.mul(p / m, q / m) * m + b.mul(p % m, q % m);
  }
  g.identity = a.identity * m + b.identity;
  return g;
}

GroupTable symmetric_group_3() {
  using Perm = std::array<int, 3>;
  const std::vector<Perm> elems{{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  GroupTable g;
  g.labels = {"e", "(12)", "(13)", "(23)", "(123)", "(132)"};
  const std::size_t n = elems.size();
  g.op.resize(n * n);
  for (Point p = 0; p < n; ++p) {
    for (Point q = 0; q < n; ++q) {
      Perm c{};
      for (int x = 0; x < 3; ++x) c[x] = elems[p][elems[q][x]];
      g.op[p * n + q] = static_cast<Point>(std::find(elems.begin(), elems.end(), c) - elems.begin());
    }
  }
  return g;
}

ProbGroup group_from_length(const GroupTable& table, const std::vector<Rational>& length, const TriangleFn& tf,
                            const DistFn& profile) {
  const std::size_t n = table.size();
  if (length.size() != n) throw DomainError("length table size mismatch");
  std::vector<Point> inv(n);
  for (Point p = 0; p < n; ++p) inv[p] = table.inverse(p);
  std::vector<DistFn> metric(n * n);
  for (Point p = 0; p < n; ++p) {
    for (Point q = 0; q < n; ++q) metric[p * n + q] = scale_time(profile, length[table.mul(inv[p], q)]);
  }
  return ProbGroup(ProbSpace(table.labels, std::move(metric), tf), table.op, table.identity);
}

ProbGroup relabel(const ProbGroup& g, const std::vector<Point>& perm, std::vector<std::string> labels) {
  const std::size_t n = g.size();
  if (perm.size() != n || labels.size() != n) throw DomainError("relabel: size mismatch");
  std::vector<Point> table(n * n);
  std::vector<DistFn> metric(n * n);
  for (Point p = 0; p < n; ++p) {
    for (Point q = 0; q < n; ++q) {
      table[perm[p] * n + perm[q]] = perm[g.op(p, q)];
      metric[perm[p] * n + perm[q]] = g.space().d(p, q);
    }
  }
  return ProbGroup(ProbSpace(std::move(labels), std::move(metric), g.space().tf()), std::move(table),
                   perm[g.identity()]);
}

std::vector<std::vector<Point>> isometric_automorphisms(const ProbGroup& g) {
  const std::size_t n = g.size();
  std::vector<Point> perm(n);
  std::iota(perm.begin(), perm.end(), Point{0});
  std::vector<std::vector<Point>> out;
  do {
    bool ok = true;
    for (Point p = 0; p < n && ok; ++p) {
      for (Point q = 0; q < n && ok; ++q) {
        ok = perm[g.op(p, q)] == g.op(perm[p], perm[q]) && g.space().d(perm[p], perm[q]) == g.space().d(p, q);
      }
    }
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<NamedGroup> standard_test_groups(const TriangleFn& tf) {
  const GroupTable z2 = cyclic_group(2);
  std::vector<NamedGroup> out;
  out.push_back({"Z2", group_from_length(z2, {0, 1}, tf)});
  out.push_back({"Z3", group_from_length(cyclic_group(3), {0, 1, 1}, tf)});
  out.push_back({"Z4", group_from_length(cyclic_group(4), {0, 1, 2, 1}, tf)});
  // Elements (0,0), (0,1), (1,0), (1,1).
  out.push_back({"Z2xZ2", group_from_length(direct_product(z2, z2), {0, 2, 1, 2}, tf)});
  // Transpositions at length 1, 3-cycles at length 2.
  out.push_back({"S3", group_from_length(symmetric_group_3(), {0, 1, 1, 1, 2, 2}, tf)});
  return out;
}

}  // namespace pmskit
