#include "pmskit/random.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <string>

#include "pmskit/convolution.hpp"

namespace pmskit {

std::uint64_t seed_from_env(std::uint64_t fallback) {
  if (const char* s = std::getenv("PMSKIT_SEED"); s != nullptr && *s != '\0') {
    return std::stoull(s);
  }
  return fallback;
}

namespace {

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }
bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

}  // namespace

Rational random_rational(Rng& rng, long max_den, long max_num) {
  Rational r(uniform(rng, 1, max_num), uniform(rng, 1, max_den));
  r.canonicalize();
  return r;
}

DistFn random_dist_fn(Rng& rng, const DistGenOptions& opt) {
  if (coin(rng, opt.p_empty)) return DistFn();
  // At least max_den distinct fractions p/q with q <= max_den exist.
  const auto k = static_cast<std::size_t>(uniform(rng, 1, std::min(static_cast<long>(opt.max_jumps), opt.max_den)));
  std::set<Rational> levels;
  while (levels.size() < k) {
    const long q = uniform(rng, 1, opt.max_den);
    Rational v(uniform(rng, 1, q), q);
    v.canonicalize();
    levels.insert(v);
  }
  if (!coin(rng, opt.p_defective) && *levels.rbegin() != 1) {
    levels.erase(std::prev(levels.end()));
    levels.insert(Rational(1));
  }
  std::vector<Jump> jumps;
  Rational t = coin(rng, opt.p_atom_at_zero) ? Rational(0) : random_rational(rng, opt.max_den, 2 * opt.max_den);
  for (const Rational& v : levels) {
    jumps.push_back(Jump{t, v});
    t += random_rational(rng, opt.max_den, 2 * opt.max_den);
  }
  return DistFn(std::move(jumps));
}

DistFn random_dist_fn_exact(Rng& rng, std::size_t jumps, long level_den, long time_den) {
  if (static_cast<long>(jumps) > level_den) throw DomainError("random_dist_fn_exact: not enough distinct levels");
  std::set<long> nums;
  while (nums.size() < jumps) nums.insert(uniform(rng, 1, level_den));
  std::vector<Jump> out;
  // gmpxx's two-argument constructor does not reduce; arithmetic needs reduced operands.
  auto ratio = [](long p, long q) {
    Rational r(p, q);
    r.canonicalize();
    return r;
  };
  Rational t = ratio(uniform(rng, 0, time_den), time_den);
  for (long n : nums) {
    out.push_back(Jump{t, ratio(n, level_den)});
    t += ratio(uniform(rng, 1, time_den), time_den);
  }
  return DistFn(std::move(out));
}

ClassicalMetric random_classical_metric(Rng& rng, std::size_t n, long max_den) {
  ClassicalMetric m;
  for (std::size_t k = 0; k < n; ++k) m.points.push_back("p" + std::to_string(k));
  m.d.assign(n * n, Rational(0));
  for (Point p = 0; p < n; ++p) {
    for (Point q = p + 1; q < n; ++q) {
      m.d[p * n + q] = m.d[q * n + p] = random_rational(rng, max_den, 3 * max_den);
    }
  }
  for (Point k = 0; k < n; ++k) {
    for (Point p = 0; p < n; ++p) {
      for (Point q = 0; q < n; ++q) {
        Rational via = m.d[p * n + k] + m.d[k * n + q];
        if (via < m.d[p * n + q]) m.d[p * n + q] = via;
      }
    }
  }
  return m;
}

ProbSpace random_valid_space(Rng& rng, std::size_t n, const TriangleFn& tf, const DistGenOptions& opt) {
  if (!tf.sup_continuous()) throw DomainError("random_valid_space: closure needs a sup-continuous triangle function");
  std::vector<std::string> points;
  for (std::size_t k = 0; k < n; ++k) points.push_back("p" + std::to_string(k));
  std::vector<DistFn> d(n * n);
  for (Point p = 0; p < n; ++p) {
    d[p * n + p] = heaviside(0);
    for (Point q = p + 1; q < n; ++q) {
      DistFn f;
      do {
        f = random_dist_fn(rng, opt);
      } while (f.is_identity());
      d[p * n + q] = d[q * n + p] = f;
    }
  }
  for (Point k = 0; k < n; ++k) {
    for (Point p = 0; p < n; ++p) {
      for (Point q = 0; q < n; ++q) {
        d[p * n + q] = pointwise_sup(d[p * n + q], apply(tf, d[p * n + k], d[k * n + q]));
      }
    }
  }
  ProbSpace s(std::move(points), std::move(d), tf);
  if (!validate_space(s).passed()) throw std::logic_error("random_valid_space produced an invalid table");
  return s;
}

LipMap random_lip_map(Rng& rng, const ProbSpace& s, const DistGenOptions& opt) {
  const std::size_t n = s.size();
  std::vector<Point> anchors(n);
  for (Point p = 0; p < n; ++p) anchors[p] = p;
  std::shuffle(anchors.begin(), anchors.end(), rng);
  const std::size_t count = s.tf().sup_continuous() ? static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(n))) : 1;
  std::vector<LipMap> parts;
  for (std::size_t k = 0; k < count; ++k) {
    const DistFn shift = coin(rng, 0.2) ? heaviside(0) : random_dist_fn(rng, opt);
    parts.push_back(shift_map(s, delta_embed(s, anchors[k]), shift));
  }
  return pointwise_sup(parts);
}

LipMap random_raw_map(Rng& rng, const ProbSpace& s, const DistGenOptions& opt) {
  LipMap f;
  for (std::size_t k = 0; k < s.size(); ++k) f.values.push_back(random_dist_fn(rng, opt));
  return f;
}

std::vector<LipMap> unit_candidate_family(Rng& rng, const ProbGroup& g, std::size_t extra) {
  const ProbSpace& s = g.space();
  std::vector<LipMap> family;
  for (Point x = 0; x < g.size(); ++x) family.push_back(delta_embed(s, x));
  const std::size_t shifts = (extra + 1) / 2;
  DistGenOptions opt;
  opt.max_jumps = 3;
  opt.max_den = 8;
  for (std::size_t k = 0; k < shifts; ++k) {
    const Point x = static_cast<Point>(uniform(rng, 0, static_cast<long>(g.size()) - 1));
    DistFn shift;
    do {
      shift = random_dist_fn(rng, opt);
    } while (shift.is_identity());
    family.push_back(shift_map(s, delta_embed(s, x), shift));
  }
  const std::size_t pool = family.size();
  for (std::size_t k = shifts; k < extra; ++k) {
    const auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(pool) - 1));
    auto j = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(pool) - 2));
    if (j >= i) ++j;
    const LipMap pair[2] = {family[i], family[j]};
    family.push_back(pointwise_sup(pair));
  }
  return family;
}

}  // namespace pmskit
