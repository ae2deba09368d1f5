#include "pmskit/monoid.hpp"

#include <numeric>

#include "pmskit/convolution.hpp"

namespace pmskit {

namespace {

std::optional<Point> delta_index(const ProbSpace& s, const LipMap& f) {
  if (f.size() != s.size()) return std::nullopt;
  for (Point x = 0; x < s.size(); ++x) {
    bool match = true;
    for (Point y = 0; y < s.size() && match; ++y) match = f(y) == s.d(y, x);
    if (match) return x;
  }
  return std::nullopt;
}

}  // namespace

LipMap sup_conv_maps(const ProbGroup& g, const LipMap& f, const LipMap& h) {
  const ProbSpace& s = g.space();
  require_sup_continuous(s.tf(), "sup_conv_maps");
  if (f.size() != g.size() || h.size() != g.size()) throw DomainError("sup_conv_maps: maps over a different carrier");
  LipMap out;
  out.values.reserve(g.size());
  for (Point x = 0; x < g.size(); ++x) {
    DistFn acc;
    for (Point y = 0; y < g.size(); ++y) {
      const Point yinv = g.inverse(y);
      if (yinv == npos) throw DomainError("sup_conv_maps: group table has no inverse for " + s.label(y));
      acc = pointwise_sup(acc, s.star(f(y), h(g.op(yinv, x))));
    }
    out.values.push_back(std::move(acc));
  }
  return out;
}

DistFn big_d(const ProbSpace& s, const LipMap& f, const LipMap& h) {
  if (f.size() != s.size() || h.size() != s.size()) throw DomainError("big_d: maps over a different carrier");
  DistFn acc;
  for (Point x = 0; x < s.size(); ++x) acc = pointwise_sup(acc, s.star(f(x), h(x)));
  return acc;
}

std::optional<Point> PiFinite::find(const LipMap& f) const {
  for (Point x = 0; x < members.size(); ++x) {
    if (members[x] == f) return x;
  }
  return std::nullopt;
}

PiFinite pi_finite(const ProbSpace& s, const WeakTolerance& tol) {
  PiFinite out;
  for (Point x = 0; x < s.size(); ++x) out.members.push_back(delta_embed(s, x));
  out.separation_lower = 1;
  out.separation_upper = 1;
  const DistFn h0 = heaviside(0);
  for (Point p = 0; p < s.size(); ++p) {
    for (Point q = p + 1; q < s.size(); ++q) {
      if (s.d(p, q).is_identity()) {
        throw DomainError("pi_finite: D(" + s.label(p) + "," + s.label(q) + ") = H_0 for distinct points");
      }
      // Refine until the bracket clears zero; D(p,q) != H_0 guarantees it does.
      Rational eps = tol.eps();
      SibleyBracket b = sibley_bracket(s.d(p, q), h0, WeakTolerance(eps));
      while (sgn(b.lower) == 0) {
        eps /= 2;
        b = sibley_bracket(s.d(p, q), h0, WeakTolerance(eps));
      }
      if (b.lower < out.separation_lower) out.separation_lower = b.lower;
      if (b.upper < out.separation_upper) out.separation_upper = b.upper;
    }
  }
  return out;
}

DistFn bar_d(const ProbSpace& s, const PiFinite& pi, const LipMap& f, const LipMap& h) {
  if (f == h) return heaviside(0);
  if (pi.find(f) && pi.find(h)) return big_d(s, f, h);
  return heaviside_infinity();
}

DistFn bar_d(const ProbSpace& s, const LipMap& f, const LipMap& h) {
  if (f == h) return heaviside(0);
  if (delta_index(s, f) && delta_index(s, h)) return big_d(s, f, h);
  return heaviside_infinity();
}

std::optional<LipMap> is_unit(const ProbGroup& g, const LipMap& f) {
  require_sup_continuous(g.space().tf(), "is_unit");
  const auto x = delta_index(g.space(), f);
  if (!x) return std::nullopt;
  return delta_embed(g.space(), g.inverse(*x));
}

std::optional<LipMap> inverse_bruteforce_oracle(const ProbGroup& g, const LipMap& f,
                                                const std::vector<LipMap>& candidates) {
  const LipMap identity = delta_embed(g.space(), g.identity());
  for (const LipMap& c : candidates) {
    if (sup_conv_maps(g, f, c) == identity && sup_conv_maps(g, c, f) == identity) return c;
  }
  return std::nullopt;
}

IsoWitness IsoWitness::from_forward(std::vector<Point> forward) {
  IsoWitness iso;
  iso.backward.assign(forward.size(), npos);
  for (Point p = 0; p < forward.size(); ++p) {
    if (forward[p] >= forward.size() || iso.backward[forward[p]] != npos) {
      throw DomainError("iso witness is not a bijection");
    }
    iso.backward[forward[p]] = p;
  }
  iso.forward = std::move(forward);
  return iso;
}

Report verify_isometric_iso(const ProbGroup& a, const ProbGroup& b, const IsoWitness& iso) {
  Report report;
  const std::size_t n = a.size();
  const ProbSpace& sa = a.space();
  const ProbSpace& sb = b.space();
  if (b.size() != n || iso.forward.size() != n || iso.backward.size() != n) {
    report.add({"bijection.size", {}, {}, {}});
    return report;
  }
  if (sa.tf() != sb.tf()) report.add({"triangle_function", {tag_of(sa.tf()), tag_of(sb.tf())}, {}, {}});
  for (Point p = 0; p < n; ++p) {
    const Point fp = iso.forward[p];
    if (fp >= n || iso.backward[fp] != p) report.add({"bijection", {sa.label(p)}, {}, {}});
  }
  if (!report.passed()) return report;
  for (Point p = 0; p < n; ++p) {
    for (Point q = 0; q < n; ++q) {
      const Point fp = iso.forward[p];
      const Point fq = iso.forward[q];
      if (iso.forward[a.op(p, q)] != b.op(fp, fq)) report.add({"homomorphism", {sa.label(p), sa.label(q)}, {}, {}});
      if (sb.d(fp, fq) != sa.d(p, q)) report.add({"isometry", {sa.label(p), sa.label(q)}, sb.d(fp, fq), sa.d(p, q)});
    }
  }
  return report;
}

MonoidIsoOracle transport_iso(const ProbGroup& a, const ProbGroup& b, const IsoWitness& iso) {
  if (Report r = verify_isometric_iso(a, b, iso); !r.passed()) {
    throw AxiomError("iso witness is not an isometric isomorphism (" + r.violations.front().axiom + ")", r);
  }
  return [backward = iso.backward, n = a.size()](const LipMap& f) {
    if (f.size() != n) throw DomainError("transported map over a different carrier");
    LipMap out;
    out.values.reserve(n);
    for (Point y = 0; y < n; ++y) out.values.push_back(f(backward[y]));
    return out;
  };
}

IsoWitness recover_iso(const ProbGroup& a, const ProbGroup& b, const MonoidIsoOracle& phi) {
  if (!a.space().tf().sup_continuous() || !b.space().tf().sup_continuous()) {
    throw DomainError("recover_iso needs sup-convolution triangle functions");
  }
  if (a.size() != b.size()) throw StructuralError("carriers of different size cannot be isomorphic");
  std::vector<Point> forward;
  forward.reserve(a.size());
  for (Point x = 0; x < a.size(); ++x) {
    const auto image = delta_index(b.space(), phi(delta_embed(a.space(), x)));
    if (!image) throw StructuralError("phi(delta_" + a.space().label(x) + ") is not a delta map");
    forward.push_back(*image);
  }
  IsoWitness iso;
  try {
    iso = IsoWitness::from_forward(std::move(forward));
  } catch (const DomainError&) {
    throw StructuralError("phi identifies two delta maps");
  }
  if (Report r = verify_isometric_iso(a, b, iso); !r.passed()) {
    throw StructuralError("induced point map fails " + r.violations.front().axiom);
  }
  return iso;
}

}  // namespace pmskit
