#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "pmskit/lipschitz.hpp"
#include "pmskit/sibley.hpp"

namespace pmskit {

// (f ⊙ h)(x) = sup_{y} f(y) * h(y^-1 x), the sup-convolution over the group.
LipMap sup_conv_maps(const ProbGroup& g, const LipMap& f, const LipMap& h);

// DD(f, h) = sup_x f(x) * h(x).
DistFn big_d(const ProbSpace& s, const LipMap& f, const LipMap& h);

// Pi(G) for a finite carrier: the delta maps, together with the separation
// certificate min_{p != q} d_S(D(p,q), H_0) > 0 that forces every Cauchy
// sequence to be eventually constant.
struct PiFinite {
  std::vector<LipMap> members;  // delta_x in carrier order
  Rational separation_lower;    // certified lower bound on the separation
  Rational separation_upper;
  // Index x with f == delta_x, if any.
  std::optional<Point> find(const LipMap& f) const;
};
PiFinite pi_finite(const ProbSpace& s, const WeakTolerance& tol = WeakTolerance(Rational(1, 1 << 20)));
inline PiFinite pi_finite(const ProbGroup& g) { return pi_finite(g.space()); }

// DD on Pi(G) x Pi(G), H_0 on the diagonal, H_inf elsewhere.
DistFn bar_d(const ProbSpace& s, const PiFinite& pi, const LipMap& f, const LipMap& h);
DistFn bar_d(const ProbSpace& s, const LipMap& f, const LipMap& h);

// For a finite (hence complete) group with a sup-convolution triangle
// function the units of (Lip, ⊙) are exactly the delta maps: returns
// delta_{x^-1} when f = delta_x, otherwise nullopt.
std::optional<LipMap> is_unit(const ProbGroup& g, const LipMap& f);

// First candidate c with f ⊙ c = c ⊙ f = delta_e.
std::optional<LipMap> inverse_bruteforce_oracle(const ProbGroup& g, const LipMap& f,
                                                const std::vector<LipMap>& candidates);

// Point bijection between two carriers.
struct IsoWitness {
  std::vector<Point> forward;
  std::vector<Point> backward;

  static IsoWitness from_forward(std::vector<Point> forward);  // throws unless a bijection
  friend bool operator==(const IsoWitness&, const IsoWitness&) = default;
};

// Bijection, homomorphism and D'(I x, I y) = D(x, y) for all pairs.
Report verify_isometric_iso(const ProbGroup& a, const ProbGroup& b, const IsoWitness& iso);

// A map between Lip monoids, known only through evaluation.
using MonoidIsoOracle = std::function<LipMap(const LipMap&)>;

// Phi(f) = f ∘ I^-1. Throws AxiomError when iso fails verification.
MonoidIsoOracle transport_iso(const ProbGroup& a, const ProbGroup& b, const IsoWitness& iso);

// Raised when a monoid map does not send delta maps to delta maps.
class StructuralError : public DomainError {
 public:
  using DomainError::DomainError;
};

// I = delta^-1 ∘ Phi|_{delta(G)} ∘ delta. Throws StructuralError when some
// Phi(delta_a) is not of delta form or the induced map is not an isometric
// isomorphism.
IsoWitness recover_iso(const ProbGroup& a, const ProbGroup& b, const MonoidIsoOracle& phi);

}  // namespace pmskit
