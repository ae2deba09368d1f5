#pragma once

#include <optional>
#include <span>

#include "pmskit/dist_fn.hpp"

namespace pmskit {

// Bisection stopping width, a rational in (0, 1].
class WeakTolerance {
 public:
  explicit WeakTolerance(Rational eps);
  const Rational& eps() const { return eps_; }

 private:
  Rational eps_;
};

// True when G(t) <= F(t+h) + h and F(t) <= G(t+h) + h for every t in (0, 1/h).
// Requires 0 < h. The condition is monotone in h.
bool sibley_h_close(const DistFn& f, const DistFn& g, const Rational& h);

// Bracket [lower, upper] enclosing the modified Levy (Sibley) distance
//   d_S(F, G) = inf{ h in (0,1] : sibley_h_close(F, G, h) },
// with upper - lower <= tol. `lower` never satisfies the condition unless it
// is 0, `upper` always does. Equal inputs give {0, 0}.
struct SibleyBracket {
  Rational lower;
  Rational upper;
};
SibleyBracket sibley_bracket(const DistFn& f, const DistFn& g, const WeakTolerance& tol);

// Upper end of the bracket; exactly 0 when F == G.
Rational sibley_distance(const DistFn& f, const DistFn& g, const WeakTolerance& tol);

// Last element of `seq` when every pair among the last ceil(n/2) entries is
// within tol in the Sibley distance, otherwise nullopt. Throws on empty input.
std::optional<DistFn> weak_limit(std::span<const DistFn> seq, const WeakTolerance& tol);

}  // namespace pmskit
