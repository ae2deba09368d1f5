#pragma once

#include <string>
#include <string_view>

#include "pmskit/rational.hpp"

namespace pmskit {

// Continuous t-norms. Left-continuity is what makes the induced
// sup-convolution a triangle function, so discontinuous t-norms (drastic,
// nilpotent minimum) are not offered.
enum class TNorm { Minimum, Product, Lukasiewicz };

// min(x,y), x*y, max(x+y-1, 0). Inputs must lie in [0,1].
Rational tnorm_apply(TNorm t, const Rational& x, const Rational& y);
// Dual t-conorm 1 - T(1-x, 1-y).
Rational tconorm_apply(TNorm t, const Rational& x, const Rational& y);

namespace detail {
// Unchecked variants for kernel inner loops.
Rational tnorm(TNorm t, const Rational& x, const Rational& y);
Rational tconorm(TNorm t, const Rational& x, const Rational& y);
}  // namespace detail

// Triangle function on Delta+ induced by a t-norm: either the
// sup-convolution star_T or the inf-convolution star_{T*} of the dual
// t-conorm. Only the former is sup-continuous.
struct TriangleFn {
  enum class Kind { SupConv, InfConvDual };

  Kind kind = Kind::SupConv;
  TNorm tnorm = TNorm::Minimum;

  static TriangleFn sup(TNorm t) { return {Kind::SupConv, t}; }
  static TriangleFn inf_dual(TNorm t) { return {Kind::InfConvDual, t}; }

  bool sup_continuous() const { return kind == Kind::SupConv; }

  friend bool operator==(const TriangleFn&, const TriangleFn&) = default;
};

// "min" | "product" | "lukasiewicz"
TNorm tnorm_from_tag(std::string_view tag);
std::string_view tag_of(TNorm t);

// "sup:<tnorm>" | "infdual:<tnorm>"
TriangleFn triangle_from_tag(std::string_view tag);
std::string tag_of(const TriangleFn& tf);

}  // namespace pmskit
