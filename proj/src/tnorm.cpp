#include "pmskit/tnorm.hpp"

namespace pmskit {

namespace detail {

Rational tnorm(TNorm t, const Rational& x, const Rational& y) {
  switch (t) {
    case TNorm::Minimum:
      return x < y ? x : y;
    case TNorm::Product:
      return x * y;
    case TNorm::Lukasiewicz: {
      Rational s = x + y - 1;
      return sgn(s) > 0 ? s : Rational(0);
    }
  }
  throw std::logic_error("unhandled t-norm");
}

Rational tconorm(TNorm t, const Rational& x, const Rational& y) {
  return 1 - tnorm(t, 1 - x, 1 - y);
}

}  // namespace detail

namespace {

void check_levels(const Rational& x, const Rational& y) {
  if (!in_unit_interval(x) || !in_unit_interval(y)) {
    throw DomainError("t-norm argument outside [0,1]: (" + to_string(x) + ", " + to_string(y) + ")");
  }
}

}  // namespace

Rational tnorm_apply(TNorm t, const Rational& x, const Rational& y) {
  check_levels(x, y);
  return detail::tnorm(t, x, y);
}

Rational tconorm_apply(TNorm t, const Rational& x, const Rational& y) {
  check_levels(x, y);
  return detail::tconorm(t, x, y);
}

TNorm tnorm_from_tag(std::string_view tag) {
  if (tag == "min") return TNorm::Minimum;
  if (tag == "product") return TNorm::Product;
  if (tag == "lukasiewicz") return TNorm::Lukasiewicz;
  throw DomainError("unknown t-norm tag '" + std::string(tag) + "'");
}

std::string_view tag_of(TNorm t) {
  switch (t) {
    case TNorm::Minimum:
      return "min";
    case TNorm::Product:
      return "product";
    case TNorm::Lukasiewicz:
      return "lukasiewicz";
  }
  return "?";
}

TriangleFn triangle_from_tag(std::string_view tag) {
  const auto colon = tag.find(':');
  if (colon == std::string_view::npos) {
    throw DomainError("triangle function tag '" + std::string(tag) + "' must be sup:<tnorm> or infdual:<tnorm>");
  }
  const std::string_view kind = tag.substr(0, colon);
  const TNorm t = tnorm_from_tag(tag.substr(colon + 1));
  if (kind == "sup") return TriangleFn::sup(t);
  if (kind == "infdual") return TriangleFn::inf_dual(t);
  throw DomainError("unknown triangle function kind '" + std::string(kind) + "'");
}

std::string tag_of(const TriangleFn& tf) {
  return std::string(tf.kind == TriangleFn::Kind::SupConv ? "sup:" : "infdual:") + std::string(tag_of(tf.tnorm));
}

}  // namespace pmskit
