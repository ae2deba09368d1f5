#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace pmskit {

// Exact rational scalar. mpq_class keeps values in lowest terms with a
// positive denominator after every arithmetic operation.
using Rational = mpq_class;

// Raised for inputs outside an operation's domain (negative times, levels
// outside [0,1], unknown labels, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Accepts "p", "p/q", "-p/q". Whitespace is not allowed. Throws DomainError.
Rational parse_rational(std::string_view text);

// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& value);

inline bool in_unit_interval(const Rational& x) { return sgn(x) >= 0 && x <= 1; }

}  // namespace pmskit
