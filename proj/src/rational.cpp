#include "pmskit/rational.hpp"

#include <cctype>

namespace pmskit {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den))) {
    throw DomainError("invalid rational '" + std::string(text) + "'");
  }
  if (slash != std::string_view::npos && den.find_first_not_of('0') == std::string_view::npos) {
    throw DomainError("zero denominator in '" + std::string(text) + "'");
  }
  std::string normalized(text.front() == '+' ? text.substr(1) : text);
  Rational value(normalized, 10);
  value.canonicalize();
  return value;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

}  // namespace pmskit
