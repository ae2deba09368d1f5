#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include <doctest.h>

#include "pmskit/dist_fn.hpp"
#include "pmskit/random.hpp"

namespace testutil {

using pmskit::DistFn;
using pmskit::Rational;

inline Rational q(const char* text) { return pmskit::parse_rational(text); }

inline DistFn dist(std::initializer_list<std::pair<const char*, const char*>> jumps) {
  std::vector<pmskit::Jump> out;
  for (const auto& [t, v] : jumps) out.push_back({q(t), q(v)});
  return DistFn(std::move(out));
}

inline DistFn H(const char* a) { return pmskit::heaviside(q(a)); }
inline DistFn H(int a) { return pmskit::heaviside(Rational(a)); }

inline pmskit::Rng rng(std::uint64_t salt) { return pmskit::Rng(pmskit::seed_from_env(20240607) ^ salt); }

}  // namespace testutil

namespace doctest {
template <>
struct StringMaker<pmskit::DistFn> {
  static String convert(const pmskit::DistFn& f) {
    std::string s = "[";
    for (const auto& j : f.jumps()) {
      if (s.size() > 1) s += ",";
      s += "(" + pmskit::to_string(j.time) + "," + pmskit::to_string(j.level) + ")";
    }
    return (s + "]").c_str();
  }
};
template <>
struct StringMaker<pmskit::Rational> {
  static String convert(const pmskit::Rational& r) { return pmskit::to_string(r).c_str(); }
};
}  // namespace doctest
