#include "pmskit/sibley.hpp"

#include <algorithm>

namespace pmskit {

WeakTolerance::WeakTolerance(Rational eps) : eps_(std::move(eps)) {
  if (sgn(eps_) <= 0 || eps_ > 1) throw DomainError("tolerance " + to_string(eps_) + " outside (0,1]");
}

bool sibley_h_close(const DistFn& f, const DistFn& g, const Rational& h) {
  if (sgn(h) <= 0) throw DomainError("sibley_h_close: h must be positive");
  const Rational horizon = 1 / h;

  // All four step functions G(t), F(t+h), F(t), G(t+h) are constant on the
  // open cells cut out by these points.
  std::vector<Rational> cuts{Rational(0), horizon};
  auto add = [&](const Rational& p) {
    if (sgn(p) > 0 && p < horizon) cuts.push_back(p);
  };
  for (const Jump& j : f.jumps()) {
    add(j.time);
    add(j.time - h);
  }
  for (const Jump& j : g.jumps()) {
    add(j.time);
    add(j.time - h);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    const Rational mid = (cuts[k] + cuts[k + 1]) / 2;
    const Rational shifted = mid + h;
    if (g(mid) > f(shifted) + h) return false;
    if (f(mid) > g(shifted) + h) return false;
  }
  return true;
}

SibleyBracket sibley_bracket(const DistFn& f, const DistFn& g, const WeakTolerance& tol) {
  if (f == g) return {Rational(0), Rational(0)};
  Rational lo = 0;
  Rational hi = 1;
  while (hi - lo > tol.eps()) {
    Rational mid = (lo + hi) / 2;
    if (sibley_h_close(f, g, mid)) {
      hi = std::move(mid);
    } else {
      lo = std::move(mid);
    }
  }
  return {lo, hi};
}

Rational sibley_distance(const DistFn& f, const DistFn& g, const WeakTolerance& tol) {
  return sibley_bracket(f, g, tol).upper;
}

std::optional<DistFn> weak_limit(std::span<const DistFn> seq, const WeakTolerance& tol) {
  if (seq.empty()) throw DomainError("weak_limit: empty sequence");
  const std::size_t tail = (seq.size() + 1) / 2;
  const auto window = seq.subspan(seq.size() - tail);
  for (std::size_t i = 0; i < window.size(); ++i) {
    for (std::size_t j = i + 1; j < window.size(); ++j) {
      if (sibley_distance(window[i], window[j], tol) > tol.eps()) return std::nullopt;
    }
  }
  return seq.back();
}

}  // namespace pmskit
