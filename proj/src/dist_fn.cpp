#include "pmskit/dist_fn.hpp"

#include <algorithm>

namespace pmskit {

namespace {

// Index of the first jump with time > t.
std::size_t upper_index(std::span<const Jump> jumps, const Rational& t) {
  auto it = std::upper_bound(jumps.begin(), jumps.end(), t,
                             [](const Rational& x, const Jump& j) { return x < j.time; });
  return static_cast<std::size_t>(it - jumps.begin());
}

// Index of the first jump with time >= t.
std::size_t lower_index(std::span<const Jump> jumps, const Rational& t) {
  auto it = std::lower_bound(jumps.begin(), jumps.end(), t,
                             [](const Jump& j, const Rational& x) { return j.time < x; });
  return static_cast<std::size_t>(it - jumps.begin());
}

}  // namespace

DistFn::DistFn(std::vector<Jump> jumps) {
  for (std::size_t i = 0; i < jumps.size(); ++i) {
    const Jump& j = jumps[i];
    if (sgn(j.time) < 0) throw DomainError("jump time " + to_string(j.time) + " is negative");
    if (!in_unit_interval(j.level)) throw DomainError("level " + to_string(j.level) + " outside [0,1]");
    if (i > 0) {
      if (j.time <= jumps[i - 1].time) throw DomainError("jump times must be strictly increasing");
      if (j.level < jumps[i - 1].level) throw DomainError("levels must be nondecreasing");
    }
  }
  *this = from_sorted_steps(std::move(jumps));
}

DistFn DistFn::from_sorted_steps(std::vector<Jump> steps) {
  DistFn out;
  out.jumps_.reserve(steps.size());
  Rational current = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    // Only the last entry of a run of equal times determines F(t+).
    if (i + 1 < steps.size() && steps[i + 1].time == steps[i].time) continue;
    if (steps[i].level > current) {
      current = steps[i].level;
      out.jumps_.push_back(std::move(steps[i]));
    }
  }
  return out;
}

Rational DistFn::operator()(const Rational& t) const {
  const std::size_t k = lower_index(jumps_, t);
  return k == 0 ? Rational(0) : jumps_[k - 1].level;
}

Rational DistFn::level_after(const Rational& t) const {
  const std::size_t k = upper_index(jumps_, t);
  return k == 0 ? Rational(0) : jumps_[k - 1].level;
}

Rational DistFn::top_level() const { return jumps_.empty() ? Rational(0) : jumps_.back().level; }

bool DistFn::is_identity() const {
  return jumps_.size() == 1 && sgn(jumps_[0].time) == 0 && jumps_[0].level == 1;
}

DistFn heaviside(const Rational& a) {
  if (sgn(a) < 0) throw DomainError("heaviside: negative location " + to_string(a));
  return DistFn({Jump{a, 1}});
}

DistFn heaviside_infinity() { return DistFn(); }

Rational eval(const DistFn& f, const Rational& t) { return f(t); }

bool leq(const DistFn& f, const DistFn& g) {
  // Both are constant between consecutive merged breakpoints, so comparing
  // right limits at every breakpoint decides the order.
  const auto a = f.jumps();
  const auto b = g.jumps();
  std::size_t i = 0, j = 0;
  Rational fa = 0, gb = 0;
  while (i < a.size() || j < b.size()) {
    const Rational point = (j == b.size() || (i < a.size() && a[i].time <= b[j].time)) ? a[i].time : b[j].time;
    while (i < a.size() && a[i].time == point) fa = a[i++].level;
    while (j < b.size() && b[j].time == point) gb = b[j++].level;
    if (fa > gb) return false;
  }
  return true;
}

DistFn pointwise_sup(const DistFn& f, const DistFn& g) {
  const auto a = f.jumps();
  const auto b = g.jumps();
  std::vector<Jump> steps;
  steps.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  Rational fa = 0, gb = 0;
  while (i < a.size() || j < b.size()) {
    const Rational point = (j == b.size() || (i < a.size() && a[i].time <= b[j].time)) ? a[i].time : b[j].time;
    while (i < a.size() && a[i].time == point) fa = a[i++].level;
    while (j < b.size() && b[j].time == point) gb = b[j++].level;
    steps.push_back(Jump{point, fa > gb ? fa : gb});
  }
  return DistFn::from_sorted_steps(std::move(steps));
}

DistFn pointwise_sup(std::span<const DistFn> family) {
  if (family.empty()) throw DomainError("pointwise_sup: empty family");
  DistFn acc = family.front();
  for (std::size_t k = 1; k < family.size(); ++k) acc = pointwise_sup(acc, family[k]);
  return acc;
}

DistFn scale_time(const DistFn& f, const Rational& k) {
  if (sgn(k) < 0) throw DomainError("scale factor " + to_string(k) + " is negative");
  if (sgn(k) == 0) return heaviside(0);
  std::vector<Jump> jumps(f.jumps().begin(), f.jumps().end());
  for (Jump& j : jumps) j.time *= k;
  return DistFn::from_sorted_steps(std::move(jumps));
}

}  // namespace pmskit
