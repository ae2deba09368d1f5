#pragma once

#include <span>
#include <vector>

#include "pmskit/rational.hpp"

namespace pmskit {

// One step of a distribution function: the level reached just after `time`.
struct Jump {
  Rational time;
  Rational level;

  friend bool operator==(const Jump&, const Jump&) = default;
};

// An element of Delta+ restricted to left-continuous step functions with
// finitely many rational jumps.
//
//   F(t) = 0          for t <= t_1 (and for every finite t when there are no jumps)
//   F(t) = v_i        for t_i < t <= t_{i+1}
//   F(t) = v_k        for t > t_k
//   F(+inf) = 1       implicitly
//
// Jump times are strictly increasing and nonnegative; levels are strictly
// increasing in (0, 1]. Every constructor canonicalizes, so two DistFn values
// are equal exactly when their jump lists are equal. When the last level is
// below 1 the distribution is defective.
class DistFn {
 public:
  // H_inf: identically 0 on the reals.
  DistFn() = default;

  // Accepts times strictly increasing and >= 0, levels nondecreasing in
  // [0, 1]. Zero levels and repeated levels are dropped. Throws DomainError.
  explicit DistFn(std::vector<Jump> jumps);

  // Builds from (time, level) pairs sorted by nondecreasing time where the
  // level is the value just after that time and may repeat. Used by kernels
  // that produce running maxima; duplicate times keep the last level.
  static DistFn from_sorted_steps(std::vector<Jump> steps);

  std::span<const Jump> jumps() const { return jumps_; }
  bool empty() const { return jumps_.empty(); }
  std::size_t size() const { return jumps_.size(); }

  // Value at t, left limit at jump points.
  Rational operator()(const Rational& t) const;
  // Right limit F(t+).
  Rational level_after(const Rational& t) const;
  // Largest attained finite-time level (0 for H_inf).
  Rational top_level() const;

  bool is_identity() const;  // == H_0
  bool is_defective() const { return top_level() < 1; }

  friend bool operator==(const DistFn&, const DistFn&) = default;

 private:
  std::vector<Jump> jumps_;
};

// H_a for finite a >= 0.
DistFn heaviside(const Rational& a);
// H_inf.
DistFn heaviside_infinity();

Rational eval(const DistFn& f, const Rational& t);

// F(t) <= G(t) for every t.
bool leq(const DistFn& f, const DistFn& g);

// Pointwise supremum of a nonempty family.
DistFn pointwise_sup(std::span<const DistFn> family);
DistFn pointwise_sup(const DistFn& f, const DistFn& g);

// t |-> F(t / k); k = 0 yields H_0.
DistFn scale_time(const DistFn& f, const Rational& k);

}  // namespace pmskit
