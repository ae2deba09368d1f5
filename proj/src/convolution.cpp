#include "pmskit/convolution.hpp"

#include <algorithm>
#include <optional>
#include <queue>

namespace pmskit {

DistFn sup_conv_naive(TNorm t, const DistFn& f, const DistFn& l) {
  const auto a = f.jumps();
  const auto b = l.jumps();
  std::vector<Jump> pairs;
  pairs.reserve(a.size() * b.size());
  for (const Jump& x : a) {
    for (const Jump& y : b) pairs.push_back(Jump{x.time + y.time, detail::tnorm(t, x.level, y.level)});
  }
  std::sort(pairs.begin(), pairs.end(), [](const Jump& p, const Jump& q) { return p.time < q.time; });
  Rational running = 0;
  for (Jump& p : pairs) {
    if (p.level > running) running = p.level;
    p.level = running;
  }
  return DistFn::from_sorted_steps(std::move(pairs));
}

DistFn sup_conv_frontier(TNorm t, const DistFn& f, const DistFn& l) {
  const auto a = f.jumps();
  const auto b = l.jumps();
  if (a.empty() || b.empty()) return DistFn();

  // Each row i walks j forward; T(v_i, w_j) and t_i + s_j both grow with j,
  // so within a row only the first j beating the running maximum matters.
  struct Head {
    Rational sum;
    std::size_t i;
    std::size_t j;
  };
  auto later = [](const Head& p, const Head& q) { return p.sum > q.sum; };
  std::priority_queue<Head, std::vector<Head>, decltype(later)> heads(later);

  Rational best = 0;
  const Rational ceiling = detail::tnorm(t, a.back().level, b.back().level);
  const std::size_t m = b.size();

  auto first_above = [&](std::size_t i, std::size_t from) {
    if (from >= m) return m;
    if (detail::tnorm(t, a[i].level, b[from].level) > best) return from;
    std::size_t lo = from + 1, hi = m;
    while (lo < hi) {
      const std::size_t mid = lo + (hi - lo) / 2;
      if (detail::tnorm(t, a[i].level, b[mid].level) > best) {
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
    return lo;
  };

  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::size_t j = first_above(i, 0);
    if (j < m) heads.push(Head{a[i].time + b[j].time, i, j});
  }

  std::vector<Jump> out;
  while (!heads.empty() && best < ceiling) {
    Head h = heads.top();
    heads.pop();
    Rational value = detail::tnorm(t, a[h.i].level, b[h.j].level);
    if (value > best) {
      best = std::move(value);
      if (!out.empty() && out.back().time == h.sum) {
        out.back().level = best;
      } else {
        out.push_back(Jump{h.sum, best});
      }
    }
    const std::size_t j = first_above(h.i, h.j + 1);
    if (j < m) heads.push(Head{a[h.i].time + b[j].time, h.i, j});
  }
  return DistFn::from_sorted_steps(std::move(out));
}

DistFn sup_conv(TNorm t, const DistFn& f, const DistFn& l, ConvKernel kernel) {
  return kernel == ConvKernel::Naive ? sup_conv_naive(t, f, l) : sup_conv_frontier(t, f, l);
}

DistFn sup_conv_grid_oracle(TNorm t, const DistFn& f, const DistFn& l) {
  std::vector<Rational> sums;
  for (const Jump& x : f.jumps()) {
    for (const Jump& y : l.jumps()) sums.push_back(x.time + y.time);
  }
  std::sort(sums.begin(), sums.end());
  sums.erase(std::unique(sums.begin(), sums.end()), sums.end());

  Rational eps = 1;
  for (std::size_t k = 0; k + 1 < sums.size(); ++k) {
    Rational gap = sums[k + 1] - sums[k];
    if (k == 0 || gap < eps) eps = gap;
  }
  if (sums.size() > 1) eps /= 4;

  std::vector<Rational> s_samples{Rational(0)};
  for (const Jump& x : f.jumps()) s_samples.push_back(x.time + eps / 2);
  if (sums.empty()) sums.push_back(Rational(0));

  std::vector<Jump> steps;
  for (const Rational& p : sums) {
    const Rational t_sample = p + eps;
    Rational value = 0;
    for (const Rational& s : s_samples) {
      Rational v = tnorm_apply(t, eval(f, s), eval(l, t_sample - s));
      if (v > value) value = v;
    }
    steps.push_back(Jump{p, value});
  }
  return DistFn::from_sorted_steps(std::move(steps));
}

namespace {

// Half-open stretch (lo, hi] on which a step function is constant; nullopt
// stands for -inf / +inf.
struct Piece {
  std::optional<Rational> lo;
  std::optional<Rational> hi;
  Rational level;
};

std::vector<Piece> pieces_of(const DistFn& f) {
  std::vector<Piece> out;
  const auto j = f.jumps();
  out.push_back(Piece{std::nullopt, j.empty() ? std::nullopt : std::optional<Rational>(j[0].time), Rational(0)});
  for (std::size_t k = 0; k < j.size(); ++k) {
    std::optional<Rational> hi;
    if (k + 1 < j.size()) hi = j[k + 1].time;
    out.push_back(Piece{j[k].time, hi, j[k].level});
  }
  return out;
}

std::optional<Rational> add(const std::optional<Rational>& x, const std::optional<Rational>& y) {
  if (!x || !y) return std::nullopt;
  return *x + *y;
}

}  // namespace

DistFn inf_conv_dual(TNorm t, const DistFn& f, const DistFn& l) {
  const auto pf = pieces_of(f);
  const auto pl = pieces_of(l);
  std::vector<Piece> sums;
  std::vector<Rational> cuts;
  for (const Piece& x : pf) {
    for (const Piece& y : pl) {
      Piece p{add(x.lo, y.lo), add(x.hi, y.hi), detail::tconorm(t, x.level, y.level)};
      if (p.lo) cuts.push_back(*p.lo);
      if (p.hi) cuts.push_back(*p.hi);
      sums.push_back(std::move(p));
    }
  }
  if (cuts.empty()) return DistFn();
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  auto value_at = [&](const Rational& x) {
    Rational v = 1;
    for (const Piece& p : sums) {
      const bool inside = (!p.lo || *p.lo < x) && (!p.hi || x <= *p.hi);
      if (inside && p.level < v) v = p.level;
    }
    return v;
  };

  if (sgn(value_at(cuts.front())) != 0) throw std::logic_error("inf_conv_dual: nonzero mass at or below the first cut");
  std::vector<Jump> steps;
  for (std::size_t k = 0; k < cuts.size(); ++k) {
    const Rational probe = k + 1 < cuts.size() ? cuts[k + 1] : cuts[k] + 1;
    Rational v = value_at(probe);
    if (!steps.empty() && v < steps.back().level) throw std::logic_error("inf_conv_dual: decreasing result");
    if (sgn(cuts[k]) < 0 && sgn(v) != 0) throw std::logic_error("inf_conv_dual: mass on negative times");
    steps.push_back(Jump{cuts[k], std::move(v)});
  }
  return DistFn::from_sorted_steps(std::move(steps));
}

DistFn apply(const TriangleFn& tf, const DistFn& f, const DistFn& l) {
  return tf.kind == TriangleFn::Kind::SupConv ? sup_conv(tf.tnorm, f, l) : inf_conv_dual(tf.tnorm, f, l);
}

bool is_invertible_in_delta(const TriangleFn&, const DistFn& f) { return f.is_identity(); }

}  // namespace pmskit
