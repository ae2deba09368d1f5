#include <doctest.h>

#include "pmskit/convolution.hpp"
#include "pmskit/sibley.hpp"
#include "support/helpers.hpp"

using namespace pmskit;
using testutil::dist;
using testutil::H;
using testutil::q;

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("6/8") == Rational(3, 4));
  CHECK(parse_rational("-1/2") == Rational(-1, 2));
  CHECK(to_string(q("6/8")) == "3/4");
  CHECK(to_string(q("4/2")) == "2");
  CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
  CHECK_THROWS_AS(parse_rational(""), DomainError);
  CHECK_THROWS_AS(parse_rational("1.5"), DomainError);
  CHECK_THROWS_AS(parse_rational(" 1"), DomainError);
  CHECK_THROWS_AS(parse_rational("1/"), DomainError);
}

TEST_CASE("heaviside") {
  CHECK(heaviside(0).jumps().size() == 1);
  CHECK(heaviside(0).jumps()[0] == Jump{0, 1});
  CHECK(heaviside_infinity().empty());
  CHECK(heaviside(2).jumps()[0] == Jump{2, 1});
  CHECK(heaviside(0).is_identity());
  CHECK_FALSE(heaviside(1).is_identity());
  CHECK_THROWS_AS(heaviside(-1), DomainError);
}

TEST_CASE("construction canonicalizes") {
  const DistFn f = dist({{"0", "0"}, {"1", "1/2"}, {"2", "1/2"}, {"3", "1"}});
  REQUIRE(f.size() == 2);
  CHECK(f.jumps()[0] == Jump{1, Rational(1, 2)});
  CHECK(f.jumps()[1] == Jump{3, 1});
  CHECK(dist({{"1", "0"}}) == heaviside_infinity());

  CHECK_THROWS_AS(dist({{"-1", "1"}}), DomainError);
  CHECK_THROWS_AS(dist({{"2", "1/2"}, {"1", "1"}}), DomainError);
  CHECK_THROWS_AS(dist({{"1", "1/2"}, {"1", "1"}}), DomainError);
  CHECK_THROWS_AS(dist({{"1", "1/2"}, {"2", "1/3"}}), DomainError);
  CHECK_THROWS_AS(dist({{"1", "3/2"}}), DomainError);

  const DistFn g = DistFn::from_sorted_steps({{1, Rational(1, 3)}, {1, Rational(1, 2)}, {2, Rational(1, 2)}, {3, 1}});
  CHECK(g == dist({{"1", "1/2"}, {"3", "1"}}));
}

TEST_CASE("eval follows the left-limit convention") {
  CHECK(eval(heaviside(0), 5) == 1);
  CHECK(eval(heaviside(2), 2) == 0);
  CHECK(eval(heaviside(2), q("201/100")) == 1);
  CHECK(eval(heaviside_infinity(), 1000000) == 0);
  const DistFn f = dist({{"1/2", "1/3"}, {"2", "1"}});
  CHECK(f(0) == 0);
  CHECK(f(q("1/2")) == 0);
  CHECK(f(1) == Rational(1, 3));
  CHECK(f(2) == Rational(1, 3));
  CHECK(f(3) == 1);
  CHECK(f.level_after(q("1/2")) == Rational(1, 3));
  CHECK(f.level_after(2) == 1);
  CHECK(f(-1) == 0);
  CHECK(f.top_level() == 1);
  CHECK_FALSE(f.is_defective());
  CHECK(dist({{"1", "1/2"}}).is_defective());
}

TEST_CASE("leq") {
  const DistFn f = dist({{"1", "1/2"}, {"3", "1"}});
  CHECK(leq(heaviside_infinity(), f));
  CHECK(leq(f, heaviside(0)));
  CHECK_FALSE(leq(H(1), H(2)));
  CHECK(leq(H(2), H(1)));
  CHECK(leq(f, f));
  // equal values left of every breakpoint, larger just after one
  CHECK(leq(dist({{"1", "1/2"}}), dist({{"1", "1"}})));
  CHECK_FALSE(leq(dist({{"1", "1"}}), dist({{"1", "1/2"}})));
  CHECK_FALSE(leq(dist({{"1", "1/2"}}), heaviside_infinity()));
}

TEST_CASE("pointwise_sup") {
  const DistFn f = dist({{"1", "1/2"}, {"3", "1"}});
  const DistFn single[] = {f};
  CHECK(pointwise_sup(single) == f);
  CHECK(pointwise_sup(H(1), H(2)) == H(1));
  CHECK(pointwise_sup(dist({{"1", "1/2"}}), H(2)) == dist({{"1", "1/2"}, {"2", "1"}}));
  CHECK(pointwise_sup(heaviside_infinity(), f) == f);
  CHECK_THROWS_AS(pointwise_sup(std::span<const DistFn>{}), DomainError);
}

TEST_CASE("scale_time") {
  const DistFn f = dist({{"1", "1/2"}, {"3", "1"}});
  CHECK(scale_time(f, 1) == f);
  CHECK(scale_time(f, 0) == heaviside(0));
  CHECK(scale_time(H(1), 2) == H(2));
  CHECK(scale_time(heaviside_infinity(), 3) == heaviside_infinity());
  CHECK_THROWS_AS(scale_time(f, -1), DomainError);
}

TEST_CASE("lattice laws on random distributions") {
  auto rng = testutil::rng(1);
  for (int k = 0; k < 300; ++k) {
    const DistFn a = random_dist_fn(rng);
    const DistFn b = random_dist_fn(rng);
    const DistFn c = random_dist_fn(rng);
    CHECK(leq(a, a));
    CHECK(leq(heaviside_infinity(), a));
    CHECK(leq(a, heaviside(0)));
    if (leq(a, b) && leq(b, a)) CHECK(a == b);
    if (leq(a, b) && leq(b, c)) CHECK(leq(a, c));

    const DistFn fam[] = {a, b, c};
    const DistFn s = pointwise_sup(fam);
    CHECK(leq(a, s));
    CHECK(leq(b, s));
    CHECK(leq(c, s));
    // least: every probe of s is attained by some member
    for (const Jump& j : s.jumps()) {
      const Rational v = s.level_after(j.time);
      CHECK((a.level_after(j.time) == v || b.level_after(j.time) == v || c.level_after(j.time) == v));
    }
    const DistFn ub = pointwise_sup(s, random_dist_fn(rng));
    CHECK(leq(s, ub));
    // leq agrees with pointwise comparison on the merged partition
    bool pointwise = true;
    std::vector<Rational> probes{0};
    for (const Jump& j : a.jumps()) probes.push_back(j.time);
    for (const Jump& j : b.jumps()) probes.push_back(j.time);
    for (const Rational& p : probes) {
      pointwise = pointwise && a(p) <= b(p) && a.level_after(p) <= b.level_after(p);
    }
    CHECK(leq(a, b) == pointwise);
  }
}

TEST_CASE("weak tolerance domain") {
  CHECK_NOTHROW(WeakTolerance(1));
  CHECK_THROWS_AS(WeakTolerance(0), DomainError);
  CHECK_THROWS_AS(WeakTolerance(q("3/2")), DomainError);
}

TEST_CASE("sibley distance examples") {
  const WeakTolerance tol(Rational(1, 1 << 20));
  const Rational eps = tol.eps();
  const DistFn f = dist({{"1/3", "1/5"}, {"2", "1"}});
  CHECK(sibley_distance(f, f, WeakTolerance(1)) == 0);
  CHECK(abs(sibley_distance(heaviside(0), heaviside_infinity(), tol) - 1) <= eps);
  CHECK(abs(sibley_distance(heaviside(0), H("1/2"), tol) - Rational(1, 2)) <= eps);
  CHECK(abs(sibley_distance(heaviside(0), H(1), tol) - 1) <= eps);

  SibleyBracket b = sibley_bracket(heaviside(0), H("1/2"), tol);
  CHECK(b.upper - b.lower <= eps);
  CHECK(b.lower <= Rational(1, 2));
  CHECK(Rational(1, 2) <= b.upper);
  CHECK(sibley_h_close(heaviside(0), H("1/2"), b.upper));
  CHECK_FALSE(sibley_h_close(heaviside(0), H("1/2"), b.lower));
}

TEST_CASE("sibley h-closeness by hand") {
  // H_0 vs H_a: F(t) <= H_a(t+h) + h needs t + h > a for every t in (0,1/h), i.e. h >= a.
  CHECK(sibley_h_close(heaviside(0), H("1/4"), q("1/4")));
  CHECK_FALSE(sibley_h_close(heaviside(0), H("1/4"), q("1/5")));
  // a level gap of 1/3 is absorbed by a vertical lift of 1/3
  CHECK(sibley_h_close(dist({{"0", "2/3"}, {"1", "1"}}), dist({{"0", "1"}}), q("1/2")));
  CHECK_FALSE(sibley_h_close(dist({{"0", "1/3"}}), H(0), q("1/2")));
}

TEST_CASE("sibley metric properties") {
  auto rng = testutil::rng(2);
  const WeakTolerance tol(Rational(1, 1 << 12));
  const Rational eps = tol.eps();
  for (int k = 0; k < 60; ++k) {
    const DistFn a = random_dist_fn(rng);
    const DistFn b = random_dist_fn(rng);
    const DistFn c = random_dist_fn(rng);
    const Rational ab = sibley_distance(a, b, tol);
    const Rational ba = sibley_distance(b, a, tol);
    const Rational bc = sibley_distance(b, c, tol);
    const Rational ac = sibley_distance(a, c, tol);
    CHECK(abs(ab - ba) <= 2 * eps);
    CHECK(sgn(ab) >= 0);
    CHECK(ab <= 1);
    CHECK(ac <= ab + bc + 3 * eps);
    if (a != b) CHECK(sgn(ab) > 0);
  }
}

TEST_CASE("vanishing sibley distance gives agreement at continuity points") {
  auto rng = testutil::rng(3);
  for (int k = 0; k < 30; ++k) {
    const DistFn a = random_dist_fn(rng);
    if (a.empty()) continue;
    std::vector<Rational> probes;
    Rational prev = 0;
    for (const Jump& j : a.jumps()) {
      probes.push_back((prev + j.time) / 2);
      prev = j.time;
    }
    probes.push_back(prev + 1);
    Rational gap = 1;
    for (std::size_t i = 0; i + 1 < a.size(); ++i) gap = std::min(gap, Rational(a.jumps()[i + 1].time - a.jumps()[i].time));

    Rational last = 2;
    for (int n = 1; n <= 12; ++n) {
      const Rational shift(1, 1 << n);
      std::vector<Jump> jumps(a.jumps().begin(), a.jumps().end());
      for (Jump& j : jumps) j.time += shift;
      const DistFn b(std::move(jumps));
      const Rational d = sibley_distance(a, b, WeakTolerance(Rational(1, 1 << 20)));
      CHECK(d <= last);
      CHECK(d <= shift + Rational(1, 1 << 20));
      last = d;
      // probes at least `shift` right of every breakpoint already agree
      for (const Rational& p : probes) {
        bool clear = true;
        for (const Jump& j : a.jumps()) clear = clear && !(j.time < p && p <= j.time + shift);
        if (clear) CHECK(a(p) == b(p));
      }
      if (shift * 4 < gap) {
        for (const Rational& p : probes) CHECK(a(p) == b(p));
      }
    }
  }
}

TEST_CASE("weak_limit") {
  const WeakTolerance quarter(q("1/4"));
  const DistFn f = dist({{"1", "1/2"}, {"2", "1"}});
  const DistFn same[] = {f, f, f};
  REQUIRE(weak_limit(same, quarter).has_value());
  CHECK(*weak_limit(same, quarter) == f);

  const DistFn halving[] = {H(1), H("1/2"), H("1/4"), H("1/8")};
  REQUIRE(weak_limit(halving, quarter).has_value());
  CHECK(*weak_limit(halving, quarter) == H("1/8"));

  const DistFn alternating[] = {H(0), H(1), H(0), H(1)};
  CHECK_FALSE(weak_limit(alternating, quarter).has_value());

  CHECK_THROWS_AS(weak_limit(std::span<const DistFn>{}, quarter), DomainError);
}

TEST_CASE("limit order is preserved for eventually constant sequences") {
  auto rng = testutil::rng(4);
  const WeakTolerance tol(Rational(1, 1 << 10));
  for (TNorm t : {TNorm::Minimum, TNorm::Product, TNorm::Lukasiewicz}) {
    for (int k = 0; k < 20; ++k) {
      const DistFn f = random_dist_fn(rng);
      const DistFn l = random_dist_fn(rng);
      const DistFn kk = pointwise_sup(sup_conv(t, f, l), random_dist_fn(rng));
      // transient prefix that violates nothing, then the constant tail
      std::vector<DistFn> fs{pointwise_sup(f, random_dist_fn(rng)), f, f, f, f};
      std::vector<DistFn> ls{l, l, l, l, l};
      std::vector<DistFn> ks{heaviside(0), kk, kk, kk, kk};
      for (std::size_t n = 0; n < fs.size(); ++n) REQUIRE(leq(sup_conv(t, fs[n], ls[n]), ks[n]));
      const auto fl = weak_limit(fs, tol);
      const auto ll = weak_limit(ls, tol);
      const auto kl = weak_limit(ks, tol);
      REQUIRE((fl && ll && kl));
      CHECK(leq(sup_conv(t, *fl, *ll), *kl));
    }
  }
}
