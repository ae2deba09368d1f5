#pragma once

#include <cstdint>
#include <random>

#include "pmskit/groups.hpp"
#include "pmskit/lipschitz.hpp"

namespace pmskit {

using Rng = std::mt19937_64;

// Seed from PMSKIT_SEED when set, else `fallback`.
std::uint64_t seed_from_env(std::uint64_t fallback);

struct DistGenOptions {
  std::size_t max_jumps = 6;
  long max_den = 64;           // denominators of levels and time steps
  double p_empty = 0.05;       // chance of H_inf
  double p_defective = 0.3;    // chance the top level stays below 1
  double p_atom_at_zero = 0.1; // chance the first jump sits at t = 0
};

Rational random_rational(Rng& rng, long max_den, long max_num);
DistFn random_dist_fn(Rng& rng, const DistGenOptions& opt = {});
// Exactly `jumps` jumps, levels with denominator `level_den`.
DistFn random_dist_fn_exact(Rng& rng, std::size_t jumps, long level_den, long time_den);

// Classical metric: shortest-path closure of random positive edge weights.
ClassicalMetric random_classical_metric(Rng& rng, std::size_t n, long max_den = 8);

// Probabilistic metric obtained by closing a random table under
// D(p,r) <- sup(D(p,r), D(p,q) * D(q,r)); always passes validate_space.
ProbSpace random_valid_space(Rng& rng, std::size_t n, const TriangleFn& tf, const DistGenOptions& opt = {});

// Pointwise sup of shifts <delta_a, F_a> over a random nonempty set of a;
// 1-Lipschitz by construction.
LipMap random_lip_map(Rng& rng, const ProbSpace& s, const DistGenOptions& opt = {});
// Unconstrained random values, usually not 1-Lipschitz.
LipMap random_raw_map(Rng& rng, const ProbSpace& s, const DistGenOptions& opt = {});

// Unit-search family: every delta_x, shifts <delta_x, F> for sampled F, and
// pointwise sups of pairs of those; `extra` caps the non-delta part.
std::vector<LipMap> unit_candidate_family(Rng& rng, const ProbGroup& g, std::size_t extra);

}  // namespace pmskit
