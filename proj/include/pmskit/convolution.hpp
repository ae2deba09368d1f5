#pragma once

#include "pmskit/dist_fn.hpp"
#include "pmskit/tnorm.hpp"

namespace pmskit {

enum class ConvKernel { Naive, Frontier };

// (F *_T L)(t) = sup_{s+u=t} T(F(s), L(u)).
//
// On step functions this is the maximum of T(v_i, w_j) over jump pairs with
// t_i + s_j < t, so the result jumps only at pairwise breakpoint sums. The
// naive kernel enumerates every pair; the frontier kernel visits pairs in
// order of breakpoint sum and skips pairs that cannot raise the running
// maximum. Both return the same canonical value.
DistFn sup_conv(TNorm t, const DistFn& f, const DistFn& l, ConvKernel kernel = ConvKernel::Frontier);
DistFn sup_conv_naive(TNorm t, const DistFn& f, const DistFn& l);
DistFn sup_conv_frontier(TNorm t, const DistFn& f, const DistFn& l);

// Independent reconstruction of sup_conv from point samples: s runs over the
// breakpoints of F nudged right by eps/2 and t over every pairwise
// breakpoint sum nudged right by eps, where eps is a quarter of the smallest
// gap between distinct pairwise sums.
DistFn sup_conv_grid_oracle(TNorm t, const DistFn& f, const DistFn& l);

// (F *_{T*} L)(t) = inf_{s+u=t} T*(F(s), L(u)), computed exactly as the
// minimum of T*(level_i, level_j) over pieces whose Minkowski sum
// (a_i + b_j, a_{i+1} + b_{j+1}] contains t. Pieces include the zero-level
// stretch left of the first jump.
DistFn inf_conv_dual(TNorm t, const DistFn& f, const DistFn& l);

// Dispatch on the triangle function.
DistFn apply(const TriangleFn& tf, const DistFn& f, const DistFn& l);

// H_0 is the only invertible element of (Delta+, star) for both families.
bool is_invertible_in_delta(const TriangleFn& tf, const DistFn& f);

}  // namespace pmskit
