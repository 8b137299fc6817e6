#pragma once

// Slow reference implementations used only by the tests. None of them share
// code with the library algorithms they check.

#include <array>
#include <cstddef>
#include <vector>

#include "skorokhod/cadlag.hpp"
#include "skorokhod/oscillation.hpp"

namespace oracle {

using skorokhod::CadlagFunction;
using skorokhod::Point;

/// Oscillation of a step function by enumerating piece triples and deciding
/// feasibility of the triple-set constraints exactly.
double oscillation(skorokhod::Topology topology, double delta, const CadlagFunction& f,
                   skorokhod::T2Convention conv = skorokhod::T2Convention::Strict);

/// d_J1 of two scalar step functions by branch and bound over time changes
/// whose knots lie on the grid i / resolution.
double j1_grid(const CadlagFunction& f, const CadlagFunction& g, int resolution);

/// Hausdorff distance (box norm) between dense samples of the graphs.
/// `spacing` bounds the gap between consecutive samples.
double hausdorff_sampled(const CadlagFunction& f, const CadlagFunction& g, bool completed, double spacing);

/// Discrete Frechet distance (box norm) between the completed graphs resampled
/// with at most `spacing` between consecutive points.
double frechet_resampled(const CadlagFunction& f, const CadlagFunction& g, double spacing);

/// Number of oscillations of a scalar step function over [0,1], by trying
/// every subsequence of pieces.
int oscillation_count_exhaustive(const CadlagFunction& f, double a, double b);

/// P(|S_k| > r) for a simple +-1 random walk S, exactly.
double srw_tail(int k, double r);

/// P(max_{j <= k} |S_j| > r) for a simple +-1 random walk, exactly.
double srw_max_tail(int k, double r);

/// P(N = j) for N Poisson with mean `mean`.
double poisson_pmf(double mean, int j);

}  // namespace oracle
