#pragma once

#include "skorokhod/cadlag.hpp"
#include "skorokhod/random.hpp"

namespace skorokhod::gen {

/// Random piecewise-constant function with at most `max_jumps` breakpoints
/// in (0,1). About half of the draws put breakpoints on a 1/64 grid and
/// values on a 1/8 grid, so ties and exactly aligned windows show up.
CadlagFunction step_function(Rng& rng, std::size_t dimension, int max_jumps);

/// Random walk in R^d with at most `max_jumps` steps at random times.
CadlagFunction random_walk(Rng& rng, std::size_t dimension, int max_jumps);

/// A full jump at some t0 with a second, smaller jump placed within about
/// delta/2 of it (before or after, moving on, overshooting or returning).
CadlagFunction near_jump_pair(Rng& rng, std::size_t dimension, double delta);

/// Random function mixing constant and linear pieces.
CadlagFunction piecewise_linear(Rng& rng, std::size_t dimension, int max_pieces);

/// Uniform draw from [lo, hi).
inline double uniform(Rng& rng, double lo, double hi) { return lo + (hi - lo) * rng.uniform(); }

/// Uniform integer in [lo, hi].
int uniform_int(Rng& rng, int lo, int hi);

}  // namespace skorokhod::gen
