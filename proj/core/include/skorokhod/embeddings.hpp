#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "skorokhod/cadlag.hpp"
#include "skorokhod/oscillation.hpp"
#include "skorokhod/random.hpp"

namespace skorokhod {

/// Terms y_0, y_1, ... of a sequence, read at resolution n. Only y_0..y_{n-1}
/// enter an embedding; extra terms are kept for the Markov embedding.
struct SequenceData {
    int n = 1;
    std::vector<Point> values;

    static SequenceData scalar(int n, const std::vector<double>& values);
    std::size_t dimension() const { return values.empty() ? 0 : values.front().size(); }
    void validate() const;
};

/// One sub-interval of a J2 interval: from fraction `offset` of the interval
/// on, the embedding takes y_{k+1} if `right` and y_k otherwise.
struct J2Step {
    double offset = 0.0;
    bool right = false;
};

/// One sub-interval of an M2 interval: from fraction `offset` on, the value
/// moves linearly along the segment from weight `w0` to weight `w1`, where
/// weight w stands for (1 - w) y_k + w y_{k+1}.
struct M2Piece {
    double offset = 0.0;
    double w0 = 0.0;
    double w1 = 0.0;
};

enum class M1Interpolation {
    Linear,   ///< y_k + n (t - k/n)(y_{k+1} - y_k)
    Literal,  ///< y_k + (t - k/n)(y_{k+1} - y_k), jumping at grid points
};

/// How embeddings fill the interior of each interval [k/n, (k+1)/n).
/// The first step of every interval must start at offset 0 with value y_k.
struct ChooserPolicy {
    std::vector<J2Step> j2 = {{0.0, false}, {0.5, true}};
    std::vector<M2Piece> m2 = {{0.0, 0.0, 1.0}, {0.5, 1.0, 1.0}};
    /// Per-interval replacements, keyed by k.
    std::map<int, std::vector<J2Step>> j2_overrides;
    std::map<int, std::vector<M2Piece>> m2_overrides;
    M1Interpolation m1 = M1Interpolation::Linear;

    /// Midpoint switch for J2, linear-then-hold for M2.
    static ChooserPolicy defaults() { return {}; }
    /// M2 path that runs to y_{k+1} and back to y_k inside each interval.
    static ChooserPolicy excursion();

    void validate() const;
};

/// x^{n,T} for the first n terms of `seq`. On the last interval the
/// embedding holds y_{n-1}, which is also the terminal value.
CadlagFunction embed(const SequenceData& seq, Topology topology, const ChooserPolicy& policy = {});

/// The sequences of the three counterexample families, materialized up to
/// index n - 1. Requires n >= 4.
SequenceData counterexample_sequence(int family, int n);

/// The common limit 1_{[1/2,1]} of the counterexample families.
CadlagFunction counterexample_limit();

/// Jump times of a unit-rate counting process on [0, horizon].
class PoissonPath {
public:
    explicit PoissonPath(std::vector<double> jumps, double horizon);
    static PoissonPath sample(double horizon, Rng& rng);

    const std::vector<double>& jumps() const { return jumps_; }
    double horizon() const { return horizon_; }
    /// N_s, the number of jumps in [0, s].
    std::size_t count(double s) const;
    /// N_{s-}, the number of jumps in [0, s).
    std::size_t count_before(double s) const;

private:
    std::vector<double> jumps_;
    double horizon_;
};

/// Z_t = Y_{N_{nt}} for t < 1, Z_1 = Z_{1-}. The path must hold at least
/// N_{n-} + 1 states.
CadlagFunction embed_markov(const std::vector<Point>& path, const PoissonPath& clock, int n);

/// sup over s in [0,1) of |s - N_{ns}/n|.
double clock_discrepancy(const PoissonPath& clock, int n);

}  // namespace skorokhod
