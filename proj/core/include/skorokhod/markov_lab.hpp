#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "skorokhod/cadlag.hpp"
#include "skorokhod/embeddings.hpp"
#include "skorokhod/metrics.hpp"
#include "skorokhod/random.hpp"

namespace skorokhod {

/// Transition law of a time-homogeneous chain at resolution n. `step` must
/// depend only on the state and the random stream.
struct MarkovKernel {
    std::string name;
    std::size_t dimension = 1;
    std::function<Point(const Point&, Rng&)> step;
    /// States where the chain is known to misbehave; added to x grids.
    std::vector<Point> critical_points;
    /// Default starting state.
    Point start;
};

struct KernelInfo {
    std::string name;
    std::string description;
    /// Default for the optional parameter, as in "drift(2)".
    double default_parameter = 0.0;
};

/// Names and descriptions of the built-in kernels:
/// identity, drift(c), srw, lazy(p), fixed-jump, unit-jump.
const std::vector<KernelInfo>& builtin_kernels();

/// Builds a built-in kernel for resolution n. `spec` is a name with an
/// optional parameter in parentheses. Throws std::invalid_argument for
/// unknown names or bad parameters.
MarkovKernel make_kernel(const std::string& spec, int n);

/// Y_0 = start, Y_{k+1} = step(Y_k). Returns steps + 1 states.
std::vector<Point> simulate_chain(const MarkovKernel& kernel, const Point& start, int steps, std::uint64_t seed);
std::vector<Point> simulate_chain(const MarkovKernel& kernel, const Point& start, int steps, Rng& rng);

/// 99% two-sided normal quantile.
inline constexpr double kConfidenceZ = 2.5758293035489004;

/// Half-width of the 99% band for `count` successes out of `trials`: the
/// normal approximation, floored by the Wilson interval.
double confidence_half_width(std::size_t count, std::size_t trials);

struct ConditionEstimate {
    std::string condition;  ///< "iii-local-continuity", "ii-global-bound" or "extra-steps"
    std::string kernel;
    int n = 0;
    double epsilon = 0.0;
    double radius = 0.0;
    double h = 0.0;
    int m = 0;
    /// Row labels: x grid (local continuity) or R grid (global bound).
    std::vector<Point> grid;
    /// probabilities[i][k]: grid row i, column k (step count for local
    /// continuity; a single column otherwise).
    std::vector<std::vector<double>> probabilities;
    std::vector<std::vector<double>> half_widths;
    /// Supremum over the matrix and the half-width of the maximizing entry.
    double estimate = 0.0;
    double half_width = 0.0;
    int replicas = 0;
    std::uint64_t seed = 0;
};

/// Uniform grid of `points` per axis over [-R, R]^d plus the kernel's
/// critical points inside the ball of radius R.
std::vector<Point> default_x_grid(const MarkovKernel& kernel, double radius, int points);

/// sup over x in the grid and k <= floor(h n) of P(|Y_k - x| > eps | Y_0 = x).
ConditionEstimate estimate_local_continuity(const MarkovKernel& kernel, int n, double epsilon, double radius,
                                            double h, const std::vector<Point>& x_grid, int replicas,
                                            std::uint64_t seed);

/// P(max_{k <= n m} |Y_k| > R) for each R in the grid, from the kernel's start.
ConditionEstimate estimate_global_bound(const MarkovKernel& kernel, int n, int m, const std::vector<double>& radii,
                                        int replicas, std::uint64_t seed);

enum class ExtraStepsRange {
    /// k <= |n - 1 - N_{n-}|: covers every state one embedding shows and the
    /// other does not.
    Inclusive,
    /// k < |n - 1 - N_{n-}|, as the condition is usually written.
    Literal,
};

/// The extra-steps sup for one chain path and clock.
double extra_steps_sup(const std::vector<Point>& path, const PoissonPath& clock, int n,
                       ExtraStepsRange range = ExtraStepsRange::Inclusive);

/// P(extra-steps sup > eps), with a fresh clock and chain per replica.
ConditionEstimate estimate_extra_steps(const MarkovKernel& kernel, int n, double epsilon, int replicas,
                                       std::uint64_t seed, ExtraStepsRange range = ExtraStepsRange::Inclusive);

enum class ProbeMode {
    Reference,  ///< d(x^{n,T}, reference)
    Embedding,  ///< d(x^{n,J1}, x^{n,T})
    Markov,     ///< d_J1(x^{n,J1}, Z^(n)), checked against the explicit bound
};

struct ProbeConfig {
    ProbeMode mode = ProbeMode::Reference;
    /// Embedding applied to the chain (Reference) or compared with J1 (Embedding).
    Topology embedding = Topology::J1;
    Topology metric = Topology::J1;
    std::optional<CadlagFunction> reference;
    std::vector<int> n_list;
    double epsilon = 0.1;
    int replicas = 100;
    std::uint64_t seed = 0;
    std::optional<Point> start;
    /// Maximum accepted exceedance probability per n. Empty: the exceedance
    /// must be nonincreasing in n up to the confidence bands.
    std::vector<double> thresholds;
    MetricOptions metric_options;
    ChooserPolicy policy;
};

struct ProbeRow {
    int n = 0;
    std::vector<double> distances;  ///< sorted
    double q50 = 0.0, q90 = 0.0, q99 = 0.0, max = 0.0, mean = 0.0;
    double exceedance = 0.0;
    double half_width = 0.0;
    /// Markov mode: mean of the explicit bound and the number of replicas
    /// where the distance exceeded it.
    double bound_mean = 0.0;
    int bound_violations = 0;
    bool pass = true;
};

struct ScenarioResult {
    std::string kernel;
    ProbeMode mode = ProbeMode::Reference;
    Topology embedding = Topology::J1;
    Topology metric = Topology::J1;
    double epsilon = 0.0;
    std::vector<ProbeRow> rows;
    bool pass = true;
};

/// Empirical quantile (type 1, inverse of the empirical cdf) of sorted data.
double empirical_quantile(const std::vector<double>& sorted, double q);

/// Kernels are rebuilt for each n with make_kernel(kernel_spec, n).
ScenarioResult convergence_probe(const std::string& kernel_spec, const ProbeConfig& config);

/// max over grid times t of P(|X_t - X_{t-}| > eps) for the step embedding.
ConditionEstimate fixed_discontinuity_frequency(const MarkovKernel& kernel, int n, double epsilon,
                                                const std::vector<double>& times, int replicas, std::uint64_t seed);

}  // namespace skorokhod
