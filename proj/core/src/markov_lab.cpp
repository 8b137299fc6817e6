#include "skorokhod/markov_lab.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace skorokhod {

namespace {

struct ParsedSpec {
    std::string name;
    std::optional<double> parameter;
};

ParsedSpec parse_spec(const std::string& spec) {
    const auto open = spec.find('(');
    if (open == std::string::npos) return {spec, std::nullopt};
    if (spec.back() != ')') throw std::invalid_argument("malformed kernel spec '" + spec + "'");
    const std::string inner = spec.substr(open + 1, spec.size() - open - 2);
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(inner, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("kernel parameter is not a number in '" + spec + "'");
    }
    if (used != inner.size() || !std::isfinite(value))
        throw std::invalid_argument("kernel parameter is not a number in '" + spec + "'");
    return {spec.substr(0, open), value};
}

std::size_t grid_steps(double h, int n) { return static_cast<std::size_t>(std::floor(h * n + 1e-9)); }

void check_replicas(int replicas) {
    if (replicas < 1) throw std::invalid_argument("replicas must be positive");
}

Rng replica_rng(std::uint64_t seed, std::uint64_t row, int replica) {
    return Rng(stream_seed(seed, row), static_cast<std::uint64_t>(replica));
}

}  // namespace

const std::vector<KernelInfo>& builtin_kernels() {
    static const std::vector<KernelInfo> catalog = {
        {"identity", "never moves", 0.0},
        {"drift", "deterministic step c/n; parameter c", 1.0},
        {"srw", "simple random walk with steps +-1/sqrt(n)", 0.0},
        {"lazy", "stays put with probability p, else steps +-1/sqrt(n); parameter p", 0.5},
        {"fixed-jump", "moves up at speed 1 outside [0,1) and jumps by +1 when crossing 0; frozen in [0,1)", 0.0},
        {"unit-jump", "deterministic step +1", 0.0},
    };
    return catalog;
}

MarkovKernel make_kernel(const std::string& spec, int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    const auto parsed = parse_spec(spec);
    const auto& catalog = builtin_kernels();
    const auto it = std::find_if(catalog.begin(), catalog.end(), [&](const KernelInfo& k) { return k.name == parsed.name; });
    if (it == catalog.end()) throw std::invalid_argument("unknown kernel '" + parsed.name + "'");
    const double param = parsed.parameter.value_or(it->default_parameter);
    const double dn = n;

    MarkovKernel k;
    k.name = spec;
    k.dimension = 1;
    k.start = {0.0};
    if (parsed.name == "identity") {
        k.step = [](const Point& x, Rng&) { return x; };
    } else if (parsed.name == "drift") {
        const double inc = param / dn;
        k.step = [inc](const Point& x, Rng&) { return Point{x[0] + inc}; };
    } else if (parsed.name == "srw") {
        const double s = 1.0 / std::sqrt(dn);
        k.step = [s](const Point& x, Rng& rng) { return Point{x[0] + rng.sign() * s}; };
    } else if (parsed.name == "lazy") {
        if (!(param >= 0.0 && param < 1.0)) throw std::invalid_argument("lazy walk needs p in [0,1)");
        const double s = 1.0 / std::sqrt(dn);
        k.step = [s, param](const Point& x, Rng& rng) {
            if (rng.bernoulli(param)) return x;
            return Point{x[0] + rng.sign() * s};
        };
    } else if (parsed.name == "fixed-jump") {
        const double dt = 1.0 / dn;
        k.step = [dt](const Point& x, Rng&) {
            const double v = x[0];
            if (v >= 0.0 && v < 1.0) return x;
            if (v >= 1.0 || v + dt < 0.0) return Point{v + dt};
            return Point{v + dt + 1.0};
        };
        k.critical_points = {{-0.5 / dn}};
        k.start = {-0.5};
    } else {
        k.step = [](const Point& x, Rng&) { return Point{x[0] + 1.0}; };
    }
    return k;
}

std::vector<Point> simulate_chain(const MarkovKernel& kernel, const Point& start, int steps, Rng& rng) {
    if (steps < 0) throw std::invalid_argument("steps must be nonnegative");
    if (start.size() != kernel.dimension) throw std::invalid_argument("start state has the wrong dimension");
    std::vector<Point> path;
    path.reserve(static_cast<std::size_t>(steps) + 1);
    path.push_back(start);
    for (int i = 0; i < steps; ++i) {
        Point next = kernel.step(path.back(), rng);
        if (next.size() != kernel.dimension || !all_finite(next))
            throw std::runtime_error("kernel '" + kernel.name + "' produced an invalid state");
        path.push_back(std::move(next));
    }
    return path;
}

std::vector<Point> simulate_chain(const MarkovKernel& kernel, const Point& start, int steps, std::uint64_t seed) {
    Rng rng(seed);
    return simulate_chain(kernel, start, steps, rng);
}

double confidence_half_width(std::size_t count, std::size_t trials) {
    if (trials == 0) return 1.0;
    const double nt = static_cast<double>(trials);
    const double p = count / nt;
    const double z = kConfidenceZ;
    const double normal = z * std::sqrt(p * (1.0 - p) / nt);
    const double z2 = z * z;
    const double centre = (p + z2 / (2.0 * nt)) / (1.0 + z2 / nt);
    const double spread = z / (1.0 + z2 / nt) * std::sqrt(p * (1.0 - p) / nt + z2 / (4.0 * nt * nt));
    const double wilson = std::max(p - (centre - spread), centre + spread - p);
    return std::max(normal, wilson);
}

std::vector<Point> default_x_grid(const MarkovKernel& kernel, double radius, int points) {
    if (!(radius > 0.0)) throw std::invalid_argument("radius must be positive");
    if (points < 1) throw std::invalid_argument("grid needs at least one point per axis");
    const std::size_t d = kernel.dimension;
    std::vector<double> axis;
    // Open ball: keep the grid strictly inside |x| < R.
    for (int i = 0; i < points; ++i) axis.push_back(points == 1 ? 0.0 : -radius + 2.0 * radius * (i + 0.5) / points);
    std::vector<Point> grid;
    std::vector<std::size_t> idx(d, 0);
    for (;;) {
        Point p(d);
        for (std::size_t j = 0; j < d; ++j) p[j] = axis[idx[j]];
        if (norm(p) < radius) grid.push_back(std::move(p));
        std::size_t j = 0;
        while (j < d && ++idx[j] == axis.size()) idx[j++] = 0;
        if (j == d) break;
    }
    for (const auto& c : kernel.critical_points)
        if (norm(c) < radius) grid.push_back(c);
    return grid;
}

ConditionEstimate estimate_local_continuity(const MarkovKernel& kernel, int n, double epsilon, double radius,
                                            double h, const std::vector<Point>& x_grid, int replicas,
                                            std::uint64_t seed) {
    if (!(epsilon > 0.0 && radius > 0.0 && h > 0.0)) throw std::invalid_argument("eps, R and h must be positive");
    if (x_grid.empty()) throw std::invalid_argument("x grid is empty");
    check_replicas(replicas);
    for (const auto& x : x_grid)
        if (!(norm(x) < radius)) throw std::invalid_argument("x grid must lie in the ball of radius R");

    const std::size_t steps = grid_steps(h, n);
    ConditionEstimate out{"iii-local-continuity", kernel.name, n, epsilon, radius, h, 0, x_grid, {}, {}, 0.0, 0.0,
                          replicas, seed};
    for (std::size_t i = 0; i < x_grid.size(); ++i) {
        std::vector<std::size_t> counts(steps + 1, 0);
        for (int r = 0; r < replicas; ++r) {
            Rng rng = replica_rng(seed, i, r);
            const auto path = simulate_chain(kernel, x_grid[i], static_cast<int>(steps), rng);
            for (std::size_t k = 0; k <= steps; ++k)
                if (distance(path[k], x_grid[i]) > epsilon) ++counts[k];
        }
        std::vector<double> row, hw;
        for (std::size_t k = 0; k <= steps; ++k) {
            row.push_back(static_cast<double>(counts[k]) / replicas);
            hw.push_back(confidence_half_width(counts[k], static_cast<std::size_t>(replicas)));
            if (row.back() > out.estimate || (i == 0 && k == 0)) {
                out.estimate = row.back();
                out.half_width = hw.back();
            }
        }
        out.probabilities.push_back(std::move(row));
        out.half_widths.push_back(std::move(hw));
    }
    return out;
}

ConditionEstimate estimate_global_bound(const MarkovKernel& kernel, int n, int m, const std::vector<double>& radii,
                                        int replicas, std::uint64_t seed) {
    if (m < 1) throw std::invalid_argument("m must be at least 1");
    if (radii.empty()) throw std::invalid_argument("R grid is empty");
    check_replicas(replicas);
    const int steps = n * m;
    std::vector<double> maxima;
    maxima.reserve(static_cast<std::size_t>(replicas));
    for (int r = 0; r < replicas; ++r) {
        Rng rng = replica_rng(seed, 0, r);
        const auto path = simulate_chain(kernel, kernel.start, steps, rng);
        double best = 0.0;
        for (const auto& y : path) best = std::max(best, norm(y));
        maxima.push_back(best);
    }
    ConditionEstimate out{"ii-global-bound", kernel.name, n, 0.0, 0.0, 0.0, m, {}, {}, {}, 0.0, 0.0, replicas, seed};
    bool first = true;
    for (double radius : radii) {
        const auto c = static_cast<std::size_t>(std::count_if(maxima.begin(), maxima.end(), [&](double v) { return v > radius; }));
        const double p = static_cast<double>(c) / replicas;
        const double hw = confidence_half_width(c, static_cast<std::size_t>(replicas));
        out.grid.push_back({radius});
        out.probabilities.push_back({p});
        out.half_widths.push_back({hw});
        if (first || p > out.estimate) {
            out.estimate = p;
            out.half_width = hw;
            first = false;
        }
    }
    return out;
}

double extra_steps_sup(const std::vector<Point>& path, const PoissonPath& clock, int n, ExtraStepsRange range) {
    const long long total = static_cast<long long>(clock.count_before(static_cast<double>(n)));
    const long long a = std::min<long long>(n - 1, total);
    const long long gap = std::llabs(n - 1 - total);
    const long long last = range == ExtraStepsRange::Inclusive ? gap : gap - 1;
    if (last < 0) return 0.0;
    if (static_cast<long long>(path.size()) <= a + last) throw std::invalid_argument("chain path too short for the extra steps");
    double best = 0.0;
    for (long long k = 1; k <= last; ++k) best = std::max(best, distance(path[a + k], path[a]));
    return best;
}

ConditionEstimate estimate_extra_steps(const MarkovKernel& kernel, int n, double epsilon, int replicas,
                                       std::uint64_t seed, ExtraStepsRange range) {
    check_replicas(replicas);
    std::size_t count = 0;
    for (int r = 0; r < replicas; ++r) {
        Rng rng = replica_rng(seed, 0, r);
        const auto clock = PoissonPath::sample(n, rng);
        const int total = static_cast<int>(clock.count_before(static_cast<double>(n)));
        const auto path = simulate_chain(kernel, kernel.start, std::max(n - 1, total), rng);
        if (extra_steps_sup(path, clock, n, range) > epsilon) ++count;
    }
    const double p = static_cast<double>(count) / replicas;
    const double hw = confidence_half_width(count, static_cast<std::size_t>(replicas));
    return {"extra-steps", kernel.name, n, epsilon, 0.0, 0.0, 0, {}, {{p}}, {{hw}}, p, hw, replicas, seed};
}

double empirical_quantile(const std::vector<double>& sorted, double q) {
    if (sorted.empty()) throw std::invalid_argument("quantile of empty data");
    const auto n = sorted.size();
    auto idx = static_cast<std::size_t>(std::ceil(q * static_cast<double>(n)));
    idx = std::clamp<std::size_t>(idx, 1, n);
    return sorted[idx - 1];
}

ScenarioResult convergence_probe(const std::string& kernel_spec, const ProbeConfig& config) {
    check_replicas(config.replicas);
    if (config.n_list.empty()) throw std::invalid_argument("probe needs at least one n");
    if (config.mode == ProbeMode::Reference && !config.reference)
        throw std::invalid_argument("reference mode needs a reference function");
    if (!config.thresholds.empty() && config.thresholds.size() != config.n_list.size())
        throw std::invalid_argument("one threshold per n is required");

    ScenarioResult result{kernel_spec, config.mode, config.embedding, config.metric, config.epsilon, {}, true};
    for (std::size_t ni = 0; ni < config.n_list.size(); ++ni) {
        const int n = config.n_list[ni];
        const MarkovKernel kernel = make_kernel(kernel_spec, n);
        const Point start = config.start.value_or(kernel.start);
        ProbeRow row;
        row.n = n;
        double bound_sum = 0.0;
        for (int r = 0; r < config.replicas; ++r) {
            Rng rng = replica_rng(config.seed, static_cast<std::uint64_t>(n), r);
            double d = 0.0;
            try {
                if (config.mode == ProbeMode::Markov) {
                    const auto clock = PoissonPath::sample(n, rng);
                    const int total = static_cast<int>(clock.count_before(static_cast<double>(n)));
                    auto path = simulate_chain(kernel, start, std::max(n - 1, total), rng);
                    const auto z = embed_markov(path, clock, n);
                    const double bound = clock_discrepancy(clock, n) + extra_steps_sup(path, clock, n);
                    path.resize(static_cast<std::size_t>(n));
                    const auto x = embed({n, std::move(path)}, Topology::J1);
                    d = d_j1(x, z, config.metric_options.tolerance).value;
                    bound_sum += bound;
                    if (d > bound + 1e-9) ++row.bound_violations;
                } else {
                    auto path = simulate_chain(kernel, start, n - 1, rng);
                    const SequenceData seq{n, std::move(path)};
                    const auto x = embed(seq, config.embedding, config.policy);
                    if (config.mode == ProbeMode::Reference) {
                        d = distance(config.metric, x, *config.reference, config.metric_options).value;
                    } else {
                        d = distance(config.metric, embed(seq, Topology::J1), x, config.metric_options).value;
                    }
                }
            } catch (const std::exception& e) {
                throw std::runtime_error("probe failed at n = " + std::to_string(n) + ", replica " + std::to_string(r) +
                                         ": " + e.what());
            }
            row.distances.push_back(d);
        }
        std::sort(row.distances.begin(), row.distances.end());
        const auto count = static_cast<std::size_t>(
            std::count_if(row.distances.begin(), row.distances.end(), [&](double v) { return v > config.epsilon; }));
        double sum = 0.0;
        for (double v : row.distances) sum += v;
        row.mean = sum / config.replicas;
        row.q50 = empirical_quantile(row.distances, 0.5);
        row.q90 = empirical_quantile(row.distances, 0.9);
        row.q99 = empirical_quantile(row.distances, 0.99);
        row.max = row.distances.back();
        row.exceedance = static_cast<double>(count) / config.replicas;
        row.half_width = confidence_half_width(count, static_cast<std::size_t>(config.replicas));
        if (config.mode == ProbeMode::Markov) row.bound_mean = bound_sum / config.replicas;

        if (!config.thresholds.empty()) {
            row.pass = row.exceedance <= config.thresholds[ni];
        } else if (!result.rows.empty()) {
            const auto& prev = result.rows.back();
            row.pass = row.exceedance <= prev.exceedance + prev.half_width + row.half_width;
        }
        if (row.bound_violations > 0) row.pass = false;
        result.pass = result.pass && row.pass;
        result.rows.push_back(std::move(row));
    }
    return result;
}

ConditionEstimate fixed_discontinuity_frequency(const MarkovKernel& kernel, int n, double epsilon,
                                                const std::vector<double>& times, int replicas, std::uint64_t seed) {
    check_replicas(replicas);
    if (times.empty()) throw std::invalid_argument("time grid is empty");
    for (double t : times)
        if (!(t > 0.0 && t < 1.0)) throw std::invalid_argument("grid times must lie in (0,1)");
    std::vector<std::size_t> counts(times.size(), 0);
    for (int r = 0; r < replicas; ++r) {
        Rng rng = replica_rng(seed, 0, r);
        const auto path = simulate_chain(kernel, kernel.start, n - 1, rng);
        for (std::size_t i = 0; i < times.size(); ++i) {
            const double scaled = times[i] * n;
            const double k = std::round(scaled);
            // The step embedding only jumps at multiples of 1/n.
            if (std::abs(scaled - k) > 1e-9 * n || k < 1.0) continue;
            const auto ki = static_cast<std::size_t>(k);
            if (distance(path[ki], path[ki - 1]) > epsilon) ++counts[i];
        }
    }
    ConditionEstimate out{"fixed-discontinuity", kernel.name, n, epsilon, 0.0, 0.0, 0, {}, {}, {}, 0.0, 0.0,
                          replicas, seed};
    for (std::size_t i = 0; i < times.size(); ++i) {
        const double p = static_cast<double>(counts[i]) / replicas;
        const double hw = confidence_half_width(counts[i], static_cast<std::size_t>(replicas));
        out.grid.push_back({times[i]});
        out.probabilities.push_back({p});
        out.half_widths.push_back({hw});
        if (i == 0 || p > out.estimate) {
            out.estimate = p;
            out.half_width = hw;
        }
    }
    return out;
}

}  // namespace skorokhod
