#include "skorokhod/generators.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace skorokhod::gen {

int uniform_int(Rng& rng, int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(rng.next() % span);
}

namespace {

std::vector<double> breakpoints(Rng& rng, int max_jumps, bool on_grid) {
    const int jumps = uniform_int(rng, 0, max_jumps);
    std::set<double> times;
    for (int i = 0; i < jumps; ++i) {
        const double t = on_grid ? uniform_int(rng, 1, 63) / 64.0 : rng.uniform();
        if (t > 0.0) times.insert(t);
    }
    std::vector<double> out{0.0};
    out.insert(out.end(), times.begin(), times.end());
    return out;
}

Point random_point(Rng& rng, std::size_t d, bool on_grid) {
    Point p(d);
    for (auto& v : p) v = on_grid ? uniform_int(rng, -16, 16) / 8.0 : uniform(rng, -1.0, 1.0);
    return p;
}

}  // namespace

CadlagFunction step_function(Rng& rng, std::size_t dimension, int max_jumps) {
    const bool grid = rng.bernoulli(0.5);
    auto breaks = breakpoints(rng, max_jumps, grid);
    std::vector<Point> values;
    for (std::size_t i = 0; i < breaks.size(); ++i) values.push_back(random_point(rng, dimension, grid));
    return CadlagFunction::step(std::move(breaks), std::move(values));
}

CadlagFunction random_walk(Rng& rng, std::size_t dimension, int max_jumps) {
    const bool grid = rng.bernoulli(0.5);
    auto breaks = breakpoints(rng, max_jumps, grid);
    std::vector<Point> values{Point(dimension, 0.0)};
    for (std::size_t i = 1; i < breaks.size(); ++i) {
        Point next = values.back();
        const Point step = random_point(rng, dimension, grid);
        for (std::size_t j = 0; j < dimension; ++j) next[j] += step[j];
        values.push_back(std::move(next));
    }
    return CadlagFunction::step(std::move(breaks), std::move(values));
}

CadlagFunction near_jump_pair(Rng& rng, std::size_t dimension, double delta) {
    const double half = delta / 2.0;
    const double offsets[] = {half,
                              std::nextafter(half, 0.0),
                              std::nextafter(half, 1.0),
                              half * rng.uniform(),
                              delta,
                              std::nextafter(delta, 0.0),
                              delta * rng.uniform()};
    double u = offsets[uniform_int(rng, 0, 6)];
    if (u <= 0.0) u = half;
    const double t0 = uniform(rng, 0.15, 0.85);

    std::vector<double> breaks;
    std::vector<double> levels;
    if (rng.bernoulli(0.5) && t0 - u > 0.0) {
        const double mids[] = {0.5, -0.5, 0.25, 1.5};
        breaks = {0.0, t0 - u, t0};
        levels = {0.0, mids[uniform_int(rng, 0, 3)], 1.0};
    } else {
        const double ends[] = {0.5, 1.5, 0.0, -0.5};
        breaks = {0.0, t0, std::min(t0 + u, std::nextafter(1.0, 0.0))};
        levels = {0.0, 1.0, ends[uniform_int(rng, 0, 3)]};
        if (breaks[2] <= breaks[1]) {
            breaks.pop_back();
            levels.pop_back();
        }
    }

    Point base = random_point(rng, dimension, false);
    Point dir = random_point(rng, dimension, false);
    if (dimension == 1) {
        base = {0.0};
        dir = {rng.bernoulli(0.5) ? 1.0 : -1.0};
    }
    std::vector<Point> values;
    for (double l : levels) {
        Point p(dimension);
        for (std::size_t j = 0; j < dimension; ++j) p[j] = base[j] + l * dir[j];
        values.push_back(std::move(p));
    }
    return CadlagFunction::step(std::move(breaks), std::move(values));
}

CadlagFunction piecewise_linear(Rng& rng, std::size_t dimension, int max_pieces) {
    auto breaks = breakpoints(rng, std::max(0, max_pieces - 1), rng.bernoulli(0.5));
    std::vector<CadlagFunction::Piece> pieces;
    for (std::size_t i = 0; i < breaks.size(); ++i) {
        const Point a = random_point(rng, dimension, false);
        if (rng.bernoulli(0.5))
            pieces.push_back(CadlagFunction::Piece::constant(a));
        else
            pieces.push_back(CadlagFunction::Piece::ramp(a, random_point(rng, dimension, false)));
    }
    return CadlagFunction(dimension, std::move(breaks), std::move(pieces));
}

}  // namespace skorokhod::gen
