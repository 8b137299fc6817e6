#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace skorokhod {

/// A value in R^d.
using Point = std::vector<double>;

inline double norm(std::span<const double> x) {
    if (x.size() == 1) return std::abs(x[0]);
    double s = 0.0;
    for (double v : x) s += v * v;
    return std::sqrt(s);
}

inline double distance(std::span<const double> x, std::span<const double> y) {
    if (x.size() == 1) return std::abs(x[0] - y[0]);
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double d = x[i] - y[i];
        s += d * d;
    }
    return std::sqrt(s);
}

/// x + a * (y - x)
inline Point lerp(std::span<const double> x, std::span<const double> y, double a) {
    Point out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] + a * (y[i] - x[i]);
    return out;
}

inline double dot(std::span<const double> x, std::span<const double> y) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

inline bool all_finite(std::span<const double> x) {
    return std::all_of(x.begin(), x.end(), [](double v) { return std::isfinite(v); });
}

}  // namespace skorokhod
