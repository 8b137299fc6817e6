#pragma once

#include <initializer_list>
#include <span>

namespace skorokhod::exact {

/// Sign (-1, 0, +1) of the real-number sum of the given doubles, computed
/// without rounding error by expansion arithmetic.
int sum_sign(std::span<const double> terms);

inline int sum_sign(std::initializer_list<double> terms) {
    return sum_sign(std::span<const double>(terms.begin(), terms.size()));
}

/// Sign of (a + b - c).
inline int compare_sum(double a, double b, double c) { return sum_sign({a, b, -c}); }

}  // namespace skorokhod::exact
