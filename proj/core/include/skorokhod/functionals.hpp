#pragma once

#include <utility>

#include "skorokhod/cadlag.hpp"

namespace skorokhod {

/// Time window [t1, t2] inside [0,1].
struct Window {
    double t1 = 0.0;
    double t2 = 1.0;
};

/// Level band a < b.
struct Band {
    double a = 0.0;
    double b = 1.0;
};

/// f(t1+) before t1, f on [t1,t2), f(t2-) from t2 on. For t2 < 1 the value
/// f(t2) itself is replaced by f(t2-) so the result stays right-continuous.
/// A degenerate window t1 = t2 gives the constant f(t1).
CadlagFunction clamp_extend(const CadlagFunction& f, Window w);

/// tau = inf{t : f(t) >= a}, with inf of the empty set equal to 1.
double first_passage(const CadlagFunction& f, double a);

/// gamma+ of clamp_extend(f, w) at level a: f(tau) - a if tau < 1, else -1.
double overshoot(const CadlagFunction& f, Window w, double a);

/// nu: the largest k with t0 < ... < tk in the window, f(t0) <= a,
/// f(t1) >= b, f(t2) <= a, ... Evaluated on clamp_extend(f, w). Returns 0
/// when f never goes below a.
int oscillation_count(const CadlagFunction& f, Window w, Band band);

/// (inf, sup) of f over [t1, t2], one-sided limits included.
std::pair<double, double> interval_extrema(const CadlagFunction& f, Window w);

}  // namespace skorokhod
