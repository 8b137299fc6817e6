#include "skorokhod/exact.hpp"

#include <cmath>
#include <vector>

namespace skorokhod::exact {

namespace {

// Knuth's two-sum: a + b == s + e exactly.
inline void two_sum(double a, double b, double& s, double& e) {
    s = a + b;
    const double bv = s - a;
    const double av = s - bv;
    e = (a - av) + (b - bv);
}

}  // namespace

int sum_sign(std::span<const double> terms) {
    // Nonoverlapping expansion, grown one term at a time (Shewchuk).
    std::vector<double> expansion;
    expansion.reserve(terms.size() * 2);
    for (double b : terms) {
        if (b == 0.0) continue;
        double q = b;
        std::vector<double> next;
        next.reserve(expansion.size() + 1);
        for (double e : expansion) {
            double s, err;
            two_sum(q, e, s, err);
            if (err != 0.0) next.push_back(err);
            q = s;
        }
        if (q != 0.0) next.push_back(q);
        expansion.swap(next);
    }
    // The largest-magnitude component is last and dominates the sign.
    if (expansion.empty()) return 0;
    const double top = expansion.back();
    return top > 0.0 ? 1 : -1;
}

}  // namespace skorokhod::exact
