#include "skorokhod/embeddings.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace skorokhod {

namespace {

Point along(const Point& a, const Point& b, double w) {
    if (w == 0.0) return a;
    if (w == 1.0) return b;
    return lerp(a, b, w);
}

template <class Step>
void check_steps(const std::vector<Step>& steps, const char* what) {
    if (steps.empty()) throw std::invalid_argument(std::string(what) + " chooser needs at least one step");
    if (steps.front().offset != 0.0) throw std::invalid_argument(std::string(what) + " chooser must start at offset 0");
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const double o = steps[i].offset;
        if (!(o >= 0.0 && o < 1.0)) throw std::invalid_argument(std::string(what) + " offsets must lie in [0,1)");
        if (i > 0 && !(o > steps[i - 1].offset))
            throw std::invalid_argument(std::string(what) + " offsets must be strictly increasing");
    }
}

void check_j2(const std::vector<J2Step>& steps) {
    check_steps(steps, "J2");
    if (steps.front().right) throw std::invalid_argument("J2 chooser must take y_k at k/n");
}

void check_m2(const std::vector<M2Piece>& pieces) {
    check_steps(pieces, "M2");
    for (const auto& p : pieces) {
        if (!(p.w0 >= 0.0 && p.w0 <= 1.0 && p.w1 >= 0.0 && p.w1 <= 1.0))
            throw std::invalid_argument("M2 weights must lie in [0,1] (segment membership)");
    }
    if (pieces.front().w0 != 0.0) throw std::invalid_argument("M2 chooser must take y_k at k/n");
}

}  // namespace

SequenceData SequenceData::scalar(int n, const std::vector<double>& values) {
    SequenceData s{n, {}};
    s.values.reserve(values.size());
    for (double v : values) s.values.push_back({v});
    return s;
}

void SequenceData::validate() const {
    if (n < 1) throw std::invalid_argument("sequence resolution n must be positive");
    if (values.size() < static_cast<std::size_t>(n))
        throw std::invalid_argument("sequence needs at least n terms, got " + std::to_string(values.size()));
    const std::size_t d = values.front().size();
    if (d == 0) throw std::invalid_argument("sequence values must have positive dimension");
    for (const auto& v : values) {
        if (v.size() != d) throw std::invalid_argument("sequence values differ in dimension");
        if (!all_finite(v)) throw std::invalid_argument("sequence values must be finite");
    }
}

ChooserPolicy ChooserPolicy::excursion() {
    ChooserPolicy p;
    p.m2 = {{0.0, 0.0, 0.0}, {0.25, 0.5, 0.5}, {0.5, 1.0, 1.0}, {0.75, 0.0, 0.0}};
    return p;
}

void ChooserPolicy::validate() const {
    check_j2(j2);
    check_m2(m2);
    for (const auto& [k, steps] : j2_overrides) check_j2(steps);
    for (const auto& [k, pieces] : m2_overrides) check_m2(pieces);
}

CadlagFunction embed(const SequenceData& seq, Topology topology, const ChooserPolicy& policy) {
    seq.validate();
    policy.validate();
    const int n = seq.n;
    const auto& y = seq.values;
    const double dn = n;
    std::vector<double> breaks;
    std::vector<CadlagFunction::Piece> pieces;
    using Piece = CadlagFunction::Piece;

    for (int k = 0; k < n; ++k) {
        const Point& a = y[k];
        const double start = k / dn;
        if (k + 1 == n) {
            breaks.push_back(start);
            pieces.push_back(Piece::constant(a));
            break;
        }
        const Point& b = y[k + 1];
        switch (topology) {
            case Topology::J1:
                breaks.push_back(start);
                pieces.push_back(Piece::constant(a));
                break;
            case Topology::M1:
                breaks.push_back(start);
                if (policy.m1 == M1Interpolation::Linear)
                    pieces.push_back(Piece::ramp(a, b));
                else
                    pieces.push_back(Piece::ramp(a, lerp(a, b, 1.0 / dn)));
                break;
            case Topology::J2: {
                const auto it = policy.j2_overrides.find(k);
                const auto& steps = it == policy.j2_overrides.end() ? policy.j2 : it->second;
                for (const auto& s : steps) {
                    breaks.push_back(s.offset == 0.0 ? start : (k + s.offset) / dn);
                    pieces.push_back(Piece::constant(s.right ? b : a));
                }
                break;
            }
            case Topology::M2: {
                const auto it = policy.m2_overrides.find(k);
                const auto& steps = it == policy.m2_overrides.end() ? policy.m2 : it->second;
                for (const auto& s : steps) {
                    breaks.push_back(s.offset == 0.0 ? start : (k + s.offset) / dn);
                    pieces.push_back(Piece::ramp(along(a, b, s.w0), along(a, b, s.w1)));
                }
                break;
            }
        }
    }
    return CadlagFunction(seq.dimension(), std::move(breaks), std::move(pieces));
}

SequenceData counterexample_sequence(int family, int n) {
    if (n < 4) throw std::invalid_argument("counterexample sequences require n >= 4");
    if (family < 1 || family > 3) throw std::invalid_argument("counterexample family must be 1, 2 or 3");
    // Level sets are decided in integers: k/n < 1/2 iff 2k < n.
    auto first_at_half = [n](int k, int lag) { return 2 * (k - lag - 1) < n && n <= 2 * (k - lag); };
    std::vector<double> v(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        double value = 1.0;
        if (2 * k < n) {
            value = 0.0;
        } else if (family == 1) {
            if (first_at_half(k, 0)) value = 0.5;
        } else if (family == 2) {
            if (first_at_half(k, 0)) value = 1.0;
            else if (first_at_half(k, 1)) value = 0.0;
        } else {
            if (first_at_half(k, 0)) value = 0.5;
            else if (first_at_half(k, 1)) value = 1.0;
            else if (first_at_half(k, 2)) value = 0.0;
        }
        v[static_cast<std::size_t>(k)] = value;
    }
    return SequenceData::scalar(n, v);
}

CadlagFunction counterexample_limit() { return CadlagFunction::indicator(0.5); }

PoissonPath::PoissonPath(std::vector<double> jumps, double horizon) : jumps_(std::move(jumps)), horizon_(horizon) {
    if (!(horizon >= 0.0)) throw std::invalid_argument("clock horizon must be nonnegative");
    for (std::size_t i = 0; i < jumps_.size(); ++i) {
        if (!(jumps_[i] >= 0.0 && jumps_[i] <= horizon)) throw std::invalid_argument("clock jumps must lie in [0, horizon]");
        if (i > 0 && !(jumps_[i] > jumps_[i - 1])) throw std::invalid_argument("clock jumps must be strictly increasing");
    }
}

PoissonPath PoissonPath::sample(double horizon, Rng& rng) {
    std::vector<double> jumps;
    double t = 0.0;
    for (;;) {
        t += rng.exponential();
        if (t > horizon) break;
        if (!jumps.empty() && t <= jumps.back()) continue;
        jumps.push_back(t);
    }
    return PoissonPath(std::move(jumps), horizon);
}

std::size_t PoissonPath::count(double s) const {
    return static_cast<std::size_t>(std::upper_bound(jumps_.begin(), jumps_.end(), s) - jumps_.begin());
}

std::size_t PoissonPath::count_before(double s) const {
    return static_cast<std::size_t>(std::lower_bound(jumps_.begin(), jumps_.end(), s) - jumps_.begin());
}

CadlagFunction embed_markov(const std::vector<Point>& path, const PoissonPath& clock, int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (clock.horizon() < n) throw std::invalid_argument("clock must cover [0, n]");
    const std::size_t needed = clock.count_before(static_cast<double>(n)) + 1;
    if (path.size() < needed)
        throw std::invalid_argument("chain path too short: need " + std::to_string(needed) + " states, have " +
                                    std::to_string(path.size()));
    std::vector<double> breaks{0.0};
    std::vector<Point> values{path[clock.count(0.0)]};
    for (std::size_t i = 0; i < clock.jumps().size(); ++i) {
        const double tau = clock.jumps()[i];
        if (tau <= 0.0) continue;
        if (tau >= n) break;
        const double t = tau / n;
        if (t >= 1.0 || t <= breaks.back()) {
            values.back() = path[i + 1];
            continue;
        }
        breaks.push_back(t);
        values.push_back(path[i + 1]);
    }
    return CadlagFunction::step(std::move(breaks), std::move(values));
}

double clock_discrepancy(const PoissonPath& clock, int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    const double dn = n;
    double best = 0.0;
    double a = 0.0;
    std::size_t c = clock.count(0.0);
    auto close_segment = [&](double b) {
        const double level = c / dn;
        best = std::max({best, std::abs(a - level), std::abs(b - level)});
    };
    for (std::size_t i = c; i < clock.jumps().size(); ++i) {
        const double u = clock.jumps()[i] / dn;
        if (u >= 1.0) break;
        close_segment(u);
        a = u;
        c = i + 1;
    }
    close_segment(1.0);
    return best;
}

}  // namespace skorokhod
