#include "skorokhod/oscillation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

#include "skorokhod/exact.hpp"

namespace skorokhod {

std::string_view to_string(Topology t) {
    switch (t) {
        case Topology::J1: return "J1";
        case Topology::J2: return "J2";
        case Topology::M1: return "M1";
        case Topology::M2: return "M2";
    }
    return "?";
}

Topology parse_topology(std::string_view s) {
    std::string lower(s);
    for (auto& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (lower == "j1") return Topology::J1;
    if (lower == "j2") return Topology::J2;
    if (lower == "m1") return Topology::M1;
    if (lower == "m2") return Topology::M2;
    throw std::invalid_argument("unknown topology: " + std::string(s));
}

double j_gauge(std::span<const double> x, std::span<const double> x1, std::span<const double> x2) {
    return std::min(distance(x, x1), distance(x, x2));
}

namespace {

bool on_segment(std::span<const double> x, std::span<const double> x1, std::span<const double> x2) {
    if (x.size() == 1) return std::min(x1[0], x2[0]) <= x[0] && x[0] <= std::max(x1[0], x2[0]);
    // x = x1 + a (x2 - x1) with a in [0,1], up to rounding in the cross terms.
    double dd = 0.0, dx = 0.0, xx = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double u = x2[i] - x1[i];
        const double w = x[i] - x1[i];
        dd += u * u;
        dx += u * w;
        xx += w * w;
    }
    if (xx == 0.0) return true;
    if (dd == 0.0) return false;
    if (dx < 0.0 || dx > dd) return false;
    // |w|^2 |u|^2 - (u.w)^2 is the squared area spanned by u and w.
    const double area2 = xx * dd - dx * dx;
    return area2 <= 1e-24 * xx * dd;
}

}  // namespace

double m_gauge(std::span<const double> x, std::span<const double> x1, std::span<const double> x2) {
    return on_segment(x, x1, x2) ? 0.0 : j_gauge(x, x1, x2);
}

TripleFamily family_of(Topology t) {
    return (t == Topology::J1 || t == Topology::M1) ? TripleFamily::T1 : TripleFamily::T2;
}

bool in_triple_set(TripleFamily family, double delta, const Triple& w, T2Convention conv) {
    const double lo = std::max(w.t - delta, 0.0);
    const double hi = std::min(w.t + delta, 1.0);
    if (w.t < 0.0 || w.t > 1.0) return false;
    if (family == TripleFamily::T1) return lo <= w.t1 && w.t1 < w.t && w.t < w.t2 && w.t2 <= hi;
    const bool literal = lo <= w.t1 && w.t1 <= lo + delta / 2 && hi - delta / 2 <= w.t2 && w.t2 <= hi;
    if (conv == T2Convention::Literal) return literal;
    return literal && w.t1 < w.t && w.t < w.t2;
}

namespace {

void check_delta(double delta) {
    if (!(delta > 0.0 && delta <= 1.0)) throw std::invalid_argument("delta must lie in (0,1]");
}

// ---------------------------------------------------------------------------
// Symbolic times for the exact step-function scan. A time is the exact sum
// of up to four doubles plus an optional infinitesimal to the right.

struct Sym {
    std::array<double, 4> terms{};
    int eps = 0;

    double approx() const { return ((terms[0] + terms[1]) + terms[2]) + terms[3]; }
};

Sym sym(double x) { return Sym{{x, 0.0, 0.0, 0.0}, 0}; }

Sym shifted(Sym s, double d) {
    for (auto& v : s.terms)
        if (v == 0.0) {
            v = d;
            return s;
        }
    throw std::logic_error("symbolic time overflow");
}

int cmp(const Sym& a, const Sym& b) {
    const std::array<double, 8> diff{a.terms[0],  a.terms[1],  a.terms[2],  a.terms[3],
                                     -b.terms[0], -b.terms[1], -b.terms[2], -b.terms[3]};
    const int s = exact::sum_sign(diff);
    if (s != 0) return s;
    return (a.eps > b.eps) - (a.eps < b.eps);
}

class RangeExtrema {
public:
    explicit RangeExtrema(std::vector<double> values) {
        const std::size_t n = values.size();
        min_.push_back(values);
        max_.push_back(std::move(values));
        for (std::size_t w = 1; 2 * w <= n; w *= 2) {
            const auto& pmin = min_.back();
            const auto& pmax = max_.back();
            std::vector<double> lmin(n - 2 * w + 1), lmax(n - 2 * w + 1);
            for (std::size_t i = 0; i + 2 * w <= n; ++i) {
                lmin[i] = std::min(pmin[i], pmin[i + w]);
                lmax[i] = std::max(pmax[i], pmax[i + w]);
            }
            min_.push_back(std::move(lmin));
            max_.push_back(std::move(lmax));
        }
    }

    // Inclusive range [a,b].
    std::pair<double, double> query(std::size_t a, std::size_t b) const {
        const std::size_t len = b - a + 1;
        std::size_t level = 0;
        while ((std::size_t{2} << level) <= len) ++level;
        const std::size_t w = std::size_t{1} << level;
        return {std::min(min_[level][a], min_[level][b + 1 - w]), std::max(max_[level][a], max_[level][b + 1 - w])};
    }

private:
    std::vector<std::vector<double>> min_;
    std::vector<std::vector<double>> max_;
};

struct PieceRange {
    std::size_t lo = 0;
    std::size_t hi = 0;
};

struct Config {
    Sym t;
    std::size_t jt = 0;
    PieceRange left;
    PieceRange right;
};

class StepScan {
public:
    StepScan(const CadlagFunction& f, double delta, TripleFamily family, T2Convention conv)
        : f_(f), delta_(delta), half_(delta / 2), family_(family), conv_(conv) {
        if (f.dimension() == 1) {
            std::vector<double> v;
            v.reserve(f.piece_count());
            for (const auto& p : f.pieces()) v.push_back(p.start[0]);
            extrema_.emplace(std::move(v));
        }
    }

    std::size_t piece_le(const Sym& x) const {
        const auto& s = f_.breakpoints();
        std::size_t lo = 0, hi = s.size();
        while (lo < hi) {
            const std::size_t mid = (lo + hi) / 2;
            if (cmp(sym(s[mid]), x) <= 0) lo = mid + 1;
            else hi = mid;
        }
        return lo == 0 ? 0 : lo - 1;
    }

    std::size_t piece_lt(const Sym& x) const {
        const auto& s = f_.breakpoints();
        std::size_t lo = 0, hi = s.size();
        while (lo < hi) {
            const std::size_t mid = (lo + hi) / 2;
            if (cmp(sym(s[mid]), x) < 0) lo = mid + 1;
            else hi = mid;
        }
        return lo == 0 ? 0 : lo - 1;
    }

    std::optional<Config> configure(const Sym& t) const {
        const Sym zero = sym(0.0);
        const Sym one = sym(1.0);
        const bool literal = family_ == TripleFamily::T2 && conv_ == T2Convention::Literal;
        if (!literal && (cmp(t, zero) <= 0 || cmp(t, one) >= 0)) return std::nullopt;

        Sym alpha = shifted(t, -delta_);
        if (cmp(alpha, zero) < 0) alpha = zero;
        Sym beta = shifted(t, delta_);
        if (cmp(beta, one) > 0) beta = one;

        Config c;
        c.t = t;
        c.jt = piece_le(t);
        if (family_ == TripleFamily::T1) {
            c.left = {piece_le(alpha), piece_lt(t)};
            c.right = {piece_le(t), piece_le(beta)};
            return c;
        }
        const Sym a_end = shifted(alpha, half_);
        const Sym b_start = shifted(beta, -half_);
        if (literal) {
            c.left = {piece_le(alpha), piece_le(a_end)};
            c.right = {piece_le(b_start), piece_le(beta)};
            return c;
        }
        c.left = cmp(a_end, t) < 0 ? PieceRange{piece_le(alpha), piece_le(a_end)} : PieceRange{piece_le(alpha), piece_lt(t)};
        c.right = cmp(b_start, t) > 0 ? PieceRange{piece_le(b_start), piece_le(beta)} : PieceRange{piece_le(t), piece_le(beta)};
        return c;
    }

    // (J value, M value) for a configuration.
    std::pair<double, double> gauges(const Config& c, double m_floor) const {
        const auto& pieces = f_.pieces();
        const Point& x = pieces[c.jt].start;
        if (extrema_) {
            const double xv = x[0];
            const auto [lmin, lmax] = extrema_->query(c.left.lo, c.left.hi);
            const auto [rmin, rmax] = extrema_->query(c.right.lo, c.right.hi);
            const double j = std::min(std::max(xv - lmin, lmax - xv), std::max(xv - rmin, rmax - xv));
            const double m = std::max({0.0, xv - std::max(lmin, rmin), std::min(lmax, rmax) - xv});
            return {j, m};
        }
        double a = 0.0, b = 0.0;
        for (std::size_t i = c.left.lo; i <= c.left.hi; ++i) a = std::max(a, distance(x, pieces[i].start));
        for (std::size_t i = c.right.lo; i <= c.right.hi; ++i) b = std::max(b, distance(x, pieces[i].start));
        const double j = std::min(a, b);
        double m = 0.0;
        if (j > m_floor) {
            for (std::size_t i = c.left.lo; i <= c.left.hi && m < j; ++i)
                for (std::size_t k = c.right.lo; k <= c.right.hi; ++k)
                    m = std::max(m, m_gauge(x, pieces[i].start, pieces[k].start));
        }
        return {j, m};
    }

    std::vector<Sym> events() const {
        std::vector<double> bases{0.0, 1.0};
        bases.insert(bases.end(), f_.breakpoints().begin() + 1, f_.breakpoints().end());
        std::vector<Sym> out;
        const Sym zero = sym(0.0);
        const Sym one = sym(1.0);
        for (double b : bases)
            for (int k = -2; k <= 2; ++k) {
                Sym e = sym(b);
                if (k != 0) e = shifted(e, k * half_);
                if (cmp(e, zero) >= 0 && cmp(e, one) <= 0) out.push_back(e);
            }
        std::sort(out.begin(), out.end(), [](const Sym& a, const Sym& b) { return cmp(a, b) < 0; });
        out.erase(std::unique(out.begin(), out.end(), [](const Sym& a, const Sym& b) { return cmp(a, b) == 0; }),
                  out.end());
        return out;
    }

    Triple witness(const Config& c, double t_num, bool use_m) const {
        const auto& pieces = f_.pieces();
        const Point& x = pieces[c.jt].start;
        std::size_t bl = c.left.lo, br = c.right.lo;
        if (use_m) {
            double best = -1.0;
            for (std::size_t i = c.left.lo; i <= c.left.hi; ++i)
                for (std::size_t k = c.right.lo; k <= c.right.hi; ++k) {
                    const double v = m_gauge(x, pieces[i].start, pieces[k].start);
                    if (v > best) best = v, bl = i, br = k;
                }
        } else {
            double a = -1.0, b = -1.0;
            for (std::size_t i = c.left.lo; i <= c.left.hi; ++i)
                if (distance(x, pieces[i].start) > a) a = distance(x, pieces[i].start), bl = i;
            for (std::size_t k = c.right.lo; k <= c.right.hi; ++k)
                if (distance(x, pieces[k].start) > b) b = distance(x, pieces[k].start), br = k;
        }
        const double lo = std::max(t_num - delta_, 0.0);
        const double hi = std::min(t_num + delta_, 1.0);
        double l_lo = lo, l_hi = t_num, r_lo = t_num, r_hi = hi;
        if (family_ == TripleFamily::T2) {
            l_hi = conv_ == T2Convention::Literal ? lo + half_ : std::min(lo + half_, t_num);
            r_lo = conv_ == T2Convention::Literal ? hi - half_ : std::max(hi - half_, t_num);
        }
        auto pick = [&](std::size_t j, double a, double b) {
            const double s = std::max(f_.piece_start(j), a);
            const double e = std::min(f_.piece_end(j), b);
            return s + (e - s) / 2;
        };
        return {t_num, pick(bl, l_lo, l_hi), pick(br, r_lo, r_hi)};
    }

private:
    const CadlagFunction& f_;
    double delta_;
    double half_;
    TripleFamily family_;
    T2Convention conv_;
    std::optional<RangeExtrema> extrema_;
};

struct FamilyResult {
    OscillationReport j;
    OscillationReport m;
};

FamilyResult scan_step(const CadlagFunction& f, double delta, TripleFamily family, T2Convention conv) {
    StepScan scan(f, delta, family, conv);
    const auto events = scan.events();
    double best_j = 0.0, best_m = 0.0;
    std::optional<Config> arg_j, arg_m;
    std::size_t idx_j = 0, idx_m = 0;
    for (std::size_t i = 0; i < events.size(); ++i) {
        for (int eps = 0; eps <= 1; ++eps) {
            if (eps == 1 && i + 1 == events.size()) continue;
            Sym t = events[i];
            t.eps = eps;
            const auto c = scan.configure(t);
            if (!c) continue;
            const auto [j, m] = scan.gauges(*c, best_m);
            if (!arg_j || j > best_j) best_j = j, arg_j = c, idx_j = i;
            if (!arg_m || m > best_m) best_m = m, arg_m = c, idx_m = i;
        }
    }
    auto numeric_t = [&](const Config& c, std::size_t i) {
        const double e = events[i].approx();
        if (c.t.eps == 0) return e;
        return e + (events[i + 1].approx() - e) / 2;
    };
    FamilyResult out;
    out.j.value = best_j;
    out.m.value = best_m;
    if (arg_j) out.j.witness = scan.witness(*arg_j, numeric_t(*arg_j, idx_j), false);
    if (arg_m) out.m.witness = scan.witness(*arg_m, numeric_t(*arg_m, idx_m), true);
    return out;
}

// ---------------------------------------------------------------------------
// Sampled scan for functions with linear pieces.

struct Candidate {
    double time;
    Point value;
};

// Values of f at the ends of (piece ∩ [lo,hi]) for every piece meeting the
// window. Convexity of |x - f| on a linear piece makes these sufficient for
// the window suprema needed here.
void window_values(const CadlagFunction& f, double lo, double hi, bool hi_open, std::vector<Candidate>& out) {
    out.clear();
    if (hi < lo) return;
    const std::size_t first = f.piece_index(lo);
    std::size_t last = f.piece_index(hi);
    if (hi_open && last > first && f.piece_start(last) >= hi) --last;
    if (hi_open && last == first && hi <= lo) return;
    for (std::size_t j = first; j <= last; ++j) {
        const double a = std::max(f.piece_start(j), lo);
        const double b = std::min(f.piece_end(j), hi);
        out.push_back({a, f.piece_value(j, a)});
        if (f.pieces()[j].linear) out.push_back({b, f.piece_value(j, b)});
    }
}

FamilyResult scan_sampled(const CadlagFunction& f, double delta, TripleFamily family, T2Convention conv,
                          int resolution) {
    const double half = delta / 2;
    std::vector<double> events;
    std::vector<double> bases{0.0, 1.0};
    bases.insert(bases.end(), f.breakpoints().begin() + 1, f.breakpoints().end());
    for (double b : bases)
        for (int k = -2; k <= 2; ++k) {
            const double e = b + k * half;
            if (e >= 0.0 && e <= 1.0) events.push_back(e);
        }
    std::sort(events.begin(), events.end());
    events.erase(std::unique(events.begin(), events.end()), events.end());

    std::vector<double> times;
    for (std::size_t i = 0; i < events.size(); ++i) {
        times.push_back(events[i]);
        if (i + 1 == events.size()) break;
        const double a = events[i], b = events[i + 1];
        const auto k = static_cast<std::size_t>(std::max(1.0, std::ceil((b - a) * resolution)));
        for (std::size_t q = 0; q < k; ++q) {
            const double t = a + (static_cast<double>(q) + 0.5) * (b - a) / static_cast<double>(k);
            if (t > a && t < b) times.push_back(t);
        }
    }

    const bool literal = family == TripleFamily::T2 && conv == T2Convention::Literal;
    FamilyResult out;
    out.j.value = out.m.value = 0.0;
    std::vector<Candidate> left, right;
    for (double t : times) {
        if (!literal && (t <= 0.0 || t >= 1.0)) continue;
        const double alpha = std::max(t - delta, 0.0);
        const double beta = std::min(t + delta, 1.0);
        if (family == TripleFamily::T1) {
            window_values(f, alpha, t, true, left);
            window_values(f, t, beta, false, right);
        } else if (literal) {
            window_values(f, alpha, alpha + half, false, left);
            window_values(f, beta - half, beta, false, right);
        } else {
            if (alpha + half < t) window_values(f, alpha, alpha + half, false, left);
            else window_values(f, alpha, t, true, left);
            if (beta - half > t) window_values(f, beta - half, beta, false, right);
            else window_values(f, t, beta, false, right);
        }
        if (left.empty() || right.empty()) continue;
        const Point x = f.evaluate(t);

        const Candidate* jl = &left.front();
        const Candidate* jr = &right.front();
        for (const auto& c : left)
            if (distance(x, c.value) > distance(x, jl->value)) jl = &c;
        for (const auto& c : right)
            if (distance(x, c.value) > distance(x, jr->value)) jr = &c;
        const double j = std::min(distance(x, jl->value), distance(x, jr->value));
        if (j > out.j.value) out.j.value = j, out.j.witness = {t, jl->time, jr->time};

        if (j <= out.m.value) continue;
        for (const auto& a : left)
            for (const auto& b : right) {
                const double m = m_gauge(x, a.value, b.value);
                if (m > out.m.value) out.m.value = m, out.m.witness = {t, a.time, b.time};
            }
    }
    const double bound = 3.0 * f.max_slope() / resolution;
    out.j.exact = out.m.exact = false;
    out.j.error_bound = bound;
    out.m.error_bound = f.dimension() == 1 ? bound : std::numeric_limits<double>::infinity();
    return out;
}

FamilyResult scan(const CadlagFunction& f, double delta, TripleFamily family, const OscillationOptions& opts) {
    check_delta(delta);
    if (opts.resolution < 2) throw std::invalid_argument("resolution must be at least 2");
    if (f.is_piecewise_constant()) return scan_step(f, delta, family, opts.t2);
    return scan_sampled(f, delta, family, opts.t2, opts.resolution);
}

}  // namespace

OscillationReport oscillation(Topology topology, double delta, const CadlagFunction& f,
                              const OscillationOptions& opts) {
    const auto r = scan(f, delta, family_of(topology), opts);
    OscillationReport out = (topology == Topology::J1 || topology == Topology::J2) ? r.j : r.m;
    out.topology = topology;
    out.delta = delta;
    return out;
}

std::array<OscillationReport, 4> oscillation_profile(double delta, const CadlagFunction& f,
                                                     const OscillationOptions& opts) {
    const auto t1 = scan(f, delta, TripleFamily::T1, opts);
    const auto t2 = scan(f, delta, TripleFamily::T2, opts);
    std::array<OscillationReport, 4> out{t1.j, t2.j, t1.m, t2.m};
    const std::array<Topology, 4> tags{Topology::J1, Topology::J2, Topology::M1, Topology::M2};
    for (std::size_t i = 0; i < 4; ++i) {
        out[i].topology = tags[i];
        out[i].delta = delta;
    }
    return out;
}

double boundary_oscillation(double delta, const CadlagFunction& f) {
    check_delta(delta);
    const Point f0 = f.evaluate(0.0);
    const Point& f1 = f.terminal_value();
    double head = 0.0, tail = 0.0;
    for (std::size_t j = 0; j < f.piece_count(); ++j) {
        const double s = f.piece_start(j);
        const double e = f.piece_end(j);
        // (0, delta) meets piece j iff s < delta.
        if (s < delta) {
            head = std::max(head, distance(f0, f.piece_value(j, s)));
            head = std::max(head, distance(f0, f.piece_value(j, std::min(e, delta))));
        }
        // (1-delta, 1) meets piece j iff e > 1 - delta.
        if (exact::sum_sign({e, delta, -1.0}) > 0) {
            tail = std::max(tail, distance(f1, f.piece_value(j, std::max(s, 1.0 - delta))));
            tail = std::max(tail, distance(f1, f.piece_value(j, e)));
        }
    }
    return head + tail;
}

}  // namespace skorokhod
