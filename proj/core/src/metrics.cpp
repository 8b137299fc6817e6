#include "skorokhod/metrics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace skorokhod {

double graph_distance(const GraphPoint& a, const GraphPoint& b, GraphNorm norm) {
    const double dx = distance(a.value, b.value);
    const double dt = std::abs(a.time - b.time);
    return norm == GraphNorm::Box ? std::max(dx, dt) : std::hypot(dx, dt);
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

using Vec2 = std::array<double, 2>;
using Poly = std::vector<Vec2>;

// Half-plane c0 + c1 s + c2 r <= 0.
struct HalfPlane {
    double c0, c1, c2;
    double eval(const Vec2& p) const { return c0 + c1 * p[0] + c2 * p[1]; }
};

void clip(Poly& poly, const HalfPlane& h) {
    if (poly.empty()) return;
    Poly out;
    out.reserve(poly.size() + 2);
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& p = poly[i];
        const Vec2& q = poly[(i + 1) % n];
        const double fp = h.eval(p);
        const double fq = h.eval(q);
        if (fp <= 0.0) out.push_back(p);
        if ((fp <= 0.0) != (fq <= 0.0)) {
            const double lam = fp / (fp - fq);
            out.push_back({p[0] + lam * (q[0] - p[0]), p[1] + lam * (q[1] - p[1])});
        }
    }
    poly = std::move(out);
}

// Roots of a x^2 + b x + c = 0 (a > 0).
int quadratic_roots(double a, double b, double c, double roots[2]) {
    const double disc = b * b - 4 * a * c;
    if (disc < 0.0) return 0;
    const double sq = std::sqrt(disc);
    const double q = -0.5 * (b + std::copysign(sq, b));
    if (q == 0.0) {
        roots[0] = roots[1] = 0.0;
        return 1;
    }
    roots[0] = q / a;
    roots[1] = c / q;
    return 2;
}

struct Affine {
    // value(s, r) = u + s * alpha - r * beta
    std::vector<double> u, alpha, beta;
};

// Range of s over {(s,r) in poly : |u + s alpha - r beta| <= eps}.
std::optional<std::pair<double, double>> quadratic_range(const Poly& poly, const std::vector<HalfPlane>& planes,
                                                         const Affine& q, double eps) {
    if (poly.empty()) return std::nullopt;
    const double e2 = eps * eps;
    const std::size_t d = q.u.size();
    double smin = kInf, smax = -kInf;
    auto add = [&](double s) {
        smin = std::min(smin, s);
        smax = std::max(smax, s);
    };
    auto value_at = [&](double s, double r, std::vector<double>& w) {
        for (std::size_t i = 0; i < d; ++i) w[i] = q.u[i] + s * q.alpha[i] - r * q.beta[i];
    };
    std::vector<double> w0(d), w1(d);
    for (const auto& v : poly) {
        value_at(v[0], v[1], w0);
        if (dot(w0, w0) <= e2) add(v[0]);
    }
    const std::size_t n = poly.size();
    for (std::size_t i = 0; n >= 2 && i < n; ++i) {
        const Vec2& p = poly[i];
        const Vec2& r = poly[(i + 1) % n];
        const double ds = r[0] - p[0], dr = r[1] - p[1];
        value_at(p[0], p[1], w0);
        for (std::size_t k = 0; k < d; ++k) w1[k] = ds * q.alpha[k] - dr * q.beta[k];
        const double a = dot(w1, w1);
        if (a <= 0.0) continue;
        double roots[2];
        const int nr = quadratic_roots(a, 2 * dot(w0, w1), dot(w0, w0) - e2, roots);
        for (int k = 0; k < nr; ++k)
            if (roots[k] >= 0.0 && roots[k] <= 1.0) add(p[0] + roots[k] * ds);
    }
    const double bb = dot(q.beta, q.beta);
    if (bb > 0.0) {
        std::vector<double> pu(d), pa(d);
        const double ub = dot(q.u, q.beta) / bb, ab = dot(q.alpha, q.beta) / bb;
        for (std::size_t k = 0; k < d; ++k) {
            pu[k] = q.u[k] - ub * q.beta[k];
            pa[k] = q.alpha[k] - ab * q.beta[k];
        }
        const double a = dot(pa, pa);
        double roots[2];
        const int nr = a > 0.0 ? quadratic_roots(a, 2 * dot(pu, pa), dot(pu, pu) - e2, roots) : 0;
        for (int k = 0; k < nr; ++k) {
            const double s = roots[k];
            const double r = ub + s * ab;
            const double slack = 1e-14;
            if (s < -slack || s > 1 + slack || r < -slack || r > 1 + slack) continue;
            const bool inside = std::all_of(planes.begin(), planes.end(),
                                            [&](const HalfPlane& h) { return h.eval({s, r}) <= slack; });
            if (inside) add(std::clamp(s, 0.0, 1.0));
        }
    }
    if (smin > smax) return std::nullopt;
    return std::make_pair(std::max(smin, 0.0), std::min(smax, 1.0));
}

Poly unit_square() { return {{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}}; }

// s-interval of points a(s) within eps of segment b.
std::optional<std::pair<double, double>> covered(const Segment& a, const Segment& b, double eps, GraphNorm norm) {
    const std::size_t d = a.a.value.size();
    Poly poly = unit_square();
    std::vector<HalfPlane> planes;
    auto add_linear = [&](double c0, double c1, double c2) {
        planes.push_back({c0 - eps, c1, c2});
        planes.push_back({-c0 - eps, -c1, -c2});
        clip(poly, planes[planes.size() - 2]);
        clip(poly, planes.back());
    };
    if (norm == GraphNorm::Box) {
        add_linear(a.a.time - b.a.time, a.b.time - a.a.time, -(b.b.time - b.a.time));
        if (d == 1) {
            add_linear(a.a.value[0] - b.a.value[0], a.b.value[0] - a.a.value[0], -(b.b.value[0] - b.a.value[0]));
            if (poly.empty()) return std::nullopt;
            double smin = kInf, smax = -kInf;
            for (const auto& v : poly) {
                smin = std::min(smin, v[0]);
                smax = std::max(smax, v[0]);
            }
            return std::make_pair(std::max(smin, 0.0), std::min(smax, 1.0));
        }
        Affine q;
        q.u.resize(d), q.alpha.resize(d), q.beta.resize(d);
        for (std::size_t k = 0; k < d; ++k) {
            q.u[k] = a.a.value[k] - b.a.value[k];
            q.alpha[k] = a.b.value[k] - a.a.value[k];
            q.beta[k] = b.b.value[k] - b.a.value[k];
        }
        return quadratic_range(poly, planes, q, eps);
    }
    Affine q;
    q.u.resize(d + 1), q.alpha.resize(d + 1), q.beta.resize(d + 1);
    for (std::size_t k = 0; k < d; ++k) {
        q.u[k] = a.a.value[k] - b.a.value[k];
        q.alpha[k] = a.b.value[k] - a.a.value[k];
        q.beta[k] = b.b.value[k] - b.a.value[k];
    }
    q.u[d] = a.a.time - b.a.time;
    q.alpha[d] = a.b.time - a.a.time;
    q.beta[d] = b.b.time - b.a.time;
    return quadratic_range(poly, planes, q, eps);
}

struct SegmentSet {
    std::vector<Segment> segs;
    std::vector<double> tmin, tmax;
    bool sorted = true;

    explicit SegmentSet(const PolygonalGraph& g) : segs(g.segments()) {
        for (const auto& s : segs) {
            tmin.push_back(std::min(s.a.time, s.b.time));
            tmax.push_back(std::max(s.a.time, s.b.time));
        }
        for (std::size_t i = 1; i < segs.size(); ++i)
            if (tmin[i] < tmin[i - 1] || tmax[i] < tmax[i - 1]) sorted = false;
    }

    // Index range of segments whose time span meets [lo, hi].
    std::pair<std::size_t, std::size_t> candidates(double lo, double hi) const {
        if (!sorted) return {0, segs.size()};
        const auto first = std::lower_bound(tmax.begin(), tmax.end(), lo) - tmax.begin();
        const auto last = std::upper_bound(tmin.begin(), tmin.end(), hi) - tmin.begin();
        return {static_cast<std::size_t>(first), static_cast<std::size_t>(std::max(first, last))};
    }
};

struct Uncovered {
    std::size_t segment = 0;
    double s = 0.0;
};

// Is every point of A within eps of B? On failure reports an uncovered point.
bool directed_within(const SegmentSet& A, const SegmentSet& B, double eps, GraphNorm norm, Uncovered* miss) {
    std::vector<std::pair<double, double>> spans;
    for (std::size_t ia = 0; ia < A.segs.size(); ++ia) {
        const Segment& a = A.segs[ia];
        const auto [first, last] = B.candidates(A.tmin[ia] - eps, A.tmax[ia] + eps);
        spans.clear();
        bool full = false;
        for (std::size_t ib = first; ib < last && !full; ++ib) {
            const auto iv = covered(a, B.segs[ib], eps, norm);
            if (!iv) continue;
            if (iv->first <= 0.0 && iv->second >= 1.0) full = true;
            spans.push_back(*iv);
        }
        if (full) continue;
        std::sort(spans.begin(), spans.end());
        double reach = 0.0;
        bool started = false;
        bool ok = false;
        for (const auto& [lo, hi] : spans) {
            if (lo > reach || (!started && lo > 0.0)) break;
            started = true;
            reach = std::max(reach, hi);
            if (reach >= 1.0) {
                ok = true;
                break;
            }
        }
        if (!ok) {
            if (miss) {
                miss->segment = ia;
                double next = 1.0;
                for (const auto& sp : spans)
                    if (sp.first > reach || (!started && sp.first > 0.0)) {
                        next = sp.first;
                        break;
                    }
                miss->s = started ? reach + (next - reach) / 2 : next / 2;
            }
            return false;
        }
    }
    return true;
}

GraphPoint point_on(const Segment& s, double r) {
    return {lerp(s.a.value, s.b.value, r), s.a.time + r * (s.b.time - s.a.time)};
}

std::pair<double, GraphPoint> nearest_on_segment(const GraphPoint& p, const Segment& s, GraphNorm norm) {
    double lo = 0.0, hi = 1.0;
    for (int it = 0; it < 200 && hi - lo > 1e-17; ++it) {
        const double m1 = lo + (hi - lo) / 3;
        const double m2 = hi - (hi - lo) / 3;
        if (graph_distance(p, point_on(s, m1), norm) <= graph_distance(p, point_on(s, m2), norm)) hi = m2;
        else lo = m1;
    }
    std::pair<double, GraphPoint> best{kInf, s.a};
    for (double r : {0.0, 1.0, lo + (hi - lo) / 2}) {
        const GraphPoint q = point_on(s, r);
        const double dist = graph_distance(p, q, norm);
        if (dist < best.first) best = {dist, q};
    }
    return best;
}

std::pair<double, GraphPoint> nearest_on(const GraphPoint& p, const std::vector<Segment>& segs, GraphNorm norm) {
    std::pair<double, GraphPoint> best{kInf, p};
    for (const auto& s : segs) {
        auto c = nearest_on_segment(p, s, norm);
        if (c.first < best.first) best = std::move(c);
    }
    return best;
}

double spatial_extent(const PolygonalGraph& a, const PolygonalGraph& b) {
    const std::size_t d = a.vertices().front().value.size();
    std::vector<double> lo(d, kInf), hi(d, -kInf);
    for (const auto* g : {&a, &b})
        for (const auto& v : g->vertices())
            for (std::size_t k = 0; k < d; ++k) {
                lo[k] = std::min(lo[k], v.value[k]);
                hi[k] = std::max(hi[k], v.value[k]);
            }
    double s = 0.0;
    for (std::size_t k = 0; k < d; ++k) s += (hi[k] - lo[k]) * (hi[k] - lo[k]);
    return std::sqrt(s);
}

}  // namespace

double point_to_graph(const GraphPoint& p, const PolygonalGraph& g, GraphNorm norm) {
    return nearest_on(p, g.segments(), norm).first;
}

HausdorffResult hausdorff(const PolygonalGraph& a, const PolygonalGraph& b, GraphNorm norm) {
    if (a.vertices().front().value.size() != b.vertices().front().value.size())
        throw std::invalid_argument("graphs of different dimension");
    HausdorffResult out;
    out.witness = {a.vertices().front(), a.vertices().front()};
    if (a.vertices() == b.vertices() && a.kind() == b.kind()) return out;

    const SegmentSet sa(a), sb(b);
    auto feasible = [&](double eps) {
        return directed_within(sa, sb, eps, norm, nullptr) && directed_within(sb, sa, eps, norm, nullptr);
    };
    if (feasible(0.0)) return out;

    double lo = 0.0;
    double hi = spatial_extent(a, b) + 1.0;
    for (int it = 0; it < 2000; ++it) {
        const double mid = lo + (hi - lo) / 2;
        if (mid <= lo || mid >= hi) break;
        if (feasible(mid)) hi = mid;
        else lo = mid;
    }
    out.value = hi;

    Uncovered miss;
    if (!directed_within(sa, sb, lo, norm, &miss)) {
        const GraphPoint p = point_on(sa.segs[miss.segment], miss.s);
        out.witness = {p, nearest_on(p, sb.segs, norm).second};
    } else if (!directed_within(sb, sa, lo, norm, &miss)) {
        const GraphPoint p = point_on(sb.segs[miss.segment], miss.s);
        out.witness = {nearest_on(p, sa.segs, norm).second, p};
    }
    return out;
}

namespace {

void check_pair(const CadlagFunction& f, const CadlagFunction& g) {
    if (f.dimension() != g.dimension()) throw std::invalid_argument("functions of different dimension");
}

DistanceResult from_hausdorff(Topology t, const HausdorffResult& h) {
    DistanceResult r;
    r.topology = t;
    r.value = h.value;
    r.lower_bound = h.value;
    r.pairs.push_back(h.witness);
    return r;
}

// ---------------------------------------------------------------------------
// J1 for step functions.

struct Interval {
    double lo = 0.0, hi = 0.0;
    bool lo_open = false, hi_open = false;
    // The run of compatible g-pieces this interval lies in.
    double run_end = 0.0;
    bool run_last = false;

    bool empty() const { return lo > hi || (lo == hi && (lo_open || hi_open)); }
};

Interval intersect(const Interval& a, const Interval& b) {
    Interval r = a;
    if (b.lo > a.lo) r.lo = b.lo, r.lo_open = b.lo_open;
    else if (b.lo == a.lo) r.lo_open = a.lo_open || b.lo_open;
    if (b.hi < a.hi) r.hi = b.hi, r.hi_open = b.hi_open;
    else if (b.hi == a.hi) r.hi_open = a.hi_open || b.hi_open;
    return r;
}

struct Run {
    double start, end;
    bool last;
};

class StepJ1 {
public:
    StepJ1(const CadlagFunction& f, const CadlagFunction& g) : f_(f), g_(g) {}

    std::vector<Run> runs(const Point& v, double eps) const {
        std::vector<Run> out;
        const std::size_t p = g_.piece_count();
        std::size_t i = 0;
        while (i < p) {
            if (distance(v, g_.pieces()[i].start) > eps) {
                ++i;
                continue;
            }
            std::size_t k = i;
            while (k + 1 < p && distance(v, g_.pieces()[k + 1].start) <= eps) ++k;
            out.push_back({g_.piece_start(i), g_.piece_end(k), k + 1 == p});
            i = k + 1;
        }
        return out;
    }

    // Feasible positions of each tau_j, or empty on infeasibility.
    std::vector<std::vector<Interval>> reachable(double eps) const {
        const std::size_t m = f_.piece_count();
        std::vector<std::vector<Interval>> S(m);
        const auto r0 = runs(f_.pieces()[0].start, eps);
        if (r0.empty() || r0.front().start != 0.0) return {};
        S[0].push_back({0.0, 0.0, false, false, r0.front().end, r0.front().last});

        for (std::size_t j = 0; j + 1 < m; ++j) {
            const double s = f_.piece_start(j + 1);
            const Interval window{s - eps, s + eps, false, false};
            const Interval unit{0.0, 1.0, false, true};
            std::vector<Interval> reach;
            for (std::size_t q = 0; q < S[j].size();) {
                std::size_t e = q;
                while (e + 1 < S[j].size() && S[j][e + 1].run_end == S[j][q].run_end) ++e;
                Interval r{S[j][q].lo, S[j][q].run_end, true, false};
                r = intersect(intersect(r, window), unit);
                if (!r.empty()) reach.push_back(r);
                q = e + 1;
            }
            const auto next = runs(f_.pieces()[j + 1].start, eps);
            std::size_t a = 0, b = 0;
            while (a < reach.size() && b < next.size()) {
                Interval run{next[b].start, next[b].end, false, true, next[b].end, next[b].last};
                Interval x = intersect(run, reach[a]);
                x.run_end = next[b].end;
                x.run_last = next[b].last;
                if (!x.empty()) S[j + 1].push_back(x);
                if (reach[a].hi < next[b].end) ++a;
                else ++b;
            }
            if (S[j + 1].empty()) return {};
        }
        const bool done = std::any_of(S[m - 1].begin(), S[m - 1].end(), [](const Interval& x) { return x.run_last; });
        if (!done) return {};
        return S;
    }

    bool feasible(double eps) const { return !reachable(eps).empty(); }

    TimeChange certificate(double eps) const {
        const auto S = reachable(eps);
        if (S.empty()) throw std::logic_error("certificate requested at an infeasible level");
        const std::size_t m = f_.piece_count();
        std::vector<double> tau(m, 0.0);
        // Long chains can share one lower end, so tau_j sits at fraction
        // j / (j + 1) of its room; the chain then spreads evenly instead of
        // halving towards the lower end.
        auto interior = [](const Interval& x, double cap, std::size_t j) {
            const double hi = std::min(x.hi, cap);
            if (hi <= x.lo) return x.lo;
            return x.lo + (hi - x.lo) * (static_cast<double>(j) / static_cast<double>(j + 1));
        };
        const Interval* pick = nullptr;
        for (const auto& x : S[m - 1])
            if (x.run_last) {
                pick = &x;
                break;
            }
        tau[m - 1] = m == 1 ? 0.0 : interior(*pick, kInf, 1);
        for (std::size_t j = m - 1; j-- > 1;) {
            const double next = tau[j + 1];
            double best = -1.0;
            for (const auto& x : S[j]) {
                if (x.run_end < next || x.lo >= next) continue;
                best = interior(x, next, j);
                if (best < next && (best > x.lo || !x.lo_open)) break;
                best = -1.0;
            }
            if (!(best >= 0.0 && best < next)) throw std::logic_error("J1 certificate reconstruction failed");
            tau[j] = best;
        }
        std::vector<std::array<double, 2>> knots;
        knots.reserve(m + 1);
        for (std::size_t j = 0; j < m; ++j) knots.push_back({tau[j], f_.piece_start(j)});
        knots.push_back({1.0, 1.0});
        return TimeChange(std::move(knots));
    }

    std::vector<double> critical_values(double cap) const {
        std::vector<double> c{0.0};
        std::vector<double> us = g_.breakpoints();
        us.push_back(1.0);
        for (std::size_t j = 0; j < f_.piece_count(); ++j) {
            for (const auto& w : g_.pieces()) c.push_back(distance(f_.pieces()[j].start, w.start));
            for (double u : us) c.push_back(std::abs(u - f_.piece_start(j)));
        }
        std::sort(c.begin(), c.end());
        c.erase(std::unique(c.begin(), c.end()), c.end());
        c.erase(std::upper_bound(c.begin(), c.end(), cap), c.end());
        return c;
    }

private:
    const CadlagFunction& f_;
    const CadlagFunction& g_;
};

DistanceResult j1_steps(const CadlagFunction& f, const CadlagFunction& g, double tolerance) {
    const double cap = sup_distance(f, g);
    StepJ1 solver(f, g);
    const auto c = solver.critical_values(cap);
    auto probe = [&](std::size_t k) {
        return k + 1 < c.size() ? c[k] + (c[k + 1] - c[k]) / 2 : c[k] + std::max(1.0, c[k]);
    };
    std::size_t lo = 0, hi = c.size() - 1;
    while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        if (solver.feasible(probe(mid))) hi = mid;
        else lo = mid + 1;
    }
    DistanceResult r;
    r.topology = Topology::J1;
    r.value = c[lo];
    r.lower_bound = c[lo];
    const double gap = lo + 1 < c.size() ? (c[lo + 1] - c[lo]) / 2 : tolerance;
    r.time_change = solver.certificate(c[lo] + std::min(tolerance, gap));
    return r;
}

// ---------------------------------------------------------------------------
// J1 upper bound for functions with linear pieces.

double segment_cost(const CadlagFunction& f, const CadlagFunction& g, double x0, double x1, double y0, double y1) {
    const auto lam = [&](double t) { return y0 + (t - x0) * (y1 - y0) / (x1 - x0); };
    std::vector<double> cuts{x0, x1};
    for (double b : g.breakpoints())
        if (b > x0 && b < x1) cuts.push_back(b);
    for (double b : f.breakpoints())
        if (b > y0 && b < y1) cuts.push_back(x0 + (b - y0) * (x1 - x0) / (y1 - y0));
    std::sort(cuts.begin(), cuts.end());
    double sup = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double a = cuts[i], b = cuts[i + 1];
        if (!(b > a)) continue;
        const double mid = a + (b - a) / 2;
        const std::size_t jg = g.piece_index(mid);
        const std::size_t jf = f.piece_index(lam(mid));
        sup = std::max(sup, distance(f.piece_value(jf, lam(a)), g.piece_value(jg, a)));
        sup = std::max(sup, distance(f.piece_value(jf, lam(b)), g.piece_value(jg, b)));
    }
    return std::max({sup, std::abs(y0 - x0), std::abs(y1 - x1)});
}

DistanceResult j1_linear(const CadlagFunction& f, const CadlagFunction& g) {
    DistanceResult r;
    r.topology = Topology::J1;
    r.exactness = Exactness::UpperBound;
    r.value = sup_distance(f, g);
    r.time_change = TimeChange::identity();
    r.lower_bound = d_j2(f, g).value;

    std::vector<double> z;
    std::merge(f.breakpoints().begin(), f.breakpoints().end(), g.breakpoints().begin(), g.breakpoints().end(),
               std::back_inserter(z));
    z.push_back(1.0);
    z.erase(std::unique(z.begin(), z.end()), z.end());
    const std::size_t n = z.size();
    if (n > 2048) return r;

    std::vector<double> best(n * n, kInf);
    std::vector<std::uint32_t> pred(n * n, 0);
    best[0] = 0.0;
    const std::array<std::array<std::size_t, 2>, 3> moves{{{1, 1}, {1, 2}, {2, 1}}};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const double here = best[i * n + k];
            if (here >= r.value) continue;
            for (const auto& mv : moves) {
                const std::size_t i2 = i + mv[0], k2 = k + mv[1];
                if (i2 >= n || k2 >= n) continue;
                if (std::abs(z[i2] - z[k2]) >= r.value) continue;
                const double c = std::max(here, segment_cost(f, g, z[i], z[i2], z[k], z[k2]));
                if (c < best[i2 * n + k2]) {
                    best[i2 * n + k2] = c;
                    pred[i2 * n + k2] = static_cast<std::uint32_t>(i * n + k);
                }
            }
        }
    const double found = best[n * n - 1];
    if (!(found < r.value)) return r;
    std::vector<std::array<double, 2>> knots;
    for (std::size_t cell = n * n - 1;; cell = pred[cell]) {
        knots.push_back({z[cell / n], z[cell % n]});
        if (cell == 0) break;
    }
    std::reverse(knots.begin(), knots.end());
    r.value = found;
    r.time_change = TimeChange(std::move(knots));
    return r;
}

// ---------------------------------------------------------------------------
// M1: discrete monotone matching.

std::vector<GraphPoint> densify(const std::vector<GraphPoint>& v, double unit, int refinement) {
    std::vector<GraphPoint> out{v.front()};
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        const double len = box_distance(v[i], v[i + 1]);
        const auto parts = static_cast<std::size_t>(refinement) *
                           static_cast<std::size_t>(std::max(1.0, std::ceil(len / unit)));
        for (std::size_t k = 1; k <= parts; ++k) {
            const double a = static_cast<double>(k) / static_cast<double>(parts);
            if (k == parts) out.push_back(v[i + 1]);
            else out.push_back({lerp(v[i].value, v[i + 1].value, a), v[i].time + a * (v[i + 1].time - v[i].time)});
        }
    }
    return out;
}

}  // namespace

DistanceResult d_j2(const CadlagFunction& f, const CadlagFunction& g, GraphNorm norm) {
    check_pair(f, g);
    return from_hausdorff(Topology::J2, hausdorff(incomplete_graph(f), incomplete_graph(g), norm));
}

DistanceResult d_m2(const CadlagFunction& f, const CadlagFunction& g, GraphNorm norm) {
    check_pair(f, g);
    return from_hausdorff(Topology::M2, hausdorff(completed_graph(f), completed_graph(g), norm));
}

DistanceResult d_j1(const CadlagFunction& f, const CadlagFunction& g, double tolerance) {
    check_pair(f, g);
    if (!(tolerance > 0.0)) throw std::invalid_argument("tolerance must be positive");
    if (f == g) {
        DistanceResult r;
        r.time_change = TimeChange::identity();
        return r;
    }
    if (f.is_piecewise_constant() && g.is_piecewise_constant()) return j1_steps(f, g, tolerance);
    return j1_linear(f, g);
}

DistanceResult d_m1_upper(const CadlagFunction& f, const CadlagFunction& g, int refinement) {
    check_pair(f, g);
    if (refinement < 1) throw std::invalid_argument("refinement must be at least 1");
    DistanceResult r;
    r.topology = Topology::M1;
    r.exactness = Exactness::UpperBound;
    if (f == g) {
        r.exactness = Exactness::Exact;
        return r;
    }
    const auto va = completed_graph(f).vertices();
    const auto vb = completed_graph(g).vertices();
    double total = 0.0;
    for (const auto* v : {&va, &vb})
        for (std::size_t i = 0; i + 1 < v->size(); ++i) total += box_distance((*v)[i], (*v)[i + 1]);
    const double unit = total / 1024.0;
    const auto P = densify(va, unit, refinement);
    const auto Q = densify(vb, unit, refinement);
    const std::size_t n1 = P.size(), n2 = Q.size();
    if (n1 * n2 > 40'000'000) throw std::length_error("matching grid too large; lower the refinement");

    std::vector<double> dp(n1 * n2);
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t k = 0; k < n2; ++k) {
            const double here = box_distance(P[i], Q[k]);
            double prev;
            if (i == 0 && k == 0) prev = 0.0;
            else if (i == 0) prev = dp[k - 1];
            else if (k == 0) prev = dp[(i - 1) * n2];
            else prev = std::min({dp[(i - 1) * n2 + k], dp[i * n2 + k - 1], dp[(i - 1) * n2 + k - 1]});
            dp[i * n2 + k] = std::max(here, prev);
        }
    r.value = dp.back();

    std::size_t i = n1 - 1, k = n2 - 1;
    r.pairs.push_back({P[i], Q[k]});
    while (i > 0 || k > 0) {
        if (i == 0) --k;
        else if (k == 0) --i;
        else {
            const double a = dp[(i - 1) * n2 + k - 1], b = dp[(i - 1) * n2 + k], c = dp[i * n2 + k - 1];
            if (a <= b && a <= c) --i, --k;
            else if (b <= c) --i;
            else --k;
        }
        r.pairs.push_back({P[i], Q[k]});
    }
    std::reverse(r.pairs.begin(), r.pairs.end());

    r.lower_bound = d_m2(f, g).value;
    if (r.lower_bound > r.value) r.value = r.lower_bound;
    return r;
}

DistanceResult distance(Topology topology, const CadlagFunction& f, const CadlagFunction& g,
                        const MetricOptions& opts) {
    switch (topology) {
        case Topology::J1: return d_j1(f, g, opts.tolerance);
        case Topology::J2: return d_j2(f, g, opts.norm);
        case Topology::M1: return d_m1_upper(f, g, opts.refinement);
        case Topology::M2: return d_m2(f, g, opts.norm);
    }
    throw std::invalid_argument("unknown topology");
}

double j1_objective(const CadlagFunction& f, const CadlagFunction& g, const TimeChange& lambda) {
    return std::max(sup_distance(compose(f, lambda), g), lambda.sup_deviation());
}

}  // namespace skorokhod
