#include "skorokhod/cadlag.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace skorokhod {

namespace {

void check_point(const Point& p, std::size_t dimension, const char* what) {
    if (p.size() != dimension)
        throw std::invalid_argument(std::string(what) + ": dimension mismatch");
    if (!all_finite(p)) throw std::invalid_argument(std::string(what) + ": non-finite value");
}

void check_time(double t) {
    if (!(t >= 0.0 && t <= 1.0)) throw std::out_of_range("time outside [0,1]: " + std::to_string(t));
}

}  // namespace

CadlagFunction::CadlagFunction(std::size_t dimension, std::vector<double> breakpoints,
                               std::vector<Piece> pieces)
    : dimension_(dimension) {
    if (dimension == 0) throw std::invalid_argument("dimension must be positive");
    if (breakpoints.empty() || breakpoints.size() != pieces.size())
        throw std::invalid_argument("need one breakpoint per piece");
    if (breakpoints.front() != 0.0) throw std::invalid_argument("first breakpoint must be 0");
    for (std::size_t i = 0; i < breakpoints.size(); ++i) {
        if (!std::isfinite(breakpoints[i]) || breakpoints[i] >= 1.0)
            throw std::invalid_argument("breakpoints must lie in [0,1)");
        if (i > 0 && !(breakpoints[i] > breakpoints[i - 1]))
            throw std::invalid_argument("breakpoints must be strictly increasing");
        check_point(pieces[i].start, dimension, "piece start");
        check_point(pieces[i].end, dimension, "piece end");
        if (!pieces[i].linear && pieces[i].start != pieces[i].end)
            throw std::invalid_argument("constant piece with distinct endpoints");
    }

    breakpoints_.reserve(breakpoints.size());
    pieces_.reserve(pieces.size());
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        Piece p = std::move(pieces[i]);
        if (p.linear && p.start == p.end) p.linear = false;
        if (!pieces_.empty()) {
            const Piece& prev = pieces_.back();
            if (!prev.linear && !p.linear && prev.start == p.start) continue;
        }
        breakpoints_.push_back(breakpoints[i]);
        pieces_.push_back(std::move(p));
    }
}

CadlagFunction CadlagFunction::step(std::vector<double> breakpoints, std::vector<Point> values) {
    if (values.empty()) throw std::invalid_argument("step function needs at least one value");
    const std::size_t d = values.front().size();
    std::vector<Piece> pieces;
    pieces.reserve(values.size());
    for (auto& v : values) pieces.push_back(Piece::constant(std::move(v)));
    return CadlagFunction(d, std::move(breakpoints), std::move(pieces));
}

CadlagFunction CadlagFunction::scalar_step(std::vector<double> breakpoints,
                                           const std::vector<double>& values) {
    std::vector<Point> pts;
    pts.reserve(values.size());
    for (double v : values) pts.push_back(Point{v});
    return step(std::move(breakpoints), std::move(pts));
}

CadlagFunction CadlagFunction::constant(Point value) {
    const std::size_t d = value.size();
    return CadlagFunction(d, {0.0}, {Piece::constant(std::move(value))});
}

CadlagFunction CadlagFunction::indicator(double a) {
    if (!(a > 0.0 && a < 1.0)) throw std::invalid_argument("indicator jump must lie in (0,1)");
    return scalar_step({0.0, a}, {0.0, 1.0});
}

CadlagFunction CadlagFunction::ramp(double from, double to) {
    return CadlagFunction(1, {0.0}, {Piece::ramp(Point{from}, Point{to})});
}

std::size_t CadlagFunction::piece_index(double t) const {
    auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t);
    return it == breakpoints_.begin() ? 0 : static_cast<std::size_t>(it - breakpoints_.begin()) - 1;
}

Point CadlagFunction::piece_value(std::size_t i, double t) const {
    const Piece& p = pieces_[i];
    if (!p.linear) return p.start;
    const double s = piece_start(i);
    const double e = piece_end(i);
    if (t >= e) return p.end;
    if (t <= s) return p.start;
    return lerp(p.start, p.end, (t - s) / (e - s));
}

Point CadlagFunction::evaluate(double t) const {
    check_time(t);
    if (t == 1.0) return terminal_value();
    return piece_value(piece_index(t), t);
}

LeftLimit CadlagFunction::left_limit(double t) const {
    check_time(t);
    if (t == 0.0) return {evaluate(0.0), true};
    auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), t);
    const auto i = static_cast<std::size_t>(it - breakpoints_.begin()) - 1;
    return {piece_value(i, t), false};
}

bool CadlagFunction::is_piecewise_constant() const {
    return std::none_of(pieces_.begin(), pieces_.end(), [](const Piece& p) { return p.linear; });
}

double CadlagFunction::max_slope() const {
    double slope = 0.0;
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        if (!pieces_[i].linear) continue;
        slope = std::max(slope, distance(pieces_[i].start, pieces_[i].end) / (piece_end(i) - piece_start(i)));
    }
    return slope;
}

// ---------------------------------------------------------------------------
// Graphs

PolygonalGraph::PolygonalGraph(std::vector<GraphPoint> vertices, GraphKind kind)
    : vertices_(std::move(vertices)), kind_(kind) {
    if (vertices_.empty()) throw std::invalid_argument("graph needs at least one vertex");
}

bool PolygonalGraph::linked(std::size_t i) const {
    if (i + 1 >= vertices_.size()) return false;
    if (kind_ == GraphKind::Completed) return true;
    return vertices_[i].time != vertices_[i + 1].time;
}

std::vector<Segment> PolygonalGraph::segments() const {
    std::vector<Segment> out;
    if (vertices_.size() == 1) {
        out.push_back({vertices_[0], vertices_[0]});
        return out;
    }
    out.reserve(vertices_.size() - 1);
    for (std::size_t i = 0; i + 1 < vertices_.size(); ++i)
        if (linked(i)) out.push_back({vertices_[i], vertices_[i + 1]});
    return out;
}

namespace {

std::vector<GraphPoint> graph_vertices(const CadlagFunction& f) {
    std::vector<GraphPoint> verts;
    verts.reserve(2 * f.piece_count());
    auto push = [&verts](GraphPoint p) {
        if (!verts.empty() && verts.back() == p) return;
        verts.push_back(std::move(p));
    };
    for (std::size_t i = 0; i < f.piece_count(); ++i) {
        push({f.pieces()[i].start, f.piece_start(i)});
        push({f.pieces()[i].end, f.piece_end(i)});
    }
    return verts;
}

}  // namespace

PolygonalGraph incomplete_graph(const CadlagFunction& f) {
    return PolygonalGraph(graph_vertices(f), GraphKind::Incomplete);
}

PolygonalGraph completed_graph(const CadlagFunction& f) {
    return PolygonalGraph(graph_vertices(f), GraphKind::Completed);
}

bool respects_graph_order(const CadlagFunction& f, const PolygonalGraph& graph) {
    const auto& v = graph.vertices();
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        if (v[i + 1].time < v[i].time) return false;
        if (v[i + 1].time == v[i].time) {
            const Point base = f.left_limit(v[i].time).value;
            if (distance(base, v[i + 1].value) < distance(base, v[i].value)) return false;
        }
    }
    return true;
}

bool on_completed_graph(const CadlagFunction& f, const GraphPoint& p, double tol) {
    if (p.time < 0.0 || p.time > 1.0) return false;
    const Point lo = f.left_limit(p.time).value;
    const Point hi = f.evaluate(p.time);
    Point dir(lo.size());
    for (std::size_t k = 0; k < lo.size(); ++k) dir[k] = hi[k] - lo[k];
    const double len2 = dot(dir, dir);
    double a = 0.0;
    if (len2 > 0.0) {
        Point rel(lo.size());
        for (std::size_t k = 0; k < lo.size(); ++k) rel[k] = p.value[k] - lo[k];
        a = std::clamp(dot(rel, dir) / len2, 0.0, 1.0);
    }
    return distance(lerp(lo, hi, a), p.value) <= tol;
}

// ---------------------------------------------------------------------------
// Time changes and parametric representations

TimeChange::TimeChange(std::vector<std::array<double, 2>> knots) : knots_(std::move(knots)) {
    if (knots_.size() < 2) throw std::invalid_argument("time change needs at least two knots");
    if (knots_.front() != std::array<double, 2>{0.0, 0.0} || knots_.back() != std::array<double, 2>{1.0, 1.0})
        throw std::invalid_argument("time change must fix 0 and 1");
    for (std::size_t i = 1; i < knots_.size(); ++i)
        if (!(knots_[i][0] > knots_[i - 1][0]) || !(knots_[i][1] > knots_[i - 1][1]))
            throw std::invalid_argument("time change knots must be strictly increasing");
}

TimeChange TimeChange::identity() { return TimeChange({{0.0, 0.0}, {1.0, 1.0}}); }

namespace {

double interpolate_knots(const std::vector<std::array<double, 2>>& knots, double x, int from, int to) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    auto it = std::upper_bound(knots.begin(), knots.end(), x,
                               [from](double v, const std::array<double, 2>& k) { return v < k[from]; });
    const auto& hi = *it;
    const auto& lo = *(it - 1);
    return lo[to] + (x - lo[from]) * (hi[to] - lo[to]) / (hi[from] - lo[from]);
}

}  // namespace

double TimeChange::operator()(double s) const { return interpolate_knots(knots_, s, 0, 1); }

double TimeChange::inverse(double y) const { return interpolate_knots(knots_, y, 1, 0); }

double TimeChange::sup_deviation() const {
    double d = 0.0;
    for (const auto& k : knots_) d = std::max(d, std::abs(k[1] - k[0]));
    return d;
}

GraphPoint ParamRep::evaluate(double s) const {
    if (points.size() == 1 || s <= params.front()) return points.front();
    if (s >= params.back()) return points.back();
    auto it = std::upper_bound(params.begin(), params.end(), s);
    const auto i = static_cast<std::size_t>(it - params.begin()) - 1;
    const double w = params[i + 1] > params[i] ? (s - params[i]) / (params[i + 1] - params[i]) : 0.0;
    return {lerp(points[i].value, points[i + 1].value, w),
            points[i].time + w * (points[i + 1].time - points[i].time)};
}

ParamRep parametric_representation(const PolygonalGraph& completed) {
    if (completed.kind() != GraphKind::Completed)
        throw std::invalid_argument("parametric representations traverse completed graphs");
    ParamRep rep;
    rep.points = completed.vertices();
    rep.params.assign(rep.points.size(), 0.0);
    double total = 0.0;
    for (std::size_t i = 1; i < rep.points.size(); ++i) {
        total += box_distance(rep.points[i - 1], rep.points[i]);
        rep.params[i] = total;
    }
    for (std::size_t i = 0; i < rep.params.size(); ++i)
        rep.params[i] = total > 0.0 ? rep.params[i] / total
                                    : static_cast<double>(i) / std::max<std::size_t>(1, rep.params.size() - 1);
    rep.params.back() = 1.0;
    return rep;
}

// ---------------------------------------------------------------------------
// Transformations

CadlagFunction project(const CadlagFunction& f, std::span<const double> direction) {
    if (direction.size() != f.dimension()) throw std::invalid_argument("direction dimension mismatch");
    std::vector<CadlagFunction::Piece> pieces;
    pieces.reserve(f.piece_count());
    for (const auto& p : f.pieces())
        pieces.push_back({Point{dot(direction, p.start)}, Point{dot(direction, p.end)}, p.linear});
    return CadlagFunction(1, f.breakpoints(), std::move(pieces));
}

CadlagFunction restrict_to(const CadlagFunction& f, double horizon) {
    if (!(horizon > 0.0 && horizon <= 1.0)) throw std::invalid_argument("restriction horizon must lie in (0,1]");
    if (horizon == 1.0) return f;
    std::vector<double> breaks;
    std::vector<CadlagFunction::Piece> pieces;
    for (std::size_t i = 0; i < f.piece_count() && f.piece_start(i) < horizon; ++i) {
        breaks.push_back(f.piece_start(i) / horizon);
        auto piece = f.pieces()[i];
        if (piece.linear && f.piece_end(i) > horizon) piece.end = f.piece_value(i, horizon);
        pieces.push_back(std::move(piece));
    }
    // Rescaling can round two close breakpoints together or a late one up to 1.
    std::vector<double> kept_breaks;
    std::vector<CadlagFunction::Piece> kept;
    for (std::size_t i = 0; i < breaks.size(); ++i) {
        if (breaks[i] >= 1.0 || (!kept_breaks.empty() && breaks[i] <= kept_breaks.back())) {
            if (!kept.empty()) kept.back().end = pieces[i].end;
            continue;
        }
        kept_breaks.push_back(breaks[i]);
        kept.push_back(std::move(pieces[i]));
    }
    return CadlagFunction(f.dimension(), std::move(kept_breaks), std::move(kept));
}

CadlagFunction compose(const CadlagFunction& f, const TimeChange& lambda) {
    std::vector<double> breaks;
    std::vector<CadlagFunction::Piece> pieces;
    auto emit = [&](double at, CadlagFunction::Piece piece) {
        if (at >= 1.0) return;
        if (!breaks.empty() && at <= breaks.back()) {
            // Zero-length image interval; the later piece wins.
            pieces.back() = std::move(piece);
            return;
        }
        breaks.push_back(at);
        pieces.push_back(std::move(piece));
    };

    for (std::size_t j = 0; j < f.piece_count(); ++j) {
        const double lo = j == 0 ? 0.0 : lambda.inverse(f.piece_start(j));
        const double hi = j + 1 == f.piece_count() ? 1.0 : lambda.inverse(f.piece_end(j));
        const auto& piece = f.pieces()[j];
        if (!piece.linear) {
            emit(lo, piece);
            continue;
        }
        std::vector<double> cuts{lo};
        for (const auto& k : lambda.knots())
            if (k[0] > lo && k[0] < hi) cuts.push_back(k[0]);
        cuts.push_back(hi);
        for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
            const double a = std::clamp(lambda(cuts[c]), f.piece_start(j), f.piece_end(j));
            const double b = std::clamp(lambda(cuts[c + 1]), f.piece_start(j), f.piece_end(j));
            emit(cuts[c], CadlagFunction::Piece::ramp(f.piece_value(j, a), f.piece_value(j, b)));
        }
    }
    return CadlagFunction(f.dimension(), std::move(breaks), std::move(pieces));
}

double sup_distance(const CadlagFunction& f, const CadlagFunction& g) {
    if (f.dimension() != g.dimension()) throw std::invalid_argument("dimension mismatch");
    std::vector<double> cuts;
    cuts.reserve(f.piece_count() + g.piece_count() + 1);
    std::merge(f.breakpoints().begin(), f.breakpoints().end(), g.breakpoints().begin(), g.breakpoints().end(),
               std::back_inserter(cuts));
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    cuts.push_back(1.0);
    double sup = 0.0;
    for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
        const std::size_t i = f.piece_index(cuts[c]);
        const std::size_t k = g.piece_index(cuts[c]);
        sup = std::max(sup, distance(f.piece_value(i, cuts[c]), g.piece_value(k, cuts[c])));
        sup = std::max(sup, distance(f.piece_value(i, cuts[c + 1]), g.piece_value(k, cuts[c + 1])));
    }
    return sup;
}

}  // namespace skorokhod
