#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "skorokhod/point.hpp"

namespace skorokhod {

/// Result of a left-limit query. `degenerate` is set for t = 0, where the
/// left limit is not defined and f(0) is returned instead.
struct LeftLimit {
    Point value;
    bool degenerate = false;
};

/// A right-continuous function on [0,1] with finitely many breakpoints,
/// left continuous at 1. Piece i covers [breakpoints[i], breakpoints[i+1])
/// (the last piece covers [breakpoints.back(), 1]) and is either constant or
/// linear from `start` to the left limit `end` at the right end of the piece.
///
/// Construction canonicalizes: linear pieces with equal endpoints become
/// constant, and adjacent constant pieces with equal values are merged.
class CadlagFunction {
public:
    struct Piece {
        Point start;
        Point end;
        bool linear = false;

        static Piece constant(Point v) { return Piece{v, std::move(v), false}; }
        static Piece ramp(Point from, Point to) { return Piece{std::move(from), std::move(to), true}; }

        friend bool operator==(const Piece&, const Piece&) = default;
    };

    CadlagFunction(std::size_t dimension, std::vector<double> breakpoints, std::vector<Piece> pieces);

    /// Piecewise-constant function with `values[i]` on piece i.
    static CadlagFunction step(std::vector<double> breakpoints, std::vector<Point> values);
    static CadlagFunction scalar_step(std::vector<double> breakpoints, const std::vector<double>& values);
    static CadlagFunction constant(Point value);
    /// The scalar indicator 1_{[a,1]}, for a in (0,1).
    static CadlagFunction indicator(double a);
    /// Scalar linear function from `from` at 0 to `to` at 1.
    static CadlagFunction ramp(double from, double to);

    std::size_t dimension() const { return dimension_; }
    std::size_t piece_count() const { return pieces_.size(); }
    const std::vector<double>& breakpoints() const { return breakpoints_; }
    const std::vector<Piece>& pieces() const { return pieces_; }
    double piece_start(std::size_t i) const { return breakpoints_[i]; }
    double piece_end(std::size_t i) const {
        return i + 1 < breakpoints_.size() ? breakpoints_[i + 1] : 1.0;
    }

    /// Index of the piece containing t (largest i with breakpoints[i] <= t).
    std::size_t piece_index(double t) const;

    /// Value of piece i at time t, for t in the closure of that piece.
    Point piece_value(std::size_t i, double t) const;

    Point evaluate(double t) const;
    Point operator()(double t) const { return evaluate(t); }
    LeftLimit left_limit(double t) const;
    const Point& terminal_value() const { return pieces_.back().end; }

    bool is_piecewise_constant() const;
    /// Largest |slope| over linear pieces (0 for step functions).
    double max_slope() const;

    friend bool operator==(const CadlagFunction&, const CadlagFunction&) = default;

private:
    std::size_t dimension_;
    std::vector<double> breakpoints_;
    std::vector<Piece> pieces_;
};

/// A point (z, t) of R^d x [0,1].
struct GraphPoint {
    Point value;
    double time = 0.0;

    friend bool operator==(const GraphPoint&, const GraphPoint&) = default;
};

/// Box-norm distance |x - y| v |t - s| between graph points.
inline double box_distance(const GraphPoint& a, const GraphPoint& b) {
    return std::max(distance(a.value, b.value), std::abs(a.time - b.time));
}

struct Segment {
    GraphPoint a;
    GraphPoint b;
};

enum class GraphKind { Incomplete, Completed };

/// Ordered polyline in R^d x [0,1]. In a completed graph every pair of
/// consecutive vertices is joined by a segment. In an incomplete graph only
/// vertices with distinct times are joined, so jump pairs (f(t-),t), (f(t),t)
/// stay disconnected.
class PolygonalGraph {
public:
    PolygonalGraph(std::vector<GraphPoint> vertices, GraphKind kind);

    const std::vector<GraphPoint>& vertices() const { return vertices_; }
    GraphKind kind() const { return kind_; }
    bool linked(std::size_t i) const;
    std::vector<Segment> segments() const;

private:
    std::vector<GraphPoint> vertices_;
    GraphKind kind_;
};

PolygonalGraph incomplete_graph(const CadlagFunction& f);
PolygonalGraph completed_graph(const CadlagFunction& f);

/// True when the vertices are nondecreasing in the graph order of f:
/// by time, and at equal times by distance from f(t-).
bool respects_graph_order(const CadlagFunction& f, const PolygonalGraph& graph);

/// True when (z,t) lies on the completed graph of f, up to `tol`.
bool on_completed_graph(const CadlagFunction& f, const GraphPoint& p, double tol = 1e-12);

/// Strictly increasing piecewise-linear bijection of [0,1].
class TimeChange {
public:
    explicit TimeChange(std::vector<std::array<double, 2>> knots);
    static TimeChange identity();

    double operator()(double s) const;
    double inverse(double y) const;
    /// ||lambda - id||_inf, attained at a knot.
    double sup_deviation() const;
    const std::vector<std::array<double, 2>>& knots() const { return knots_; }

private:
    std::vector<std::array<double, 2>> knots_;
};

/// Piecewise-linear parametric representation (u, r) of a completed graph.
struct ParamRep {
    enum class Flavor { Monotone, WeakMonotone };

    std::vector<double> params;
    std::vector<GraphPoint> points;
    Flavor flavor = Flavor::Monotone;

    GraphPoint evaluate(double s) const;
};

/// Monotone representation traversing the graph in order, parametrized
/// proportionally to box-norm arc length.
ParamRep parametric_representation(const PolygonalGraph& completed);

/// t -> eta . f(t).
CadlagFunction project(const CadlagFunction& f, std::span<const double> direction);

/// f restricted to [0,T] and rescaled to [0,1]; the terminal value is f(T-).
CadlagFunction restrict_to(const CadlagFunction& f, double horizon);

/// f o lambda.
CadlagFunction compose(const CadlagFunction& f, const TimeChange& lambda);

/// ||f - g||_inf, exact for piecewise-linear inputs.
double sup_distance(const CadlagFunction& f, const CadlagFunction& g);

}  // namespace skorokhod
