#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "skorokhod/cadlag.hpp"
#include "skorokhod/oscillation.hpp"

namespace skorokhod {

/// Norm on R^d x [0,1] used for graph distances.
enum class GraphNorm {
    Box,        ///< |x - y| v |t - s|
    Euclidean,  ///< sqrt(|x - y|^2 + |t - s|^2)
};

double graph_distance(const GraphPoint& a, const GraphPoint& b, GraphNorm norm = GraphNorm::Box);

struct HausdorffResult {
    double value = 0.0;
    /// A point of one graph and its nearest point on the other, at distance
    /// (approximately) `value`.
    std::pair<GraphPoint, GraphPoint> witness;
};

/// Hausdorff distance between the point sets of two polylines. Computed by
/// bisection on an exact-geometry coverage test; the result is the smallest
/// double found feasible.
HausdorffResult hausdorff(const PolygonalGraph& a, const PolygonalGraph& b, GraphNorm norm = GraphNorm::Box);

/// Distance from a point to a polyline.
double point_to_graph(const GraphPoint& p, const PolygonalGraph& g, GraphNorm norm = GraphNorm::Box);

enum class Exactness { Exact, UpperBound };

struct DistanceResult {
    Topology topology = Topology::J1;
    double value = 0.0;
    Exactness exactness = Exactness::Exact;
    /// A proven lower bound. Equal to `value` for exact results.
    double lower_bound = 0.0;
    /// Optimal (or best found) time change, J1 only.
    std::optional<TimeChange> time_change;
    /// Witness pair (J2, M2) or matched pairs of a monotone traversal (M1).
    std::vector<std::pair<GraphPoint, GraphPoint>> pairs;
};

struct MetricOptions {
    double tolerance = 1e-9;
    int refinement = 1;
    GraphNorm norm = GraphNorm::Box;
};

DistanceResult d_j2(const CadlagFunction& f, const CadlagFunction& g, GraphNorm norm = GraphNorm::Box);
DistanceResult d_m2(const CadlagFunction& f, const CadlagFunction& g, GraphNorm norm = GraphNorm::Box);

/// d_J1 = inf over continuous time changes of ||f o lambda - g|| v ||lambda - id||.
/// Exact for piecewise-constant inputs; otherwise an upper bound from a
/// restricted family of time changes.
DistanceResult d_j1(const CadlagFunction& f, const CadlagFunction& g, double tolerance = 1e-9);

/// Upper bound on d_M1 from a discrete monotone matching of the densified
/// completed graphs; `lower_bound` holds d_M2. Nonincreasing when
/// `refinement` is multiplied by an integer.
DistanceResult d_m1_upper(const CadlagFunction& f, const CadlagFunction& g, int refinement = 1);

DistanceResult distance(Topology topology, const CadlagFunction& f, const CadlagFunction& g,
                        const MetricOptions& opts = {});

/// ||f o lambda - g|| v ||lambda - id||, the J1 objective of a given time change.
double j1_objective(const CadlagFunction& f, const CadlagFunction& g, const TimeChange& lambda);

}  // namespace skorokhod
