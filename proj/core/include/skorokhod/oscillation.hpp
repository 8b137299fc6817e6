#pragma once

#include <array>
#include <span>
#include <string_view>

#include "skorokhod/cadlag.hpp"

namespace skorokhod {

enum class Topology { J1, J2, M1, M2 };

std::string_view to_string(Topology t);
/// Parses "j1", "J1", ... ; throws std::invalid_argument otherwise.
Topology parse_topology(std::string_view s);

/// J(x,x1,x2) = |x-x1| ^ |x-x2|
double j_gauge(std::span<const double> x, std::span<const double> x1, std::span<const double> x2);

/// 0 when x lies on the segment [[x1,x2]], otherwise j_gauge.
double m_gauge(std::span<const double> x, std::span<const double> x1, std::span<const double> x2);

enum class TripleFamily { T1, T2 };

/// How T2 treats windows that reach past t. `Strict` keeps t1 < t < t2,
/// so that T2 is a subset of T1. `Literal` uses the two half-windows as
/// they are, even when they contain or cross t.
enum class T2Convention { Strict, Literal };

struct Triple {
    double t = 0.0;
    double t1 = 0.0;
    double t2 = 0.0;
};

struct OscillationOptions {
    T2Convention t2 = T2Convention::Strict;
    /// Sampling resolution in t for functions with linear pieces.
    int resolution = 2048;
};

struct OscillationReport {
    Topology topology = Topology::J1;
    double delta = 0.0;
    double value = 0.0;
    Triple witness;
    bool exact = true;
    /// Upper bound on (true sup - value). Zero when exact; infinite when no
    /// bound is known.
    double error_bound = 0.0;
};

TripleFamily family_of(Topology t);

/// True when (t,t1,t2) belongs to the given triple set.
bool in_triple_set(TripleFamily family, double delta, const Triple& w, T2Convention conv = T2Convention::Strict);

/// Delta_T(delta, f): sup of the J or M gauge over T1(delta) or T2(delta).
/// Exact for piecewise-constant f.
OscillationReport oscillation(Topology topology, double delta, const CadlagFunction& f,
                              const OscillationOptions& opts = {});

/// All four oscillation functions at once, indexed by Topology.
std::array<OscillationReport, 4> oscillation_profile(double delta, const CadlagFunction& f,
                                                     const OscillationOptions& opts = {});

/// sup_{0<t<delta} |f(0)-f(t)| + sup_{1-delta<t<1} |f(1)-f(t)|.
/// delta may be anything in (0,1]; the formula is evaluated as written.
double boundary_oscillation(double delta, const CadlagFunction& f);

}  // namespace skorokhod
