#include "skorokhod/functionals.hpp"

#include <algorithm>
#include <stdexcept>

namespace skorokhod {

namespace {

void check_window(const Window& w) {
    if (!(0.0 <= w.t1 && w.t1 <= w.t2 && w.t2 <= 1.0)) throw std::invalid_argument("window must satisfy 0 <= t1 <= t2 <= 1");
}

void check_scalar(const CadlagFunction& f) {
    if (f.dimension() != 1) throw std::invalid_argument("expected a scalar function; project first");
}

struct Passage {
    double time = 1.0;
    double value = 0.0;
    bool reached = false;
};

Passage passage(const CadlagFunction& f, double a) {
    for (std::size_t j = 0; j < f.piece_count(); ++j) {
        const auto& p = f.pieces()[j];
        const double s = f.piece_start(j);
        const double from = p.start[0];
        if (from >= a) return {s, from, true};
        if (p.linear && p.end[0] > a) {
            const double e = f.piece_end(j);
            const double t = s + (a - from) / (p.end[0] - from) * (e - s);
            return {std::min(t, e), a, true};
        }
    }
    // Only the terminal value is left; inf is 1 either way.
    if (f.terminal_value()[0] >= a) return {1.0, f.terminal_value()[0], true};
    return {};
}

// Values visited by a monotone piece, starting at `from` (attained) and
// moving towards `to`, which is attained only when `to_attained`.
struct Run {
    double from;
    double to;
    bool to_attained;
};

bool take_low(Run& r, double a) {
    if (r.from <= a) return true;
    if (r.to < a || (r.to_attained && r.to <= a)) {
        r.from = a;
        return true;
    }
    return false;
}

bool take_high(Run& r, double b) {
    if (r.from >= b) return true;
    if (r.to > b || (r.to_attained && r.to >= b)) {
        r.from = b;
        return true;
    }
    return false;
}

}  // namespace

CadlagFunction clamp_extend(const CadlagFunction& f, Window w) {
    check_window(w);
    if (w.t1 == w.t2) return CadlagFunction::constant(f.evaluate(w.t1));
    std::vector<double> breaks;
    std::vector<CadlagFunction::Piece> pieces;
    if (w.t1 > 0.0) {
        breaks.push_back(0.0);
        pieces.push_back(CadlagFunction::Piece::constant(f.evaluate(w.t1)));
    }
    for (std::size_t j = f.piece_index(w.t1); j < f.piece_count() && f.piece_start(j) < w.t2; ++j) {
        const double a = std::max(f.piece_start(j), w.t1);
        const double b = std::min(f.piece_end(j), w.t2);
        auto piece = f.pieces()[j];
        if (piece.linear) piece = CadlagFunction::Piece::ramp(f.piece_value(j, a), f.piece_value(j, b));
        breaks.push_back(a);
        pieces.push_back(std::move(piece));
    }
    if (w.t2 < 1.0) {
        breaks.push_back(w.t2);
        pieces.push_back(CadlagFunction::Piece::constant(f.left_limit(w.t2).value));
    }
    return CadlagFunction(f.dimension(), std::move(breaks), std::move(pieces));
}

double first_passage(const CadlagFunction& f, double a) {
    check_scalar(f);
    return passage(f, a).time;
}

double overshoot(const CadlagFunction& f, Window w, double a) {
    check_scalar(f);
    const auto p = passage(clamp_extend(f, w), a);
    if (!p.reached || p.time >= 1.0) return -1.0;
    return p.value - a;
}

int oscillation_count(const CadlagFunction& f, Window w, Band band) {
    check_scalar(f);
    if (!(band.a < band.b)) throw std::invalid_argument("band requires a < b");
    const CadlagFunction g = clamp_extend(f, w);
    int k = -1;
    bool want_low = true;
    for (std::size_t j = 0; j < g.piece_count(); ++j) {
        const auto& p = g.pieces()[j];
        Run run{p.start[0], p.end[0], !p.linear || j + 1 == g.piece_count()};
        while (want_low ? take_low(run, band.a) : take_high(run, band.b)) {
            ++k;
            want_low = !want_low;
        }
    }
    return std::max(k, 0);
}

std::pair<double, double> interval_extrema(const CadlagFunction& f, Window w) {
    check_scalar(f);
    check_window(w);
    double lo = f.evaluate(w.t1)[0];
    double hi = lo;
    auto visit = [&](double v) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    };
    visit(f.evaluate(w.t2)[0]);
    for (std::size_t j = f.piece_index(w.t1); j < f.piece_count() && f.piece_start(j) <= w.t2; ++j) {
        visit(f.piece_value(j, std::max(f.piece_start(j), w.t1))[0]);
        visit(f.piece_value(j, std::min(f.piece_end(j), w.t2))[0]);
    }
    return {lo, hi};
}

}  // namespace skorokhod
