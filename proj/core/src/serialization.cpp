#include "skorokhod/serialization.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace skorokhod {

using nlohmann::json;

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

namespace {

json number(double v) {
    if (std::isfinite(v)) return v;
    return format_double(v);
}

json point(const Point& p) {
    json a = json::array();
    for (double v : p) a.push_back(v);
    return a;
}

Point read_point(const json& j, std::size_t dimension) {
    if (!j.is_array() || j.size() != dimension) throw std::invalid_argument("expected a point of dimension " + std::to_string(dimension));
    Point p;
    for (const auto& v : j) {
        if (!v.is_number()) throw std::invalid_argument("point coordinates must be numbers");
        p.push_back(v.get<double>());
    }
    return p;
}

json graph_point(const GraphPoint& p) { return {{"value", point(p.value)}, {"time", p.time}}; }

void require_keys(const json& j, std::initializer_list<const char*> allowed, const char* what) {
    if (!j.is_object()) throw std::invalid_argument(std::string(what) + " must be a JSON object");
    for (const auto& [key, _] : j.items()) {
        bool ok = false;
        for (const char* a : allowed) ok = ok || key == a;
        if (!ok) throw std::invalid_argument(std::string("unknown key '") + key + "' in " + what);
    }
}

}  // namespace

json to_json(const CadlagFunction& f) {
    json pieces = json::array();
    for (const auto& p : f.pieces()) {
        if (p.linear)
            pieces.push_back({{"kind", "linear"}, {"start", point(p.start)}, {"end", point(p.end)}});
        else
            pieces.push_back({{"kind", "constant"}, {"value", point(p.start)}});
    }
    return {{"schema", kSchemaVersion},
            {"dimension", f.dimension()},
            {"breakpoints", f.breakpoints()},
            {"pieces", pieces},
            {"terminal", point(f.terminal_value())}};
}

CadlagFunction function_from_json(const json& j) {
    require_keys(j, {"schema", "dimension", "breakpoints", "pieces", "terminal"}, "function");
    if (j.contains("schema") && j.at("schema") != kSchemaVersion) throw std::invalid_argument("unsupported function schema");
    try {
        const auto d = j.at("dimension").get<std::size_t>();
        const auto breaks = j.at("breakpoints").get<std::vector<double>>();
        std::vector<CadlagFunction::Piece> pieces;
        for (const auto& p : j.at("pieces")) {
            const auto kind = p.at("kind").get<std::string>();
            if (kind == "constant") {
                require_keys(p, {"kind", "value"}, "constant piece");
                pieces.push_back(CadlagFunction::Piece::constant(read_point(p.at("value"), d)));
            } else if (kind == "linear") {
                require_keys(p, {"kind", "start", "end"}, "linear piece");
                pieces.push_back(CadlagFunction::Piece::ramp(read_point(p.at("start"), d), read_point(p.at("end"), d)));
            } else {
                throw std::invalid_argument("unknown piece kind '" + kind + "'");
            }
        }
        CadlagFunction f(d, breaks, std::move(pieces));
        if (j.contains("terminal") && read_point(j.at("terminal"), d) != f.terminal_value())
            throw std::invalid_argument("terminal value must equal the left limit at 1");
        return f;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed function JSON: ") + e.what());
    }
}

json to_json(const DistanceResult& r) {
    json pairs = json::array();
    for (const auto& [a, b] : r.pairs) pairs.push_back({graph_point(a), graph_point(b)});
    json out{{"topology", std::string(to_string(r.topology))},
             {"value", number(r.value)},
             {"exactness", r.exactness == Exactness::Exact ? "exact" : "upper-bound"},
             {"lower_bound", number(r.lower_bound)},
             {"pairs", pairs}};
    if (r.time_change) out["time_change"] = r.time_change->knots();
    return out;
}

json to_json(const ConditionEstimate& e) {
    json grid = json::array();
    for (const auto& g : e.grid) grid.push_back(point(g));
    return {{"schema", kSchemaVersion},
            {"condition", e.condition},
            {"kernel", e.kernel},
            {"n", e.n},
            {"epsilon", e.epsilon},
            {"R", e.radius},
            {"h", e.h},
            {"m", e.m},
            {"grid", grid},
            {"probabilities", e.probabilities},
            {"half_widths", e.half_widths},
            {"estimate", e.estimate},
            {"half_width", e.half_width},
            {"confidence", 0.99},
            {"replicas", e.replicas},
            {"seed", e.seed}};
}

json to_json(const ScenarioResult& r) {
    static const char* modes[] = {"reference", "embedding", "markov"};
    json rows = json::array();
    for (const auto& row : r.rows) {
        rows.push_back({{"n", row.n},
                        {"mean", row.mean},
                        {"q50", row.q50},
                        {"q90", row.q90},
                        {"q99", row.q99},
                        {"max", row.max},
                        {"exceedance", row.exceedance},
                        {"half_width", row.half_width},
                        {"bound_mean", row.bound_mean},
                        {"bound_violations", row.bound_violations},
                        {"pass", row.pass}});
    }
    return {{"schema", kSchemaVersion},
            {"kernel", r.kernel},
            {"mode", modes[static_cast<int>(r.mode)]},
            {"embedding", std::string(to_string(r.embedding))},
            {"metric", std::string(to_string(r.metric))},
            {"epsilon", r.epsilon},
            {"rows", rows},
            {"pass", r.pass}};
}

void Table::add(std::vector<Cell> row) {
    if (row.size() != columns_.size()) throw std::invalid_argument("row length does not match the table columns");
    rows_.push_back(std::move(row));
}

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string cell_text(const Table::Cell& c) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::string>) return csv_escape(v);
            else if constexpr (std::is_same_v<T, bool>) return v ? "true" : "false";
            else if constexpr (std::is_same_v<T, double>) return format_double(v);
            else return std::to_string(v);
        },
        c);
}

}  // namespace

std::string Table::to_csv() const {
    std::string out;
    for (std::size_t i = 0; i < columns_.size(); ++i) out += (i ? "," : "") + csv_escape(columns_[i]);
    out += '\n';
    for (const auto& row : rows_) {
        for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + cell_text(row[i]);
        out += '\n';
    }
    return out;
}

json Table::to_json() const {
    json rows = json::array();
    for (const auto& row : rows_) {
        json obj = json::object();
        for (std::size_t i = 0; i < row.size(); ++i) {
            std::visit(
                [&](const auto& v) {
                    using T = std::decay_t<decltype(v)>;
                    if constexpr (std::is_same_v<T, double>) obj[columns_[i]] = number(v);
                    else obj[columns_[i]] = v;
                },
                row[i]);
        }
        rows.push_back(std::move(obj));
    }
    return {{"schema", kSchemaVersion}, {"columns", columns_}, {"rows", rows}};
}

}  // namespace skorokhod
