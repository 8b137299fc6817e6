#pragma once

#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "skorokhod/cadlag.hpp"
#include "skorokhod/markov_lab.hpp"
#include "skorokhod/metrics.hpp"

namespace skorokhod {

inline constexpr int kSchemaVersion = 1;

/// Shortest decimal string that parses back to the same double.
/// Non-finite values print as "inf", "-inf" and "nan".
std::string format_double(double v);

nlohmann::json to_json(const CadlagFunction& f);
/// Inverse of to_json; validates like the constructor does.
CadlagFunction function_from_json(const nlohmann::json& j);

nlohmann::json to_json(const DistanceResult& r);
nlohmann::json to_json(const ConditionEstimate& e);
nlohmann::json to_json(const ScenarioResult& r);

/// A rectangular table rendered as CSV or as JSON records.
class Table {
public:
    using Cell = std::variant<std::string, long long, double, bool>;

    explicit Table(std::vector<std::string> columns) : columns_(std::move(columns)) {}

    /// Appends a row; its length must match the column count.
    void add(std::vector<Cell> row);

    const std::vector<std::string>& columns() const { return columns_; }
    const std::vector<std::vector<Cell>>& rows() const { return rows_; }

    std::string to_csv() const;
    /// {"schema": 1, "columns": [...], "rows": [{...}, ...]}
    nlohmann::json to_json() const;

private:
    std::vector<std::string> columns_;
    std::vector<std::vector<Cell>> rows_;
};

}  // namespace skorokhod
