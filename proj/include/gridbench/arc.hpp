#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <utility>
#include <vector>

#include "gridbench/errors.hpp"
#include "gridbench/grid.hpp"

namespace gridbench {

inline constexpr int kArcMaxSide = 30;
inline constexpr CellValue kArcMaxValue = 9;

/// A task in the public ARC layout: train and test arrays of input/output
/// grid pairs, values 0..9, sides up to 30.
struct ArcTask {
    std::string task_id;
    std::vector<std::pair<Grid, Grid>> train;
    std::vector<std::pair<Grid, Grid>> test;
};

/// Ordered predictions per test input; inner lists stay within the
/// protocol's attempt budget.
using AttemptSet = std::vector<std::vector<Grid>>;

namespace detail_arc {

inline Grid grid_from_json_value(const nlohmann::json& j) {
    if (!j.is_array() || j.empty()) throw DataError("grid must be a nonempty array");
    const int rows = static_cast<int>(j.size());
    int cols = -1;
    std::vector<CellValue> cells;
    std::size_t row_index = 0;
    for (const auto& row : j) {
        if (!row.is_array() || row.empty()) throw DataError("grid row must be a nonempty array");
        if (cols < 0)
            cols = static_cast<int>(row.size());
        else if (static_cast<int>(row.size()) != cols)
            throw RaggedRows(row_index);
        for (const auto& v : row) {
            if (!v.is_number_integer()) throw DataError("grid cells must be integers");
            const long long value = v.get<long long>();
            if (value < 0 || value > kArcMaxValue) throw ValueOutOfRange(value);
            cells.push_back(static_cast<CellValue>(value));
        }
        ++row_index;
    }
    if (rows > kArcMaxSide || cols > kArcMaxSide)
        throw GridOutOfBounds("grid exceeds 30x30");
    return Grid(rows, cols, std::move(cells));
}

inline nlohmann::json grid_to_json_value(const Grid& g) {
    nlohmann::json out = nlohmann::json::array();
    for (int r = 0; r < g.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (int c = 0; c < g.cols(); ++c) row.push_back(static_cast<int>(g.at(r, c)));
        out.push_back(std::move(row));
    }
    return out;
}

inline std::vector<std::pair<Grid, Grid>> pairs_from_json(const nlohmann::json& j) {
    std::vector<std::pair<Grid, Grid>> out;
    for (const auto& entry : j) {
        if (!entry.contains("input") || !entry.contains("output"))
            throw DataError("pair needs 'input' and 'output'");
        out.emplace_back(grid_from_json_value(entry.at("input")),
                         grid_from_json_value(entry.at("output")));
    }
    return out;
}

}  // namespace detail_arc

inline ArcTask parse_arc_task(const std::string& text, const std::string& task_id = "") {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError(0, "task file is not valid JSON");
    if (!j.contains("train") || !j.contains("test"))
        throw DataError("task file needs 'train' and 'test' arrays");
    ArcTask task;
    task.task_id = task_id;
    task.train = detail_arc::pairs_from_json(j.at("train"));
    task.test = detail_arc::pairs_from_json(j.at("test"));
    if (task.train.empty()) throw DataError("task has no training pairs");
    if (task.test.empty()) throw DataError("task has no test pairs");
    return task;
}

inline std::string arc_task_to_json(const ArcTask& task) {
    nlohmann::json j;
    auto dump_pairs = [](const std::vector<std::pair<Grid, Grid>>& pairs) {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& [in, gold] : pairs)
            out.push_back({{"input", detail_arc::grid_to_json_value(in)},
                           {"output", detail_arc::grid_to_json_value(gold)}});
        return out;
    };
    j["train"] = dump_pairs(task.train);
    j["test"] = dump_pairs(task.test);
    return j.dump();
}

/// Two-attempt protocol: a task counts as solved only when every test
/// input has some attempt that exactly matches its gold output.
inline bool score_arc_two_attempt(const ArcTask& task, const AttemptSet& attempts) {
    if (attempts.size() != task.test.size())
        throw MissingAttempts(attempts.size() < task.test.size() ? attempts.size()
                                                                 : task.test.size());
    for (std::size_t i = 0; i < task.test.size(); ++i) {
        if (attempts[i].empty()) throw MissingAttempts(i);
        if (attempts[i].size() > 2) throw BudgetExceeded("more than two attempts");
    }
    for (std::size_t i = 0; i < task.test.size(); ++i) {
        bool hit = false;
        for (const Grid& attempt : attempts[i])
            if (grids_equal(attempt, task.test[i].second)) {
                hit = true;
                break;
            }
        if (!hit) return false;
    }
    return true;
}

/// Three-attempt protocol: each test input is solved independently when any
/// attempt matches. Returns one flag per test input.
inline std::vector<bool> score_conceptarc(const ArcTask& task, const AttemptSet& attempts,
                                          int budget = 3) {
    if (attempts.size() != task.test.size())
        throw MissingAttempts(attempts.size() < task.test.size() ? attempts.size()
                                                                 : task.test.size());
    for (const auto& list : attempts)
        if (static_cast<int>(list.size()) > budget)
            throw BudgetExceeded("more than " + std::to_string(budget) + " attempts");
    std::vector<bool> flags;
    flags.reserve(task.test.size());
    for (std::size_t i = 0; i < task.test.size(); ++i) {
        bool hit = false;
        for (const Grid& attempt : attempts[i])
            if (grids_equal(attempt, task.test[i].second)) {
                hit = true;
                break;
            }
        flags.push_back(hit);
    }
    return flags;
}

struct ConceptRow {
    std::string concept_name;
    int solved = 0;
    int total = 0;

    double accuracy() const { return total == 0 ? 0.0 : static_cast<double>(solved) / total; }
};

struct ConceptReport {
    std::vector<ConceptRow> rows;
    double macro_average = 0.0;
};

/// Per-concept accuracy plus the macro average over concepts.
inline ConceptReport concept_report(
    const std::vector<std::pair<std::string, std::vector<bool>>>& groups) {
    ConceptReport report;
    double sum = 0.0;
    for (const auto& [name, flags] : groups) {
        ConceptRow row;
        row.concept_name = name;
        row.total = static_cast<int>(flags.size());
        for (bool f : flags) row.solved += f ? 1 : 0;
        sum += row.accuracy();
        report.rows.push_back(std::move(row));
    }
    report.macro_average = groups.empty() ? 0.0 : sum / static_cast<double>(groups.size());
    return report;
}

inline std::string concept_report_csv(const ConceptReport& report) {
    std::string out = "concept,solved,total,accuracy\n";
    char buf[64];
    for (const auto& row : report.rows) {
        std::snprintf(buf, sizeof(buf), "%s,%d,%d,%.4f\n", row.concept_name.c_str(), row.solved,
                      row.total, row.accuracy());
        out += buf;
    }
    std::snprintf(buf, sizeof(buf), "average,,,%.4f\n", report.macro_average);
    out += buf;
    return out;
}

inline std::string concept_report_json(const ConceptReport& report) {
    nlohmann::json j;
    auto& rows = j["concepts"] = nlohmann::json::array();
    for (const auto& row : report.rows)
        rows.push_back({{"concept", row.concept_name},
                        {"solved", row.solved},
                        {"total", row.total},
                        {"accuracy", row.accuracy()}});
    j["macro_average"] = report.macro_average;
    return j.dump(2) + "\n";
}

}  // namespace gridbench
