#pragma once

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdio>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "gridbench/errors.hpp"
#include "gridbench/grid.hpp"

namespace gridbench {

/// One scored prediction. A missing `predicted` records a decode failure,
/// which counts as a mismatch.
struct PredictionRecord {
    std::string instance_id;
    std::optional<Grid> predicted;
    Grid gold;

    bool matches() const { return predicted && grids_equal(*predicted, gold); }
};

/// Fraction of records whose prediction exactly matches the gold grid.
inline double exact_match(const std::vector<PredictionRecord>& records) {
    if (records.empty()) return 0.0;
    int hits = 0;
    for (const auto& r : records) hits += r.matches() ? 1 : 0;
    return static_cast<double>(hits) / static_cast<double>(records.size());
}

struct CurvePoint {
    long n = 0;
    double accuracy = 0.0;
};

/// Accuracy as a function of training-set size for one (task, model) pair.
/// Points are sorted by n; sizes without a measurement are simply absent.
struct Curve {
    std::string task;
    std::string model;
    std::vector<CurvePoint> points;
};

/// Smallest n whose accuracy reaches the threshold (inclusive), if any.
inline std::optional<long> samples_to_threshold(const Curve& curve, double delta) {
    for (const auto& p : curve.points)
        if (p.accuracy >= delta) return p.n;
    return std::nullopt;
}

struct RunRecords {
    std::string task;
    std::string model;
    long n = 0;
    std::vector<PredictionRecord> records;
};

namespace detail_eval {

inline std::vector<Curve> assemble(
    std::map<std::pair<std::string, std::string>, std::map<long, double>>& groups) {
    std::vector<Curve> curves;
    for (auto& [key, points] : groups) {
        Curve c;
        c.task = key.first;
        c.model = key.second;
        for (const auto& [n, acc] : points) c.points.push_back({n, acc});
        curves.push_back(std::move(c));
    }
    return curves;
}

}  // namespace detail_eval

/// Score per group and assemble curves, sorted by task, model, then n.
inline std::vector<Curve> build_curves(const std::vector<RunRecords>& runs) {
    std::map<std::pair<std::string, std::string>, std::map<long, double>> groups;
    for (const auto& run : runs) {
        auto& points = groups[{run.task, run.model}];
        if (!points.emplace(run.n, exact_match(run.records)).second)
            throw DuplicatePoint("duplicate point for " + run.task + "/" + run.model + " at n=" +
                                 std::to_string(run.n));
    }
    return detail_eval::assemble(groups);
}

/// Build curves from precomputed accuracies (task, model, n, accuracy).
inline std::vector<Curve> curves_from_points(
    const std::vector<std::tuple<std::string, std::string, long, double>>& rows) {
    std::map<std::pair<std::string, std::string>, std::map<long, double>> groups;
    for (const auto& [task, model, n, acc] : rows) {
        if (acc < 0.0 || acc > 1.0)
            throw DataError("accuracy " + std::to_string(acc) + " outside [0,1]");
        auto& points = groups[{task, model}];
        if (!points.emplace(n, acc).second)
            throw DuplicatePoint("duplicate point for " + task + "/" + model + " at n=" +
                                 std::to_string(n));
    }
    return detail_eval::assemble(groups);
}

/// Read a curve CSV with header task,model,n,accuracy. Rows whose accuracy
/// field is "-" or empty are absent measurements and are skipped, never
/// treated as zero.
inline std::vector<Curve> curves_from_csv(std::istream& in) {
    std::vector<std::tuple<std::string, std::string, long, double>> rows;
    std::string line;
    bool first = true;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::string field;
        std::istringstream ss(line);
        while (std::getline(ss, field, ',')) fields.push_back(field);
        if (first) {
            first = false;
            if (fields.size() >= 1 && fields[0] == "task") continue;  // header
        }
        if (fields.size() != 4) throw ParseError(line_no, "expected task,model,n,accuracy");
        if (fields[3] == "-" || fields[3].empty()) continue;
        try {
            rows.emplace_back(fields[0], fields[1], std::stol(fields[2]), std::stod(fields[3]));
        } catch (const std::exception&) {
            throw ParseError(line_no, "bad numeric field");
        }
    }
    return curves_from_points(rows);
}

struct ThresholdEntry {
    std::string task;
    std::string model;
    std::optional<long> n;
};

inline std::vector<ThresholdEntry> threshold_table(const std::vector<Curve>& curves,
                                                   double delta) {
    std::vector<ThresholdEntry> out;
    for (const auto& c : curves) out.push_back({c.task, c.model, samples_to_threshold(c, delta)});
    return out;
}

// ---- report emission (stable order, deterministic bytes) ----

inline std::string curves_csv(const std::vector<Curve>& curves) {
    std::string out = "task,model,n,accuracy\n";
    char buf[192];
    for (const auto& c : curves)
        for (const auto& p : c.points) {
            std::snprintf(buf, sizeof(buf), "%s,%s,%ld,%.4f\n", c.task.c_str(), c.model.c_str(),
                          p.n, p.accuracy);
            out += buf;
        }
    return out;
}

inline std::string curves_json(const std::vector<Curve>& curves) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& c : curves) {
        nlohmann::json points = nlohmann::json::array();
        for (const auto& p : c.points) points.push_back({{"n", p.n}, {"accuracy", p.accuracy}});
        j.push_back({{"task", c.task}, {"model", c.model}, {"points", std::move(points)}});
    }
    return j.dump(2) + "\n";
}

inline std::vector<Curve> curves_from_report_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded()) throw DataError("curve report is not valid JSON");
    std::vector<Curve> out;
    for (const auto& entry : j) {
        Curve c;
        c.task = entry.at("task").get<std::string>();
        c.model = entry.at("model").get<std::string>();
        for (const auto& p : entry.at("points"))
            c.points.push_back({p.at("n").get<long>(), p.at("accuracy").get<double>()});
        out.push_back(std::move(c));
    }
    return out;
}

inline std::string thresholds_csv(const std::vector<ThresholdEntry>& table, double delta) {
    char buf[192];
    std::snprintf(buf, sizeof(buf), "task,model,delta,n_to_threshold\n");
    std::string out = buf;
    for (const auto& e : table) {
        if (e.n)
            std::snprintf(buf, sizeof(buf), "%s,%s,%.4f,%ld\n", e.task.c_str(), e.model.c_str(),
                          delta, *e.n);
        else
            std::snprintf(buf, sizeof(buf), "%s,%s,%.4f,-\n", e.task.c_str(), e.model.c_str(),
                          delta);
        out += buf;
    }
    return out;
}

inline std::string thresholds_json(const std::vector<ThresholdEntry>& table, double delta) {
    nlohmann::json j;
    j["delta"] = delta;
    auto& rows = j["rows"] = nlohmann::json::array();
    for (const auto& e : table) {
        nlohmann::json row = {{"task", e.task}, {"model", e.model}};
        if (e.n)
            row["n"] = *e.n;
        else
            row["n"] = nullptr;
        rows.push_back(std::move(row));
    }
    return j.dump(2) + "\n";
}

}  // namespace gridbench
