#include "certinv/report.hpp"

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <system_error>

namespace certinv {

std::string format_number(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (std::isnan(v)) return "nan";
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc{}) throw std::runtime_error("format_number: conversion failed");
    return {buf, ptr};
}

namespace {

std::string cell(const std::optional<double>& v) { return v ? format_number(*v) : std::string{}; }
std::string cell(const std::optional<int>& v) { return v ? std::to_string(*v) : std::string{}; }
std::string cell(const std::optional<bool>& v) { return v ? (*v ? "1" : "0") : std::string{}; }
std::string cell(const std::optional<Gain>& g) {
    if (!g) return {};
    return g->is_infinite() ? "inf" : format_number(g->value());
}

} // namespace

const std::vector<std::string>& trajectory_columns() {
    static const std::vector<std::string> columns{
        "t",          "X",          "U",          "W",      "c",      "w_hat",   "g_policy", "E_policy",
        "b_policy",   "C_H",        "c_hat",      "nominal_lo", "nominal_hi", "q", "lo",   "hi",
        "full",       "empty",      "covered",    "E_inf",  "E_inf_observed", "b_inf"};
    return columns;
}

void write_trajectory_csv(std::ostream& os, const RunResult& result) {
    const auto& cols = trajectory_columns();
    for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
    os << '\n';
    for (const auto& r : result.steps) {
        const bool has_interval = r.interval.has_value();
        const std::vector<std::string> row{
            std::to_string(r.t),
            format_number(r.stock),
            cell(r.order),
            cell(r.demand),
            cell(r.cost),
            cell(r.w_hat),
            cell(r.policy_gain),
            std::to_string(r.policy_errors),
            format_number(r.policy_bound),
            cell(r.horizon_cost),
            cell(r.cost_prediction),
            r.nominal ? format_number(r.nominal->lo) : "",
            r.nominal ? format_number(r.nominal->hi) : "",
            cell(r.q),
            has_interval ? format_number(r.interval->lo) : "",
            has_interval ? format_number(r.interval->hi) : "",
            has_interval ? (r.interval->is_full ? "1" : "0") : "",
            has_interval ? (r.interval->is_empty ? "1" : "0") : "",
            cell(r.covered),
            cell(r.inference_errors),
            cell(r.inference_observed),
            cell(r.inference_bound),
        };
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
        os << '\n';
    }
}

void write_metrics_json(std::ostream& os, const RunResult& result) {
    const auto& s = result.summary;
    nlohmann::ordered_json j;
    j["T"] = s.T;
    j["H"] = s.H;
    j["alpha"] = s.alpha;
    j["beta"] = s.beta;
    j["seed"] = result.config.system.seed;
    j["service_level"] = s.service_level;
    j["critical_events"] = s.critical_events;
    j["coverage"] = s.coverage;
    j["resolved_horizons"] = s.resolved_horizons;
    j["miscoverage_events"] = s.miscoverage_events;
    j["mean_cost"] = s.mean_cost;
    j["max_horizon_cost"] = s.max_horizon_cost;
    j["cost_cap"] = s.cost_cap;
    j["max_E_policy"] = s.max_policy_errors;
    j["max_E_inf"] = s.max_inference_errors;
    j["full_intervals"] = s.full_intervals;
    j["empty_intervals"] = s.empty_intervals;
    j["mean_interval_width"] = s.mean_interval_width;
    j["meets_service_level"] = s.meets_service_level ? 1 : 0;
    j["meets_coverage"] = s.meets_coverage ? 1 : 0;
    j["policy_errors_bounded"] = s.policy_errors_bounded ? 1 : 0;
    j["inference_errors_bounded"] = s.inference_errors_bounded ? 1 : 0;
    j["costs_bounded"] = s.costs_bounded ? 1 : 0;
    os << j.dump(2) << '\n';
}

std::string trajectory_csv(const RunResult& result) {
    std::ostringstream os;
    write_trajectory_csv(os, result);
    return os.str();
}

std::string metrics_json(const RunResult& result) {
    std::ostringstream os;
    write_metrics_json(os, result);
    return os.str();
}

void export_run(const RunResult& result, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    auto write = [&](const std::filesystem::path& p, const std::string& text) {
        std::ofstream out(p, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + p.string());
        out << text;
        if (!out) throw std::runtime_error("failed writing " + p.string());
    };
    write(dir / "trajectory.csv", trajectory_csv(result));
    write(dir / "metrics.json", metrics_json(result));
}

} // namespace certinv
