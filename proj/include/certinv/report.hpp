#pragma once

#include "certinv/harness.hpp"

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

namespace certinv {

/// Column names of trajectory.csv, in order.
const std::vector<std::string>& trajectory_columns();

/// One row per step t = 0..T; undefined cells are empty, saturated gains
/// print as "inf", flags as 0/1. Numbers use the shortest round-trip form,
/// so equal runs give equal bytes.
void write_trajectory_csv(std::ostream& os, const RunResult& result);

/// Flat key -> number object (flags as 0/1).
void write_metrics_json(std::ostream& os, const RunResult& result);

std::string trajectory_csv(const RunResult& result);
std::string metrics_json(const RunResult& result);

/// Write trajectory.csv and metrics.json into dir (created if missing).
void export_run(const RunResult& result, const std::filesystem::path& dir);

std::string format_number(double v);

} // namespace certinv
