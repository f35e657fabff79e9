#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace certinv {

class DataFileError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SchemaError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class RangeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Normalised half-hourly demand samples.
struct Elec2Series {
    std::vector<double> values;
    std::string column;
    static constexpr int samples_per_day = 48;
};

/// Parse a comma-separated file with a header row and pull one column.
/// Column names match case-insensitively; every value must lie in [0, 1].
Elec2Series load_elec2(const std::filesystem::path& path, const std::string& column = "nswdemand");

struct Elec2Windows {
    std::vector<double> tuning;
    std::vector<double> evaluation;
};

/// First T_hist + T samples for tuning, the next T_hist + T for evaluation.
Elec2Windows split_windows(const Elec2Series& series, int T_hist, int T);

} // namespace certinv
