#include "certinv/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace certinv {

namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s;
}

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r\"");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\"");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(trim(field));
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

} // namespace

Elec2Series load_elec2(const std::filesystem::path& path, const std::string& column) {
    std::ifstream in(path);
    if (!in) throw DataFileError("cannot open data file: " + path.string());

    std::string line;
    if (!std::getline(in, line)) throw SchemaError(path.string() + ": missing header row");
    const auto header = split_csv(line);
    const auto wanted = lower(column);
    const auto it = std::find_if(header.begin(), header.end(), [&](const std::string& h) { return lower(h) == wanted; });
    if (it == header.end()) throw SchemaError(path.string() + ": no column named '" + column + "'");
    const auto col = static_cast<std::size_t>(it - header.begin());

    Elec2Series series;
    series.column = *it;
    std::size_t row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (trim(line).empty()) continue;
        const auto fields = split_csv(line);
        if (col >= fields.size())
            throw SchemaError(path.string() + ":" + std::to_string(row) + ": missing column '" + column + "'");
        const std::string& text = fields[col];
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
        if (ec != std::errc{} || ptr != text.data() + text.size())
            throw SchemaError(path.string() + ":" + std::to_string(row) + ": not a number: '" + text + "'");
        if (!(v >= 0.0 && v <= 1.0))
            throw RangeError(path.string() + ":" + std::to_string(row) + ": value " + text + " outside [0, 1]");
        series.values.push_back(v);
    }
    return series;
}

Elec2Windows split_windows(const Elec2Series& series, int T_hist, int T) {
    if (T_hist < 0 || T < 1) throw std::invalid_argument("split_windows: need T_hist >= 0 and T >= 1");
    const auto window = static_cast<std::size_t>(T_hist + T);
    if (series.values.size() < 2 * window)
        throw RangeError("series has " + std::to_string(series.values.size()) + " samples, need at least " +
                         std::to_string(2 * window));
    const auto begin = series.values.begin();
    const auto w = static_cast<long>(window);
    return {{begin, begin + w}, {begin + w, begin + 2 * w}};
}

} // namespace certinv
