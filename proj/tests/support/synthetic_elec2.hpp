#pragma once

// Elec2-shaped stand-in: half-hourly samples in [0, 1] with daily and weekly
// cycles, slow drift, noise, and occasional spikes.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <random>
#include <vector>

namespace certinv::fixtures {

inline std::vector<double> synthetic_elec2(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> noise(0.0, 0.03);
    std::bernoulli_distribution spike(0.004);
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double day = 2.0 * M_PI * static_cast<double>(i) / 48.0;
        const double week = 2.0 * M_PI * static_cast<double>(i) / (48.0 * 7.0);
        double x = 0.42 + 0.15 * std::sin(day - 1.2) + 0.05 * std::sin(2.0 * day) + 0.06 * std::sin(week) +
                   0.05 * std::sin(2.0 * M_PI * static_cast<double>(i) / 9000.0) + noise(rng);
        if (spike(rng)) x += 0.3;
        v[i] = std::clamp(x, 0.0, 1.0);
    }
    return v;
}

inline void write_elec2_csv(const std::filesystem::path& path, const std::vector<double>& values) {
    std::ofstream out(path);
    out << "date,day,period,nswprice,nswdemand,class\n";
    out.precision(17);
    for (std::size_t i = 0; i < values.size(); ++i)
        out << i / 48 << ',' << (i / 48) % 7 + 1 << ',' << (i % 48) / 47.0 << ",0.05," << values[i] << ",UP\n";
}

} // namespace certinv::fixtures
