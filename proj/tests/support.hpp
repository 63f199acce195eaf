#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "ice/error.hpp"
#include "ice/platform.hpp"

namespace ice::testing {

// Platform parameter table as printed: eps_op, pi_op, eps_io, pi_io in nJ.
struct PrintedPlatformRow {
    std::string_view name;
    std::string_view processor;
    std::array<std::string_view, 4> cells;
};

inline constexpr std::array<PrintedPlatformRow, 11> kPrintedPlatforms{{
    {"Nehalem i7-950", "Intel i7-950", {"0.670", "2.455", "50.88", "408.80"}},
    {"Ivy Bridge i3-3217U", "Intel i3-3217U", {"0.024", "0.591", "26.75", "58.99"}},
    {"Bobcat CPU", "AMD E2-1800", {"0.199", "3.980", "27.84", "387.47"}},
    {"Fermi GTX 580", "NVIDIA GF100", {"0.213", "0.622", "32.83", "45.66"}},
    {"Kepler GTX 680", "NVIDIA GK104", {"0.263", "0.452", "27.97", "26.90"}},
    {"Kepler GTX Titan", "NVIDIA GK110", {"0.094", "0.077", "17.09", "32.94"}},
    {"XeonPhi KNC", "Intel 5110P", {"0.012", "0.178", "8.70", "63.65"}},
    {"Cortex-A9", "TI OMAP 4460", {"0.302", "1.152", "51.84", "174.00"}},
    {"Arndale Cortex-A15", "Samsung Exynos 5", {"0.275", "1.385", "24.70", "89.34"}},
    {"Xeon", "2xIntel E5-2650l v3", {"0.263", "0.108", "8.86", "23.29"}},
    {"Xeon-Phi", "Intel 31S1P", {"0.006", "0.078", "25.02", "64.40"}},
}};

// Sparse input table: n, m, nz, nc.
struct PrintedMatrixRow {
    std::string_view name;
    std::uint64_t n, m, nz, nc;
};

inline constexpr std::array<PrintedMatrixRow, 9> kPrintedMatrices{{
    {"bone010", 986703, 986703, 47851783, 63},
    {"kkt_power", 2063494, 2063494, 12771361, 90},
    {"ldoor", 952203, 952203, 42493817, 77},
    {"parabolic_fem", 525825, 525825, 3674625, 7},
    {"pds-100", 156243, 517577, 1096002, 7},
    {"rajat31", 4690002, 4690002, 20316253, 1200},
    {"Rucci1", 1977885, 109900, 7791168, 108},
    {"sme3Dc", 42930, 42930, 3148656, 405},
    {"torso1", 116158, 116158, 8516500, 1200},
}};

inline bool rel_close(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b));
}

// Error code raised by `fn`, or nullopt if it returned normally.
template <typename Fn>
std::optional<ErrorCode> error_of(Fn&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return std::nullopt;
}

template <typename Fn>
std::string message_of(Fn&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.what();
    }
    return {};
}

inline RawPlatformConstants random_raw(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> log_unit(-3.0, 3.0);
    const auto pick = [&](double scale) { return scale * std::pow(10.0, log_unit(rng)); };
    RawPlatformConstants raw;
    raw.static_power_w = pick(10.0);
    raw.dynamic_power_per_op_w = pick(1.0);
    raw.dynamic_power_per_io_w = pick(1.0);
    raw.cycles_per_op = pick(1.0);
    raw.cycles_per_cacheline = pick(10.0);
    raw.frequency_hz = pick(1e9);
    raw.cacheline_elements = 1 + rng() % 16;
    raw.private_cache_elements = raw.cacheline_elements * (1 + rng() % 4096);
    raw.core_count = 1 + rng() % 64;
    return raw;
}

struct GeneratingParameters {
    double eps_op_j;
    double eps_io_j;
    double static_power_w;
};

// Synthetic measurements; each term of the energy varies independently
// over about two decades so all three coefficients are identifiable.
inline std::vector<MeasurementSample> synthetic_samples(const GeneratingParameters& g, std::size_t count,
                                                        double noise_sigma, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::normal_distribution<double> noise(0.0, noise_sigma);
    std::vector<MeasurementSample> samples;
    samples.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        MeasurementSample s;
        s.work = (0.02 + unit(rng)) * 100.0 / g.eps_op_j;
        s.io = (0.02 + unit(rng)) * 100.0 / g.eps_io_j;
        s.duration_s = (0.02 + unit(rng)) * 100.0 / g.static_power_w;
        const double exact = g.eps_op_j * s.work + g.eps_io_j * s.io + g.static_power_w * s.duration_s;
        s.energy_j = noise_sigma == 0 ? exact : exact * (1.0 + noise(rng));
        samples.push_back(s);
    }
    return samples;
}

}  // namespace ice::testing
