#include <doctest.h>
#include <fmt/format.h>

#include <sstream>

#include "ice/platform.hpp"
#include "support.hpp"

using namespace ice;
using ice::testing::error_of;
using ice::testing::message_of;
using ice::testing::rel_close;

namespace {

RawPlatformConstants unit_raw() {
    RawPlatformConstants raw;
    raw.static_power_w = 1;
    raw.dynamic_power_per_op_w = 1;
    raw.dynamic_power_per_io_w = 1;
    raw.cycles_per_op = 1;
    raw.cycles_per_cacheline = 1;
    raw.frequency_hz = 1e9;
    return raw;
}

void check_params(const IceParameters& p, double eps_op, double eps_io, double pi_op, double pi_io) {
    CHECK(rel_close(p.eps_op, eps_op, 1e-12));
    CHECK(rel_close(p.eps_io, eps_io, 1e-12));
    CHECK(rel_close(p.pi_op, pi_op, 1e-12));
    CHECK(rel_close(p.pi_io, pi_io, 1e-12));
}

}  // namespace

TEST_CASE("derive_ice_parameters: unit case gives one nanojoule each") {
    check_params(derive_ice_parameters(unit_raw()), 1, 1, 1, 1);
}

TEST_CASE("derive_ice_parameters: hand-evaluated platform") {
    RawPlatformConstants raw = unit_raw();
    raw.static_power_w = 10;
    raw.dynamic_power_per_op_w = 2;
    raw.dynamic_power_per_io_w = 20;
    raw.cycles_per_cacheline = 10;
    raw.frequency_hz = 2e9;
    check_params(derive_ice_parameters(raw), 1.0, 100.0, 5.0, 50.0);
}

TEST_CASE("derive_ice_parameters: F == M and P_op == P_sta make eps_op equal pi_op") {
    RawPlatformConstants raw = unit_raw();
    raw.static_power_w = raw.dynamic_power_per_op_w = 37.5;
    raw.cycles_per_op = raw.cycles_per_cacheline = 4;
    const auto p = derive_ice_parameters(raw);
    CHECK(p.eps_op == p.pi_op);
}

TEST_CASE("derive_ice_parameters: non-positive fields are named") {
    RawPlatformConstants raw = unit_raw();
    raw.frequency_hz = 0;
    CHECK(error_of([&] { derive_ice_parameters(raw); }) == ErrorCode::invalid_argument);
    CHECK(message_of([&] { derive_ice_parameters(raw); }).find("frequency") != std::string::npos);

    raw = unit_raw();
    raw.cycles_per_cacheline = -1;
    CHECK(message_of([&] { derive_ice_parameters(raw); }).find("cycles_per_cacheline") != std::string::npos);

    raw = unit_raw();
    raw.cacheline_elements = 64;
    raw.private_cache_elements = 32;
    CHECK(error_of([&] { raw.validate(); }) == ErrorCode::invalid_argument);
}

TEST_CASE("profile_from_raw: random constants always satisfy the profile invariants") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 1000; ++i) {
        const auto raw = ice::testing::random_raw(rng);
        const PlatformProfile p = profile_from_raw("r", "random", raw);
        CHECK_NOTHROW(p.validate());
        CHECK(rel_close(p.pi_io / p.pi_op, raw.cycles_per_cacheline / raw.cycles_per_op, 1e-9));
        CHECK(p.core_count == raw.core_count);
    }
}

TEST_CASE("PlatformProfile::validate rejects parameters inconsistent with attached raw constants") {
    PlatformProfile p = profile_from_raw("r", "x", unit_raw());
    p.eps_io *= 1.001;
    CHECK(error_of([&] { p.validate(); }) == ErrorCode::invalid_argument);
}

TEST_CASE("from_roofline: hand-evaluated conversion") {
    RooflineParameters r;
    r.energy_per_flop = 2;
    r.energy_per_byte = 0.5;
    r.constant_power_w = 10;
    r.time_per_flop_s = 1e-9;
    r.time_per_byte_s = 4e-9;
    r.cacheline_bytes = 64;
    const auto p = from_roofline(r);
    check_params(p.parameters(), 2, 32, 10, 2560);
    CHECK(p.cacheline_elements == 8);
}

TEST_CASE("from_roofline: reproduces the Kepler GTX Titan row") {
    RooflineParameters r;
    r.energy_per_flop = 0.094;
    r.energy_per_byte = 17.09 / 64;
    r.constant_power_w = 1;
    r.time_per_flop_s = 0.077e-9;
    r.time_per_byte_s = 32.94e-9 / 64;
    const auto p = from_roofline(r, "titan");
    const auto& titan = find_platform(builtin_catalog(), "Kepler GTX Titan");
    CHECK(rel_close(p.eps_op, titan.eps_op, 1e-12));
    CHECK(rel_close(p.eps_io, titan.eps_io, 1e-12));
    CHECK(rel_close(p.pi_op, titan.pi_op, 1e-12));
    CHECK(rel_close(p.pi_io, titan.pi_io, 1e-12));
}

TEST_CASE("from_roofline: zero constant power is rejected") {
    RooflineParameters r;
    r.energy_per_flop = 1;
    r.energy_per_byte = 1;
    r.constant_power_w = 0;
    r.time_per_flop_s = 1e-9;
    r.time_per_byte_s = 1e-9;
    CHECK(error_of([&] { from_roofline(r); }) == ErrorCode::invalid_argument);
    r.constant_power_w = 1;
    r.cacheline_bytes = 60;  // not a whole number of 8-byte elements
    CHECK(error_of([&] { from_roofline(r); }) == ErrorCode::invalid_argument);
}

TEST_CASE("from_roofline: homogeneous in the energy inputs") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.1, 10.0);
    for (int i = 0; i < 200; ++i) {
        RooflineParameters r;
        r.energy_per_flop = u(rng);
        r.energy_per_byte = u(rng);
        r.constant_power_w = u(rng);
        r.time_per_flop_s = u(rng) * 1e-9;
        r.time_per_byte_s = u(rng) * 1e-9;
        const double k = u(rng);
        RooflineParameters scaled = r;
        scaled.energy_per_flop *= k;
        scaled.energy_per_byte *= k;
        scaled.constant_power_w *= k;
        const auto a = from_roofline(r).parameters();
        const auto b = from_roofline(scaled).parameters();
        CHECK(rel_close(b.eps_op, k * a.eps_op, 1e-12));
        CHECK(rel_close(b.eps_io, k * a.eps_io, 1e-12));
        CHECK(rel_close(b.pi_op, k * a.pi_op, 1e-12));
        CHECK(rel_close(b.pi_io, k * a.pi_io, 1e-12));
    }
}

TEST_CASE("fit_parameters: three-sample system solved by hand") {
    const std::vector<MeasurementSample> s{{1, 0, 1, 3}, {0, 1, 1, 4}, {0, 0, 1, 2}};
    const auto fit = fit_parameters(s);
    CHECK(fit.eps_op_j == doctest::Approx(1.0));
    CHECK(fit.eps_io_j == doctest::Approx(2.0));
    CHECK(fit.static_power_w == doctest::Approx(2.0));
    CHECK(fit.residual_sum_squares == doctest::Approx(0.0));
}

TEST_CASE("fit_parameters: noiseless round trip over random generating triples") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> log_u(-2, 2);
    for (int i = 0; i < 100; ++i) {
        const ice::testing::GeneratingParameters g{1e-10 * std::pow(10, log_u(rng)), 1e-8 * std::pow(10, log_u(rng)),
                                                   50 * std::pow(10, log_u(rng))};
        const auto fit = fit_parameters(ice::testing::synthetic_samples(g, 10, 0.0, rng));
        CHECK(rel_close(fit.eps_op_j, g.eps_op_j, 1e-6));
        CHECK(rel_close(fit.eps_io_j, g.eps_io_j, 1e-6));
        CHECK(rel_close(fit.static_power_w, g.static_power_w, 1e-6));
    }
}

TEST_CASE("fit_parameters: Xeon-like parameters with 1% noise recovered within 5%") {
    const ice::testing::GeneratingParameters g{0.263e-9, 8.86e-9, 60.0};
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        std::mt19937_64 rng(seed);
        const auto fit = fit_parameters(ice::testing::synthetic_samples(g, 100, 0.01, rng));
        CHECK(rel_close(fit.eps_op_j, g.eps_op_j, 0.05));
        CHECK(rel_close(fit.eps_io_j, g.eps_io_j, 0.05));
        CHECK(rel_close(fit.static_power_w, g.static_power_w, 0.05));
    }
}

TEST_CASE("fit_parameters: degenerate inputs") {
    CHECK(error_of([] { fit_parameters(std::vector<MeasurementSample>{{1, 1, 1, 1}, {2, 2, 2, 2}}); }) ==
          ErrorCode::insufficient_data);
    // io column proportional to work: rank 2.
    const std::vector<MeasurementSample> collinear{{1, 2, 1, 5}, {2, 4, 3, 9}, {3, 6, 2, 7}, {4, 8, 5, 1}};
    CHECK(error_of([&] { fit_parameters(collinear); }) == ErrorCode::degenerate_fit);
    const std::vector<MeasurementSample> zero_io{{1, 0, 1, 5}, {2, 0, 3, 9}, {3, 0, 2, 7}};
    CHECK(error_of([&] { fit_parameters(zero_io); }) == ErrorCode::degenerate_fit);
    const std::vector<MeasurementSample> bad{{1, 0, 0, 5}, {2, 1, 3, 9}, {3, 0, 2, 7}};
    CHECK(error_of([&] { fit_parameters(bad); }) == ErrorCode::invalid_argument);
}

TEST_CASE("builtin_catalog: eleven rows matching the printed table") {
    const auto catalog = builtin_catalog();
    REQUIRE(catalog.size() == ice::testing::kPrintedPlatforms.size());
    for (std::size_t i = 0; i < catalog.size(); ++i) {
        const auto& row = ice::testing::kPrintedPlatforms[i];
        const auto& p = catalog[i];
        CHECK(p.name == row.name);
        CHECK(p.processor == row.processor);
        CHECK(fmt::format("{:.3f}", p.eps_op) == row.cells[0]);
        CHECK(fmt::format("{:.3f}", p.pi_op) == row.cells[1]);
        CHECK(fmt::format("{:.2f}", p.eps_io) == row.cells[2]);
        CHECK(fmt::format("{:.2f}", p.pi_io) == row.cells[3]);
        CHECK_NOTHROW(p.validate());
        CHECK(p.eps_io > p.eps_op);
    }
}

TEST_CASE("builtin_catalog: core counts only for the two measured platforms") {
    const auto catalog = builtin_catalog();
    CHECK(find_platform(catalog, "Xeon").core_count == 24u);
    CHECK(find_platform(catalog, "Xeon-Phi").core_count == 57u);
    int with_cores = 0;
    for (const auto& p : catalog) with_cores += p.core_count ? 1 : 0;
    CHECK(with_cores == 2);
    CHECK(error_of([&] { (void)find_platform(catalog, "Nehalem i7-950").require_core_count(); }) ==
          ErrorCode::needs_core_count);
}

TEST_CASE("find_platform: normalised lookup and suggestions") {
    const auto catalog = builtin_catalog();
    CHECK(find_platform(catalog, "xeon phi").name == "Xeon-Phi");
    CHECK(find_platform(catalog, "XEON_PHI").name == "Xeon-Phi");
    CHECK(find_platform(catalog, "xeonphiknc").name == "XeonPhi KNC");
    CHECK(error_of([&] { (void)find_platform(catalog, "pentium"); }) == ErrorCode::unknown_name);
    CHECK(message_of([&] { (void)find_platform(catalog, "pentium"); }).find("Xeon-Phi") != std::string::npos);
}

TEST_CASE("platform file: export is stable and round-trips") {
    auto catalog = builtin_catalog();
    catalog.push_back(profile_from_raw("synthetic", "raw-derived", unit_raw()));
    std::ostringstream first;
    write_platforms(first, catalog);
    std::istringstream in(first.str());
    const auto parsed = read_platforms(in);
    CHECK(parsed == catalog);
    std::ostringstream second;
    write_platforms(second, parsed);
    CHECK(first.str() == second.str());
    CHECK(first.str().find("\"nJ") != std::string::npos);
}

TEST_CASE("platform file: diagnostics name the bad field") {
    std::istringstream missing(R"({"platforms":[{"name":"X","processor":"p","eps_io":1,"pi_op":1,"pi_io":1}]})");
    const std::string msg = message_of([&] { read_platforms(missing); });
    CHECK(msg.find("eps_op") != std::string::npos);

    std::istringstream negative(
        R"({"platforms":[{"name":"X","processor":"p","eps_op":-1,"eps_io":1,"pi_op":1,"pi_io":1}]})");
    CHECK(message_of([&] { read_platforms(negative); }).find("eps_op") != std::string::npos);

    std::istringstream garbage("not json");
    CHECK(error_of([&] { read_platforms(garbage); }) == ErrorCode::parse_error);
}
