#include "ice/platform.hpp"

#include <cctype>
#include <cmath>

#include <fmt/format.h>

#include "ice/error.hpp"

namespace ice {
namespace {

constexpr double kNanoPerUnit = 1e9;
constexpr double kIdentityTolerance = 1e-9;

bool close_relative(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b));
}

void require_positive(double value, std::string_view field) {
    if (!(value > 0) || !std::isfinite(value)) {
        fail(ErrorCode::invalid_argument, fmt::format("{} must be positive and finite (got {})", field, value));
    }
}

void require_positive(std::uint64_t value, std::string_view field) {
    if (value == 0) fail(ErrorCode::invalid_argument, fmt::format("{} must be positive", field));
}

}  // namespace

void RawPlatformConstants::validate() const {
    require_positive(static_power_w, "static_power_whole_platform");
    require_positive(dynamic_power_per_op_w, "dynamic_power_per_op");
    require_positive(dynamic_power_per_io_w, "dynamic_power_per_io");
    require_positive(cycles_per_op, "cycles_per_op");
    require_positive(cycles_per_cacheline, "cycles_per_cacheline");
    require_positive(frequency_hz, "frequency");
    require_positive(cacheline_elements, "cacheline_elements");
    require_positive(private_cache_elements, "private_cache_elements");
    require_positive(core_count, "core_count");
    if (cacheline_elements > private_cache_elements) {
        fail(ErrorCode::invalid_argument, fmt::format("cacheline_elements ({}) exceeds private_cache_elements ({})",
                                                      cacheline_elements, private_cache_elements));
    }
}

IceParameters derive_ice_parameters(const RawPlatformConstants& raw) {
    raw.validate();
    const double op_time = raw.cycles_per_op / raw.frequency_hz;
    const double line_time = raw.cycles_per_cacheline / raw.frequency_hz;
    return {
        .eps_op = raw.dynamic_power_per_op_w * op_time * kNanoPerUnit,
        .eps_io = raw.dynamic_power_per_io_w * line_time * kNanoPerUnit,
        .pi_op = raw.static_power_w * op_time * kNanoPerUnit,
        .pi_io = raw.static_power_w * line_time * kNanoPerUnit,
    };
}

std::uint64_t PlatformProfile::require_core_count() const {
    if (!core_count) {
        fail(ErrorCode::needs_core_count,
             fmt::format("platform '{}' has no core_count; supply one in a platforms file", name));
    }
    return *core_count;
}

void PlatformProfile::validate() const {
    if (name.empty()) fail(ErrorCode::invalid_argument, "platform name must not be empty");
    require_positive(eps_op, "eps_op");
    require_positive(eps_io, "eps_io");
    require_positive(pi_op, "pi_op");
    require_positive(pi_io, "pi_io");
    require_positive(cacheline_elements, "cacheline_elements");
    require_positive(private_cache_elements, "private_cache_elements");
    if (cacheline_elements > private_cache_elements) {
        fail(ErrorCode::invalid_argument, fmt::format("platform '{}': cacheline_elements exceeds private_cache_elements", name));
    }
    if (core_count && *core_count == 0) fail(ErrorCode::invalid_argument, "core_count must be positive");
    if (!raw) return;

    const IceParameters derived = derive_ice_parameters(*raw);
    const auto check = [&](double stored, double expected, std::string_view field) {
        if (!close_relative(stored, expected, kIdentityTolerance)) {
            fail(ErrorCode::invalid_argument,
                 fmt::format("platform '{}': {} = {} disagrees with raw constants ({})", name, field, stored, expected));
        }
    };
    check(eps_op, derived.eps_op, "eps_op");
    check(eps_io, derived.eps_io, "eps_io");
    check(pi_op, derived.pi_op, "pi_op");
    check(pi_io, derived.pi_io, "pi_io");
    check(pi_io / pi_op, raw->cycles_per_cacheline / raw->cycles_per_op, "pi_io/pi_op");
}

PlatformProfile profile_from_raw(std::string name, std::string processor, const RawPlatformConstants& raw) {
    const IceParameters p = derive_ice_parameters(raw);
    PlatformProfile profile{
        .name = std::move(name),
        .processor = std::move(processor),
        .eps_op = p.eps_op,
        .eps_io = p.eps_io,
        .pi_op = p.pi_op,
        .pi_io = p.pi_io,
        .cacheline_elements = raw.cacheline_elements,
        .private_cache_elements = raw.private_cache_elements,
        .core_count = raw.core_count,
        .raw = raw,
    };
    profile.validate();
    return profile;
}

PlatformProfile from_roofline(const RooflineParameters& r, std::string name, std::string processor) {
    require_positive(r.energy_per_flop, "energy_per_flop");
    require_positive(r.energy_per_byte, "energy_per_byte");
    require_positive(r.constant_power_w, "constant_power");
    require_positive(r.time_per_flop_s, "time_per_flop");
    require_positive(r.time_per_byte_s, "time_per_byte");
    require_positive(r.cacheline_bytes, "cacheline_bytes");
    require_positive(r.element_bytes, "element_bytes");
    if (r.cacheline_bytes % r.element_bytes != 0) {
        fail(ErrorCode::invalid_argument, "cacheline_bytes must be a multiple of element_bytes");
    }
    const auto line_bytes = static_cast<double>(r.cacheline_bytes);
    PlatformProfile profile{
        .name = std::move(name),
        .processor = std::move(processor),
        .eps_op = r.energy_per_flop,
        .eps_io = r.energy_per_byte * line_bytes,
        .pi_op = r.constant_power_w * r.time_per_flop_s * kNanoPerUnit,
        .pi_io = r.constant_power_w * r.time_per_byte_s * line_bytes * kNanoPerUnit,
        .cacheline_elements = r.cacheline_bytes / r.element_bytes,
        .private_cache_elements = kDefaultPrivateCacheElements,
        .core_count = std::nullopt,
        .raw = std::nullopt,
    };
    if (profile.name.empty()) profile.name = "roofline";
    profile.validate();
    return profile;
}

std::string normalize_name(std::string_view name) {
    std::string out;
    out.reserve(name.size());
    for (const char c : name) {
        const auto uc = static_cast<unsigned char>(c);
        if (std::isalnum(uc)) out.push_back(static_cast<char>(std::tolower(uc)));
    }
    return out;
}

const PlatformProfile& find_platform(std::span<const PlatformProfile> platforms, std::string_view name) {
    const std::string key = normalize_name(name);
    for (const auto& p : platforms) {
        if (normalize_name(p.name) == key) return p;
    }
    std::string known;
    for (const auto& p : platforms) {
        if (!known.empty()) known += ", ";
        known += p.name;
    }
    fail(ErrorCode::unknown_name, fmt::format("unknown platform '{}'; known platforms: {}", name, known));
}

}  // namespace ice
