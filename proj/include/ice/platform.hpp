#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ice {

// Energies are in nanojoules throughout the library.
using Nanojoules = double;

inline constexpr std::uint64_t kDefaultCachelineElements = 8;      // 64-byte line of doubles
inline constexpr std::uint64_t kDefaultPrivateCacheElements = 32768;  // 256 KiB of doubles
inline constexpr std::uint64_t kDefaultElementBytes = 8;

// Hardware-level constants from which the four energy parameters follow.
// cacheline_elements and private_cache_elements count elements of the
// working datatype, not bytes.
struct RawPlatformConstants {
    double static_power_w = 0;        // whole platform
    double dynamic_power_per_op_w = 0;
    double dynamic_power_per_io_w = 0;
    double cycles_per_op = 0;
    double cycles_per_cacheline = 0;
    double frequency_hz = 0;
    std::uint64_t cacheline_elements = kDefaultCachelineElements;
    std::uint64_t private_cache_elements = kDefaultPrivateCacheElements;
    std::uint64_t core_count = 1;

    void validate() const;
    bool operator==(const RawPlatformConstants&) const = default;
};

struct IceParameters {
    Nanojoules eps_op = 0;  // dynamic energy per operation
    Nanojoules eps_io = 0;  // dynamic energy per cache-line transfer
    Nanojoules pi_op = 0;   // static energy accrued over one operation time
    Nanojoules pi_io = 0;   // static energy accrued over one cache-line transfer time

    bool operator==(const IceParameters&) const = default;
};

IceParameters derive_ice_parameters(const RawPlatformConstants& raw);

struct PlatformProfile {
    std::string name;
    std::string processor;
    Nanojoules eps_op = 0;
    Nanojoules eps_io = 0;
    Nanojoules pi_op = 0;
    Nanojoules pi_io = 0;
    std::uint64_t cacheline_elements = kDefaultCachelineElements;
    std::uint64_t private_cache_elements = kDefaultPrivateCacheElements;
    std::optional<std::uint64_t> core_count;
    std::optional<RawPlatformConstants> raw;

    [[nodiscard]] IceParameters parameters() const { return {eps_op, eps_io, pi_op, pi_io}; }

    // Throws needs_core_count when the profile does not know N.
    [[nodiscard]] std::uint64_t require_core_count() const;

    /// Checks positivity, B <= Z, and (when raw constants are attached)
    /// that the four parameters agree with them to relative 1e-9.
    void validate() const;

    bool operator==(const PlatformProfile&) const = default;
};

PlatformProfile profile_from_raw(std::string name, std::string processor,
                                 const RawPlatformConstants& raw);

// Energy-roofline style characterisation: per-flop and per-byte energy plus
// a constant power drawn for the time each flop / byte takes.
struct RooflineParameters {
    Nanojoules energy_per_flop = 0;
    Nanojoules energy_per_byte = 0;
    double constant_power_w = 0;
    double time_per_flop_s = 0;
    double time_per_byte_s = 0;
    std::uint64_t cacheline_bytes = 64;
    std::uint64_t element_bytes = kDefaultElementBytes;
};

PlatformProfile from_roofline(const RooflineParameters& roofline, std::string name = {},
                              std::string processor = {});

struct MeasurementSample {
    double work = 0;        // flops
    double io = 0;          // cache-line transfers
    double duration_s = 0;
    double energy_j = 0;
};

struct FitResult {
    double eps_op_j = 0;  // joules per flop
    double eps_io_j = 0;  // joules per cache line
    double static_power_w = 0;
    double residual_sum_squares = 0;
};

// Ordinary least squares for energy ~ eps_op*work + eps_io*io + P_static*duration.
FitResult fit_parameters(std::span<const MeasurementSample> samples);

// The eleven-platform reference catalogue.
std::vector<PlatformProfile> builtin_catalog();

// Name lookup ignores case and any non-alphanumeric characters, so
// "xeon-phi", "Xeon-Phi" and "XEON PHI" all resolve to the same profile.
std::string normalize_name(std::string_view name);
const PlatformProfile& find_platform(std::span<const PlatformProfile> platforms,
                                     std::string_view name);

// Catalogue file: JSON document with a "units" table and a "platforms" array.
std::vector<PlatformProfile> read_platforms(std::istream& in);
std::vector<PlatformProfile> read_platforms_file(const std::string& path);
void write_platforms(std::ostream& out, std::span<const PlatformProfile> platforms);

}  // namespace ice
