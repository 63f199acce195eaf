#include <fstream>
#include <istream>
#include <ostream>

#include <fmt/format.h>
#include <json.hpp>

#include "ice/error.hpp"
#include "ice/platform.hpp"

namespace ice {
namespace {

using Json = nlohmann::ordered_json;

constexpr std::string_view kFormatTag = "ice-platforms/1";

PlatformProfile row(std::string name, std::string processor, double eps_op, double pi_op, double eps_io,
                    double pi_io, std::optional<std::uint64_t> cores = std::nullopt) {
    return PlatformProfile{
        .name = std::move(name),
        .processor = std::move(processor),
        .eps_op = eps_op,
        .eps_io = eps_io,
        .pi_op = pi_op,
        .pi_io = pi_io,
        .core_count = cores,
        .raw = std::nullopt,
    };
}

Json units_table() {
    return Json{
        {"eps_op", "nJ/flop"},
        {"eps_io", "nJ/cache-line"},
        {"pi_op", "nJ/flop"},
        {"pi_io", "nJ/cache-line"},
        {"cacheline_elements", "elements"},
        {"private_cache_elements", "elements"},
        {"core_count", "cores"},
        {"raw.static_power_whole_platform", "W"},
        {"raw.dynamic_power_per_op", "W"},
        {"raw.dynamic_power_per_io", "W"},
        {"raw.cycles_per_op", "cycles"},
        {"raw.cycles_per_cacheline", "cycles"},
        {"raw.frequency", "Hz"},
        {"raw.cacheline_elements", "elements"},
        {"raw.private_cache_elements", "elements"},
        {"raw.core_count", "cores"},
    };
}

Json to_json(const RawPlatformConstants& r) {
    return Json{
        {"static_power_whole_platform", r.static_power_w},
        {"dynamic_power_per_op", r.dynamic_power_per_op_w},
        {"dynamic_power_per_io", r.dynamic_power_per_io_w},
        {"cycles_per_op", r.cycles_per_op},
        {"cycles_per_cacheline", r.cycles_per_cacheline},
        {"frequency", r.frequency_hz},
        {"cacheline_elements", r.cacheline_elements},
        {"private_cache_elements", r.private_cache_elements},
        {"core_count", r.core_count},
    };
}

Json to_json(const PlatformProfile& p) {
    Json j{
        {"name", p.name},
        {"processor", p.processor},
        {"eps_op", p.eps_op},
        {"eps_io", p.eps_io},
        {"pi_op", p.pi_op},
        {"pi_io", p.pi_io},
        {"cacheline_elements", p.cacheline_elements},
        {"private_cache_elements", p.private_cache_elements},
    };
    j["core_count"] = p.core_count ? Json(*p.core_count) : Json(nullptr);
    j["raw"] = p.raw ? to_json(*p.raw) : Json(nullptr);
    return j;
}

[[noreturn]] void bad_field(std::string_view where, std::string_view field, std::string_view problem) {
    fail(ErrorCode::parse_error, fmt::format("{}: field '{}' {}", where, field, problem));
}

double get_number(const Json& obj, std::string_view where, const char* field) {
    const auto it = obj.find(field);
    if (it == obj.end()) bad_field(where, field, "is missing");
    if (!it->is_number()) bad_field(where, field, "must be a number");
    return it->get<double>();
}

std::uint64_t get_count(const Json& obj, std::string_view where, const char* field, std::optional<std::uint64_t> fallback) {
    const auto it = obj.find(field);
    if (it == obj.end() || it->is_null()) {
        if (fallback) return *fallback;
        bad_field(where, field, "is missing");
    }
    if (!it->is_number_unsigned() && !(it->is_number_integer() && it->get<std::int64_t>() >= 0)) {
        bad_field(where, field, "must be a non-negative integer");
    }
    return it->get<std::uint64_t>();
}

std::string get_string(const Json& obj, std::string_view where, const char* field, bool required) {
    const auto it = obj.find(field);
    if (it == obj.end() || it->is_null()) {
        if (required) bad_field(where, field, "is missing");
        return {};
    }
    if (!it->is_string()) bad_field(where, field, "must be a string");
    return it->get<std::string>();
}

RawPlatformConstants raw_from_json(const Json& j, std::string_view where) {
    if (!j.is_object()) bad_field(where, "raw", "must be an object or null");
    return RawPlatformConstants{
        .static_power_w = get_number(j, where, "static_power_whole_platform"),
        .dynamic_power_per_op_w = get_number(j, where, "dynamic_power_per_op"),
        .dynamic_power_per_io_w = get_number(j, where, "dynamic_power_per_io"),
        .cycles_per_op = get_number(j, where, "cycles_per_op"),
        .cycles_per_cacheline = get_number(j, where, "cycles_per_cacheline"),
        .frequency_hz = get_number(j, where, "frequency"),
        .cacheline_elements = get_count(j, where, "cacheline_elements", kDefaultCachelineElements),
        .private_cache_elements = get_count(j, where, "private_cache_elements", kDefaultPrivateCacheElements),
        .core_count = get_count(j, where, "core_count", std::nullopt),
    };
}

PlatformProfile profile_from_json(const Json& j, std::size_t index) {
    std::string where = fmt::format("platforms[{}]", index);
    if (!j.is_object()) fail(ErrorCode::parse_error, where + ": record must be an object");
    PlatformProfile p;
    p.name = get_string(j, where, "name", true);
    where += " (" + p.name + ")";
    p.processor = get_string(j, where, "processor", false);
    p.eps_op = get_number(j, where, "eps_op");
    p.eps_io = get_number(j, where, "eps_io");
    p.pi_op = get_number(j, where, "pi_op");
    p.pi_io = get_number(j, where, "pi_io");
    p.cacheline_elements = get_count(j, where, "cacheline_elements", kDefaultCachelineElements);
    p.private_cache_elements = get_count(j, where, "private_cache_elements", kDefaultPrivateCacheElements);
    if (const auto it = j.find("core_count"); it != j.end() && !it->is_null()) {
        p.core_count = get_count(j, where, "core_count", std::nullopt);
    }
    if (const auto it = j.find("raw"); it != j.end() && !it->is_null()) p.raw = raw_from_json(*it, where + ".raw");
    try {
        p.validate();
    } catch (const Error& e) {
        fail(ErrorCode::parse_error, fmt::format("{}: {}", where, e.what()));
    }
    return p;
}

}  // namespace

std::vector<PlatformProfile> builtin_catalog() {
    return {
        row("Nehalem i7-950", "Intel i7-950", 0.670, 2.455, 50.88, 408.80),
        row("Ivy Bridge i3-3217U", "Intel i3-3217U", 0.024, 0.591, 26.75, 58.99),
        row("Bobcat CPU", "AMD E2-1800", 0.199, 3.980, 27.84, 387.47),
        row("Fermi GTX 580", "NVIDIA GF100", 0.213, 0.622, 32.83, 45.66),
        row("Kepler GTX 680", "NVIDIA GK104", 0.263, 0.452, 27.97, 26.90),
        row("Kepler GTX Titan", "NVIDIA GK110", 0.094, 0.077, 17.09, 32.94),
        row("XeonPhi KNC", "Intel 5110P", 0.012, 0.178, 8.70, 63.65),
        row("Cortex-A9", "TI OMAP 4460", 0.302, 1.152, 51.84, 174.00),
        row("Arndale Cortex-A15", "Samsung Exynos 5", 0.275, 1.385, 24.70, 89.34),
        row("Xeon", "2xIntel E5-2650l v3", 0.263, 0.108, 8.86, 23.29, 24),
        row("Xeon-Phi", "Intel 31S1P", 0.006, 0.078, 25.02, 64.40, 57),
    };
}

std::vector<PlatformProfile> read_platforms(std::istream& in) {
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const Json::parse_error& e) {
        fail(ErrorCode::parse_error, fmt::format("platforms file is not valid JSON: {}", e.what()));
    }
    if (!doc.is_object()) fail(ErrorCode::parse_error, "platforms file must be a JSON object");
    const auto it = doc.find("platforms");
    if (it == doc.end() || !it->is_array()) bad_field("document", "platforms", "must be an array");

    std::vector<PlatformProfile> out;
    out.reserve(it->size());
    for (std::size_t i = 0; i < it->size(); ++i) out.push_back(profile_from_json((*it)[i], i));
    return out;
}

std::vector<PlatformProfile> read_platforms_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::invalid_argument, fmt::format("cannot open platforms file '{}'", path));
    return read_platforms(in);
}

void write_platforms(std::ostream& out, std::span<const PlatformProfile> platforms) {
    Json doc;
    doc["format"] = kFormatTag;
    doc["units"] = units_table();
    Json rows = Json::array();
    for (const auto& p : platforms) rows.push_back(to_json(p));
    doc["platforms"] = std::move(rows);
    out << doc.dump(2) << '\n';
}

}  // namespace ice
