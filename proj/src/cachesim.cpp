#include "ice/cachesim.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include <fmt/format.h>

#include "ice/error.hpp"

namespace ice {

MemoryTrace::MemoryTrace(std::uint32_t core_count) : core_count_(core_count) {
    if (core_count == 0) fail(ErrorCode::invalid_argument, "trace core_count must be >= 1");
}

void MemoryTrace::push(std::uint32_t core, std::uint64_t address) {
    if (core >= core_count_) {
        fail(ErrorCode::invalid_argument, fmt::format("core id {} out of range for {} cores", core, core_count_));
    }
    accesses_.push_back({core, address});
}

void MemoryTrace::validate() const {
    if (accesses_.empty()) fail(ErrorCode::invalid_argument, "trace is empty");
    for (const auto& a : accesses_) {
        if (a.core >= core_count_) {
            fail(ErrorCode::invalid_argument, fmt::format("core id {} out of range for {} cores", a.core, core_count_));
        }
    }
}

void write_trace(std::ostream& out, const MemoryTrace& trace) {
    for (const auto& a : trace.accesses()) out << a.core << ' ' << a.address << '\n';
}

MemoryTrace read_trace(std::istream& in, std::uint32_t core_count) {
    std::vector<Access> parsed;
    std::string line;
    std::size_t line_no = 0;
    std::uint32_t max_core = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ss(line);
        long long core = -1;
        long long address = -1;
        std::string extra;
        if (!(ss >> core >> address) || (ss >> extra) || core < 0 || address < 0 || core > 0xFFFFFFFFll) {
            fail(ErrorCode::parse_error, fmt::format("trace line {}: expected 'core_id address'", line_no));
        }
        parsed.push_back({static_cast<std::uint32_t>(core), static_cast<std::uint64_t>(address)});
        max_core = std::max(max_core, static_cast<std::uint32_t>(core));
    }
    MemoryTrace trace(core_count == 0 ? max_core + 1 : core_count);
    trace.reserve(parsed.size());
    for (const auto& a : parsed) trace.push(a.core, a.address);
    return trace;
}

void CacheGeometry::validate() const {
    if (capacity_lines < 1) fail(ErrorCode::invalid_cache_geometry, "capacity_lines must be >= 1");
    if (line_elements < 1) fail(ErrorCode::invalid_cache_geometry, "line_elements must be >= 1");
}

CacheGeometry CacheGeometry::from_elements(std::uint64_t cache_elements, std::uint64_t line_elements) {
    if (line_elements == 0) fail(ErrorCode::invalid_cache_geometry, "line_elements must be >= 1");
    CacheGeometry g{cache_elements / line_elements, line_elements};
    g.validate();
    return g;
}

LruCache::LruCache(std::uint64_t capacity_lines) : capacity_(capacity_lines) {
    if (capacity_lines == 0) fail(ErrorCode::invalid_cache_geometry, "LRU cache needs at least one line");
}

bool LruCache::access(std::uint64_t line) {
    if (const auto it = where_.find(line); it != where_.end()) {
        order_.splice(order_.begin(), order_, it->second);
        return true;
    }
    if (order_.size() == capacity_) {
        where_.erase(order_.back());
        order_.pop_back();
    }
    order_.push_front(line);
    where_.emplace(line, order_.begin());
    return false;
}

CacheStats simulate_ic(const MemoryTrace& trace, const CacheGeometry& geom, CoreHandling handling) {
    trace.validate();
    geom.validate();
    if (trace.core_count() != 1 && handling == CoreHandling::require_single) {
        fail(ErrorCode::invalid_argument,
             fmt::format("ideal-cache simulation of a {}-core trace needs explicit serialization", trace.core_count()));
    }
    LruCache cache(geom.capacity_lines);
    std::uint64_t misses = 0;
    for (const auto& a : trace.accesses()) {
        if (!cache.access(a.address / geom.line_elements)) ++misses;
    }
    return {misses, {misses}};
}

CacheStats simulate_idc(const MemoryTrace& trace, const CacheGeometry& geom) {
    trace.validate();
    geom.validate();
    std::vector<LruCache> caches(trace.core_count(), LruCache(geom.capacity_lines));
    CacheStats stats{0, std::vector<std::uint64_t>(trace.core_count(), 0)};
    for (const auto& a : trace.accesses()) {
        if (!caches[a.core].access(a.address / geom.line_elements)) {
            ++stats.misses_per_core[a.core];
            ++stats.misses_total;
        }
    }
    return stats;
}

double Lemma1Report::ratio() const {
    return p_times_q1 == 0 ? 0.0 : static_cast<double>(q_p) / static_cast<double>(p_times_q1);
}

Lemma1Report check_lemma1(const MemoryTrace& trace, const CacheGeometry& geom) {
    Lemma1Report r;
    r.q_p = simulate_idc(trace, geom).misses_total;
    r.p_times_q1 = trace.core_count() * simulate_ic(trace, geom, CoreHandling::serialize).misses_total;
    r.holds = r.q_p <= r.p_times_q1;
    return r;
}

MemoryTrace random_trace(std::mt19937_64& rng, std::uint32_t cores, std::size_t length, std::uint64_t address_space) {
    if (length == 0) fail(ErrorCode::invalid_argument, "trace length must be positive");
    if (address_space == 0) fail(ErrorCode::invalid_argument, "address space must be positive");
    MemoryTrace trace(cores);
    trace.reserve(length);
    // Drawn directly from the engine so traces are identical across standard libraries.
    for (std::size_t i = 0; i < length; ++i) {
        const auto core = static_cast<std::uint32_t>(rng() % cores);
        trace.push(core, rng() % address_space);
    }
    return trace;
}

}  // namespace ice
