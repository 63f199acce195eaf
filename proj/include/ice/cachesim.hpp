#pragma once

#include <cstdint>
#include <iosfwd>
#include <list>
#include <random>
#include <span>
#include <unordered_map>
#include <vector>

namespace ice {

struct Access {
    std::uint32_t core = 0;
    std::uint64_t address = 0;  // element index

    bool operator==(const Access&) const = default;
};

// Ordered accesses issued by `core_count` cores, in program (interleaved) order.
class MemoryTrace {
public:
    explicit MemoryTrace(std::uint32_t core_count = 1);

    void push(std::uint32_t core, std::uint64_t address);
    void reserve(std::size_t n) { accesses_.reserve(n); }

    [[nodiscard]] std::uint32_t core_count() const noexcept { return core_count_; }
    [[nodiscard]] std::span<const Access> accesses() const noexcept { return accesses_; }
    [[nodiscard]] std::size_t size() const noexcept { return accesses_.size(); }
    [[nodiscard]] bool empty() const noexcept { return accesses_.empty(); }

    // Throws invalid_argument when empty or when a core id is out of range.
    void validate() const;

    bool operator==(const MemoryTrace&) const = default;

private:
    std::uint32_t core_count_;
    std::vector<Access> accesses_;
};

// Dump format: one "core_id address" pair per line. Core count is the
// largest core id plus one unless given.
void write_trace(std::ostream& out, const MemoryTrace& trace);
MemoryTrace read_trace(std::istream& in, std::uint32_t core_count = 0);

struct CacheGeometry {
    std::uint64_t capacity_lines = 1;  // Z / B
    std::uint64_t line_elements = 1;   // B

    void validate() const;
    [[nodiscard]] std::uint64_t capacity_elements() const { return capacity_lines * line_elements; }

    // Z and B in elements; Z is rounded down to whole lines.
    static CacheGeometry from_elements(std::uint64_t cache_elements, std::uint64_t line_elements);
};

struct CacheStats {
    std::uint64_t misses_total = 0;
    std::vector<std::uint64_t> misses_per_core;
};

// Fully associative LRU cache over line ids.
class LruCache {
public:
    explicit LruCache(std::uint64_t capacity_lines);

    // Returns true on a hit. A miss installs the line, evicting the LRU one.
    bool access(std::uint64_t line);
    [[nodiscard]] std::size_t resident() const noexcept { return order_.size(); }

private:
    std::uint64_t capacity_;
    std::list<std::uint64_t> order_;  // front = most recent
    std::unordered_map<std::uint64_t, std::list<std::uint64_t>::iterator> where_;
};

enum class CoreHandling {
    require_single,  // multi-core traces are rejected
    serialize,       // core ids ignored, program order kept
};

CacheStats simulate_ic(const MemoryTrace& trace, const CacheGeometry& geom,
                       CoreHandling handling = CoreHandling::require_single);

// One private cache per core, no interference between them.
CacheStats simulate_idc(const MemoryTrace& trace, const CacheGeometry& geom);

struct Lemma1Report {
    std::uint64_t q_p = 0;         // IDC misses of the parallel trace
    std::uint64_t p_times_q1 = 0;  // P * IC misses of the serialized trace
    bool holds = false;

    [[nodiscard]] double ratio() const;
};

Lemma1Report check_lemma1(const MemoryTrace& trace, const CacheGeometry& geom);

// Uniform random addresses in [0, address_space) with uniformly random cores.
MemoryTrace random_trace(std::mt19937_64& rng, std::uint32_t cores, std::size_t length,
                         std::uint64_t address_space);

}  // namespace ice
