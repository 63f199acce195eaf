#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ice/cachesim.hpp"
#include "ice/complexity.hpp"

namespace ice {

// Explicit nonzero coordinates of a small sparse matrix.
struct SparsePattern {
    std::uint64_t rows = 0;
    std::uint64_t cols = 0;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> entries;  // (row, col), unique

    [[nodiscard]] std::uint64_t nonzeros() const noexcept { return entries.size(); }

    // Structural descriptor with nr and nc measured from the coordinates.
    [[nodiscard]] SparseInput describe(std::string name, std::optional<std::uint64_t> block_dim = {}) const;

    static SparsePattern identity(std::uint64_t n);
    // Each cell is nonzero with probability `density`.
    static SparsePattern random(std::uint64_t rows, std::uint64_t cols, double density, std::mt19937_64& rng);
};

inline constexpr std::uint64_t kDefaultTraceCap = std::uint64_t{1} << 20;

struct TraceOptions {
    std::uint32_t cores = 1;
    std::uint64_t access_cap = kDefaultTraceCap;
};

// Arrays live in disjoint address regions so no cache line spans two arrays.
inline constexpr std::uint64_t kRegionStride = std::uint64_t{1} << 40;

// Work is split into contiguous chunks per core (rows for CSR and the
// matmuls, columns for CSC, block-rows for CSB); per-core streams are
// interleaved one access at a time.
MemoryTrace trace_csr(const SparsePattern& matrix, const TraceOptions& options = {});
MemoryTrace trace_csc(const SparsePattern& matrix, const TraceOptions& options = {});
MemoryTrace trace_csb(const SparsePattern& matrix, std::uint64_t block_dim, const TraceOptions& options = {});
MemoryTrace trace_basic_matmul(const DenseInput& dims, const TraceOptions& options = {});
MemoryTrace trace_co_matmul(const DenseInput& dims, const TraceOptions& options = {});

}  // namespace ice
