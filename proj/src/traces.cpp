#include "ice/traces.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "ice/error.hpp"
#include "ice/morton.hpp"

namespace ice {
namespace {

using Stream = std::vector<std::uint64_t>;

constexpr std::uint64_t region(unsigned index) { return index * kRegionStride; }

void check_cap(std::uint64_t accesses, const TraceOptions& options) {
    if (options.cores == 0) fail(ErrorCode::invalid_argument, "trace needs at least one core");
    if (accesses > options.access_cap) {
        fail(ErrorCode::trace_too_large,
             fmt::format("trace would have {} accesses, cap is {}", accesses, options.access_cap));
    }
}

void check_pattern(const SparsePattern& m) {
    if (m.rows == 0 || m.cols == 0 || m.entries.empty()) {
        fail(ErrorCode::invalid_argument, "sparse pattern is empty");
    }
    for (const auto& [r, c] : m.entries) {
        if (r >= m.rows || c >= m.cols) fail(ErrorCode::invalid_argument, "nonzero coordinate out of range");
    }
}

std::pair<std::uint64_t, std::uint64_t> chunk(std::uint64_t count, std::uint32_t cores, std::uint32_t core) {
    return {count * core / cores, count * (core + 1) / cores};
}

MemoryTrace interleave(const std::vector<Stream>& streams) {
    MemoryTrace trace(static_cast<std::uint32_t>(streams.size()));
    std::size_t total = 0;
    std::size_t longest = 0;
    for (const auto& s : streams) {
        total += s.size();
        longest = std::max(longest, s.size());
    }
    trace.reserve(total);
    for (std::size_t step = 0; step < longest; ++step) {
        for (std::uint32_t core = 0; core < streams.size(); ++core) {
            if (step < streams[core].size()) trace.push(core, streams[core][step]);
        }
    }
    return trace;
}

// Row offsets into a row-major (or column-major when transposed) sort of the entries.
std::vector<std::uint64_t> line_offsets(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& sorted,
                                        std::uint64_t lines, bool by_column) {
    std::vector<std::uint64_t> offsets(lines + 1, 0);
    for (const auto& e : sorted) ++offsets[(by_column ? e.second : e.first) + 1];
    for (std::uint64_t i = 0; i < lines; ++i) offsets[i + 1] += offsets[i];
    return offsets;
}

class CoMatmulTracer {
public:
    CoMatmulTracer(const DenseInput& d, Stream& out) : d_(d), out_(out) {}

    void run(std::uint64_t i0, std::uint64_t n, std::uint64_t k0, std::uint64_t m, std::uint64_t j0, std::uint64_t p) {
        if (n == 0 || m == 0 || p == 0) return;
        if (n == 1 && m == 1 && p == 1) {
            out_.push_back(region(0) + i0 * d_.m + k0);
            out_.push_back(region(1) + k0 * d_.p + j0);
            out_.push_back(region(2) + i0 * d_.p + j0);
            return;
        }
        if (n >= m && n >= p) {
            const std::uint64_t h = n / 2;
            run(i0, h, k0, m, j0, p);
            run(i0 + h, n - h, k0, m, j0, p);
        } else if (m >= p) {
            const std::uint64_t h = m / 2;
            run(i0, n, k0, h, j0, p);
            run(i0, n, k0 + h, m - h, j0, p);
        } else {
            const std::uint64_t h = p / 2;
            run(i0, n, k0, m, j0, h);
            run(i0, n, k0, m, j0 + h, p - h);
        }
    }

private:
    const DenseInput& d_;
    Stream& out_;
};

}  // namespace

SparseInput SparsePattern::describe(std::string name, std::optional<std::uint64_t> block_dim) const {
    std::vector<std::uint64_t> per_row(rows, 0);
    std::vector<std::uint64_t> per_col(cols, 0);
    for (const auto& [r, c] : entries) {
        ++per_row[r];
        ++per_col[c];
    }
    SparseInput s{
        .name = std::move(name),
        .rows = rows,
        .cols = cols,
        .nonzeros = entries.size(),
        .max_nnz_per_row = per_row.empty() ? 0 : *std::max_element(per_row.begin(), per_row.end()),
        .max_nnz_per_col = per_col.empty() ? 0 : *std::max_element(per_col.begin(), per_col.end()),
        .block_dim = block_dim,
    };
    s.validate();
    return s;
}

SparsePattern SparsePattern::identity(std::uint64_t n) {
    SparsePattern m{n, n, {}};
    for (std::uint64_t i = 0; i < n; ++i) m.entries.emplace_back(i, i);
    return m;
}

SparsePattern SparsePattern::random(std::uint64_t rows, std::uint64_t cols, double density, std::mt19937_64& rng) {
    if (!(density > 0 && density <= 1)) fail(ErrorCode::invalid_argument, "density must lie in (0, 1]");
    SparsePattern m{rows, cols, {}};
    const auto threshold = static_cast<std::uint64_t>(density * 18446744073709551615.0L);
    for (std::uint64_t r = 0; r < rows; ++r) {
        for (std::uint64_t c = 0; c < cols; ++c) {
            if (density >= 1 || rng() < threshold) m.entries.emplace_back(r, c);
        }
    }
    return m;
}

MemoryTrace trace_csr(const SparsePattern& matrix, const TraceOptions& options) {
    check_pattern(matrix);
    check_cap(2 * matrix.nonzeros() + matrix.rows, options);
    auto sorted = matrix.entries;
    std::sort(sorted.begin(), sorted.end());
    const auto offsets = line_offsets(sorted, matrix.rows, false);

    // Regions: 0 = (value, column) pairs, 1 = x, 2 = y.
    std::vector<Stream> streams(options.cores);
    for (std::uint32_t core = 0; core < options.cores; ++core) {
        const auto [first, last] = chunk(matrix.rows, options.cores, core);
        for (std::uint64_t row = first; row < last; ++row) {
            for (std::uint64_t k = offsets[row]; k < offsets[row + 1]; ++k) {
                streams[core].push_back(region(0) + k);
                streams[core].push_back(region(1) + sorted[k].second);
            }
            streams[core].push_back(region(2) + row);
        }
    }
    return interleave(streams);
}

MemoryTrace trace_csc(const SparsePattern& matrix, const TraceOptions& options) {
    check_pattern(matrix);
    check_cap(2 * matrix.nonzeros() + matrix.cols, options);
    auto sorted = matrix.entries;
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        return std::pair(a.second, a.first) < std::pair(b.second, b.first);
    });
    const auto offsets = line_offsets(sorted, matrix.cols, true);

    // Regions: 0 = (value, row) pairs, 1 = x, 2 = y.
    std::vector<Stream> streams(options.cores);
    for (std::uint32_t core = 0; core < options.cores; ++core) {
        const auto [first, last] = chunk(matrix.cols, options.cores, core);
        for (std::uint64_t col = first; col < last; ++col) {
            streams[core].push_back(region(1) + col);
            for (std::uint64_t k = offsets[col]; k < offsets[col + 1]; ++k) {
                streams[core].push_back(region(0) + k);
                streams[core].push_back(region(2) + sorted[k].first);
            }
        }
    }
    return interleave(streams);
}

MemoryTrace trace_csb(const SparsePattern& matrix, std::uint64_t block_dim, const TraceOptions& options) {
    check_pattern(matrix);
    if (block_dim < 1 || block_dim > matrix.rows) fail(ErrorCode::invalid_argument, "block_dim must lie in [1, n]");
    const std::uint64_t block_rows = (matrix.rows + block_dim - 1) / block_dim;
    const std::uint64_t block_cols = (matrix.cols + block_dim - 1) / block_dim;
    check_cap(3 * matrix.nonzeros() + block_rows * block_cols, options);

    struct Keyed {
        std::uint64_t block;
        std::uint64_t z;
        std::uint64_t row;
        std::uint64_t col;
    };
    std::vector<Keyed> keyed;
    keyed.reserve(matrix.entries.size());
    for (const auto& [r, c] : matrix.entries) {
        const std::uint64_t block = (r / block_dim) * block_cols + c / block_dim;
        const auto z = morton_encode(static_cast<std::uint32_t>(r % block_dim), static_cast<std::uint32_t>(c % block_dim));
        keyed.push_back({block, z, r, c});
    }
    std::sort(keyed.begin(), keyed.end(),
              [](const Keyed& a, const Keyed& b) { return std::pair(a.block, a.z) < std::pair(b.block, b.z); });
    std::vector<std::uint64_t> block_start(block_rows * block_cols + 1, 0);
    for (const auto& k : keyed) ++block_start[k.block + 1];
    for (std::size_t i = 0; i + 1 < block_start.size(); ++i) block_start[i + 1] += block_start[i];

    // Regions: 0 = nonzeros, 1 = x, 2 = y, 3 = block pointers.
    std::vector<Stream> streams(options.cores);
    for (std::uint32_t core = 0; core < options.cores; ++core) {
        const auto [first, last] = chunk(block_rows, options.cores, core);
        for (std::uint64_t br = first; br < last; ++br) {
            for (std::uint64_t bc = 0; bc < block_cols; ++bc) {
                const std::uint64_t block = br * block_cols + bc;
                streams[core].push_back(region(3) + block);
                for (std::uint64_t k = block_start[block]; k < block_start[block + 1]; ++k) {
                    streams[core].push_back(region(0) + k);
                    streams[core].push_back(region(1) + keyed[k].col);
                    streams[core].push_back(region(2) + keyed[k].row);
                }
            }
        }
    }
    return interleave(streams);
}

MemoryTrace trace_basic_matmul(const DenseInput& d, const TraceOptions& options) {
    d.validate();
    check_cap(3 * d.n * d.m * d.p, options);
    // i-k-j order: each row of C is built while streaming all of B.
    std::vector<Stream> streams(options.cores);
    for (std::uint32_t core = 0; core < options.cores; ++core) {
        const auto [first, last] = chunk(d.n, options.cores, core);
        for (std::uint64_t i = first; i < last; ++i) {
            for (std::uint64_t k = 0; k < d.m; ++k) {
                for (std::uint64_t j = 0; j < d.p; ++j) {
                    streams[core].push_back(region(0) + i * d.m + k);
                    streams[core].push_back(region(1) + k * d.p + j);
                    streams[core].push_back(region(2) + i * d.p + j);
                }
            }
        }
    }
    return interleave(streams);
}

MemoryTrace trace_co_matmul(const DenseInput& d, const TraceOptions& options) {
    d.validate();
    check_cap(3 * d.n * d.m * d.p, options);
    std::vector<Stream> streams(options.cores);
    for (std::uint32_t core = 0; core < options.cores; ++core) {
        const auto [first, last] = chunk(d.n, options.cores, core);
        CoMatmulTracer(d, streams[core]).run(first, last - first, 0, d.m, 0, d.p);
    }
    return interleave(streams);
}

}  // namespace ice
