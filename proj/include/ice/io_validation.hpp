#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "ice/cachesim.hpp"
#include "ice/traces.hpp"

namespace ice {

enum class Kernel { csr, csc, csb, basic_matmul, co_matmul };

std::string_view to_string(Kernel kernel);
Kernel parse_kernel(std::string_view text);
std::span<const Kernel> all_kernels();

// Geometry and inputs used to compare closed-form I/O with simulated misses.
// SpMV kernels run on random size x size patterns; matmuls on size^3.
struct IoValidationConfig {
    std::uint64_t line_elements = 8;
    std::uint64_t spmv_cache_elements = 32;
    std::uint64_t matmul_cache_elements = 512;
    double density = 0.2;
    std::uint64_t block_dim = 0;  // 0: ceil(sqrt(size))
    std::uint64_t seed = 42;
    std::uint64_t trace_cap = kDefaultTraceCap;
    double lower_ratio = 0.25;
    double upper_ratio = 4.0;
};

struct IoCheck {
    Kernel kernel = Kernel::csr;
    std::uint64_t size = 0;
    std::uint64_t closed_form_io = 0;
    std::uint64_t simulated_misses = 0;
    double ratio = 0;  // simulated / closed form
    bool within_bounds = false;
};

CacheGeometry oracle_geometry(Kernel kernel, const IoValidationConfig& config);

// The random pattern for a given size depends only on (seed, size), so CSR,
// CSC and CSB at the same size see the same matrix.
SparsePattern oracle_pattern(std::uint64_t size, const IoValidationConfig& config);

MemoryTrace oracle_trace(Kernel kernel, std::uint64_t size, const IoValidationConfig& config,
                         std::uint32_t cores = 1);

IoCheck validate_io(Kernel kernel, std::uint64_t size, const IoValidationConfig& config);

}  // namespace ice
