#include "ice/complexity.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <cmath>

#include <fmt/format.h>

#include "ice/error.hpp"
#include "ice/platform.hpp"

namespace ice {
namespace {

std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) { return a / b + (a % b != 0 ? 1 : 0); }

std::uint64_t ceil_real(long double value) { return static_cast<std::uint64_t>(std::ceil(value)); }

// Smallest integer s with s*s >= v.
std::uint64_t ceil_sqrt(std::uint64_t v) {
    auto s = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(v)));
    while (s * s < v) ++s;
    while (s > 0 && (s - 1) * (s - 1) >= v) --s;
    return s;
}

void require_shape(std::uint64_t cacheline_elements) {
    if (cacheline_elements == 0) fail(ErrorCode::invalid_argument, "cacheline_elements must be >= 1");
}

std::uint64_t require_cores(std::optional<std::uint64_t> core_count) {
    if (!core_count) fail(ErrorCode::needs_core_count, "matmul models need the platform core count N");
    if (*core_count == 0) fail(ErrorCode::invalid_argument, "core_count must be >= 1");
    return *core_count;
}

ComplexityTriple compressed_spmv(const SparseInput& input, std::uint64_t max_per_line) {
    input.validate();
    if (input.rows < 2) {
        fail(ErrorCode::degenerate_input, fmt::format("'{}': need n >= 2 for the log2 n reduction term", input.name));
    }
    return {.work = input.nonzeros, .span = max_per_line + ceil_log2(input.rows), .io = input.nonzeros};
}

}  // namespace

void ComplexityTriple::validate() const {
    if (span < 1) fail(ErrorCode::invalid_argument, "span must be >= 1");
    if (work < span) fail(ErrorCode::invalid_argument, fmt::format("work ({}) must be >= span ({})", work, span));
}

void SparseInput::validate() const {
    const auto bad = [&](const std::string& what) {
        fail(ErrorCode::invalid_argument, fmt::format("sparse input '{}': {}", name, what));
    };
    if (rows == 0 || cols == 0) bad("rows and cols must be positive");
    if (nonzeros / cols > rows || (nonzeros / cols == rows && nonzeros % cols != 0)) bad("nz exceeds n*m");
    if (max_nnz_per_col > rows) bad("nc exceeds n");
    if (max_nnz_per_row && *max_nnz_per_row > cols) bad("nr exceeds m");
    if (block_dim && (*block_dim < 1 || *block_dim > rows)) bad("block_dim must lie in [1, n]");
}

std::uint64_t SparseInput::effective_block_dim() const {
    if (block_dim) return *block_dim;
    return std::clamp<std::uint64_t>(ceil_sqrt(rows), 1, std::max<std::uint64_t>(rows, 1));
}

SparseInput SparseInput::with_symmetric_row_bound() const {
    SparseInput copy = *this;
    copy.max_nnz_per_row = std::min(max_nnz_per_col, cols);
    return copy;
}

void DenseInput::validate() const {
    if (n == 0 || m == 0 || p == 0) fail(ErrorCode::invalid_argument, "dense dimensions must be positive");
}

std::string DenseInput::label() const { return fmt::format("{}x{}x{}", n, m, p); }

DenseInput DenseInput::parse(std::string_view text) {
    std::array<std::uint64_t, 3> dims{};
    std::size_t count = 0;
    std::string_view rest = text;
    while (true) {
        if (count == dims.size()) fail(ErrorCode::parse_error, fmt::format("bad dense size '{}'", text));
        const auto x = rest.find_first_of("xX");
        const std::string_view part = rest.substr(0, x);
        std::uint64_t v = 0;
        const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (ec != std::errc{} || ptr != part.data() + part.size() || part.empty()) {
            fail(ErrorCode::parse_error, fmt::format("bad dense size '{}'", text));
        }
        dims[count++] = v;
        if (x == std::string_view::npos) break;
        rest = rest.substr(x + 1);
    }
    DenseInput d;
    if (count == 1) {
        d = {dims[0], dims[0], dims[0]};
    } else if (count == 3) {
        d = {dims[0], dims[1], dims[2]};
    } else {
        fail(ErrorCode::parse_error, fmt::format("dense size '{}' must be N or NxMxP", text));
    }
    d.validate();
    return d;
}

std::uint64_t ceil_log2(std::uint64_t value) {
    if (value == 0) fail(ErrorCode::invalid_argument, "log2 of zero");
    return static_cast<std::uint64_t>(std::bit_width(value - 1));
}

ComplexityTriple csr_complexity(const SparseInput& input) {
    if (!input.max_nnz_per_row) {
        fail(ErrorCode::invalid_argument, fmt::format("'{}': CSR needs max_nnz_per_row (nr)", input.name));
    }
    return compressed_spmv(input, *input.max_nnz_per_row);
}

ComplexityTriple csc_complexity(const SparseInput& input) { return compressed_spmv(input, input.max_nnz_per_col); }

ComplexityTriple csb_complexity(const SparseInput& input, std::uint64_t cacheline_elements) {
    input.validate();
    require_shape(cacheline_elements);
    const std::uint64_t n = input.rows;
    const std::uint64_t beta = input.effective_block_dim();
    const std::uint64_t nz = input.nonzeros;
    const std::uint64_t b = cacheline_elements;

    // (n/beta)^2 + nz and (n/beta)^2 + nz/B kept as exact rationals before rounding.
    const std::uint64_t beta_sq = beta * beta;
    const std::uint64_t n_sq = n * n;
    const std::uint64_t work = nz + ceil_div(n_sq, beta_sq);
    const std::uint64_t io = ceil_div(n_sq * b + nz * beta_sq, beta_sq * b);

    // ceil(log2(n/beta)) is the smallest k with beta * 2^k >= n.
    std::uint64_t levels = 0;
    while ((beta << levels) < n) ++levels;
    const std::uint64_t span = beta * levels + ceil_div(n, beta);
    return {.work = work, .span = span, .io = io};
}

ComplexityTriple basic_matmul_complexity(const DenseInput& input, std::uint64_t cacheline_elements,
                                         std::optional<std::uint64_t> core_count) {
    input.validate();
    require_shape(cacheline_elements);
    const std::uint64_t cores = require_cores(core_count);
    const auto [n, m, p] = input;
    const std::uint64_t work = 2 * n * m * p;
    return {
        .work = work,
        .span = ceil_div(work, cores),
        .io = ceil_div(n * m + n * m * p + n * p, cacheline_elements),
    };
}

ComplexityTriple co_matmul_complexity(const DenseInput& input, std::uint64_t cacheline_elements,
                                      std::uint64_t private_cache_elements,
                                      std::optional<std::uint64_t> core_count) {
    input.validate();
    require_shape(cacheline_elements);
    const std::uint64_t cores = require_cores(core_count);
    if (private_cache_elements < cacheline_elements * cacheline_elements) {
        fail(ErrorCode::invalid_cache_geometry,
             fmt::format("private cache of {} elements is smaller than B^2 = {}", private_cache_elements,
                         cacheline_elements * cacheline_elements));
    }
    const auto [n, m, p] = input;
    const std::uint64_t work = 2 * n * m * p;
    const long double b = static_cast<long double>(cacheline_elements);
    const long double io = static_cast<long double>(n + m + p) +
                           static_cast<long double>(n * m + m * p + n * p) / b +
                           static_cast<long double>(n * m * p) /
                               (b * std::sqrt(static_cast<long double>(private_cache_elements)));
    return {.work = work, .span = ceil_div(work, cores), .io = ceil_real(io)};
}

std::string_view to_string(InputKind kind) { return kind == InputKind::sparse ? "sparse" : "dense"; }

std::string_view to_string(Boundedness b) { return b == Boundedness::cpu_bound ? "cpu-bound" : "memory-bound"; }

std::string input_label(const AlgorithmInput& input) {
    if (const auto* s = std::get_if<SparseInput>(&input)) return s->name;
    return std::get<DenseInput>(input).label();
}

MachineShape MachineShape::of(const PlatformProfile& profile) {
    return {profile.cacheline_elements, profile.private_cache_elements, profile.core_count};
}

namespace {

const SparseInput& as_sparse(const AlgorithmInput& input, std::string_view model) {
    const auto* s = std::get_if<SparseInput>(&input);
    if (!s) fail(ErrorCode::invalid_argument, fmt::format("{} expects a sparse matrix input", model));
    return *s;
}

const DenseInput& as_dense(const AlgorithmInput& input, std::string_view model) {
    const auto* d = std::get_if<DenseInput>(&input);
    if (!d) fail(ErrorCode::invalid_argument, fmt::format("{} expects a dense NxMxP input", model));
    return *d;
}

std::vector<AlgorithmModel> make_registry() {
    std::vector<AlgorithmModel> r;
    r.push_back({"csr", InputKind::sparse, Boundedness::memory_bound,
                 [](const AlgorithmInput& in, const MachineShape&) { return csr_complexity(as_sparse(in, "csr")); }});
    r.push_back({"csc", InputKind::sparse, Boundedness::memory_bound,
                 [](const AlgorithmInput& in, const MachineShape&) { return csc_complexity(as_sparse(in, "csc")); }});
    r.push_back({"csb", InputKind::sparse, Boundedness::memory_bound,
                 [](const AlgorithmInput& in, const MachineShape& m) {
                     return csb_complexity(as_sparse(in, "csb"), m.cacheline_elements);
                 }});
    r.push_back({"basic-matmul", InputKind::dense, Boundedness::cpu_bound,
                 [](const AlgorithmInput& in, const MachineShape& m) {
                     return basic_matmul_complexity(as_dense(in, "basic-matmul"), m.cacheline_elements, m.core_count);
                 }});
    r.push_back({"co-matmul", InputKind::dense, Boundedness::cpu_bound,
                 [](const AlgorithmInput& in, const MachineShape& m) {
                     return co_matmul_complexity(as_dense(in, "co-matmul"), m.cacheline_elements,
                                                 m.private_cache_elements, m.core_count);
                 }});
    return r;
}

}  // namespace

std::span<const AlgorithmModel> algorithm_registry() {
    static const std::vector<AlgorithmModel> registry = make_registry();
    return registry;
}

const AlgorithmModel& find_algorithm(std::string_view name) {
    const std::string key = normalize_name(name);
    std::string known;
    for (const auto& model : algorithm_registry()) {
        if (normalize_name(model.name) == key) return model;
        if (!known.empty()) known += ", ";
        known += model.name;
    }
    fail(ErrorCode::unknown_name, fmt::format("unknown algorithm '{}'; known algorithms: {}", name, known));
}

}  // namespace ice
