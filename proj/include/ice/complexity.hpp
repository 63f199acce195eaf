#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace ice {

struct PlatformProfile;

// work and span count flops, io counts cache-line transfers.
struct ComplexityTriple {
    std::uint64_t work = 0;
    std::uint64_t span = 0;
    std::uint64_t io = 0;

    // work >= span >= 1
    void validate() const;
    bool operator==(const ComplexityTriple&) const = default;
};

// Structural description of a sparse matrix; no coordinates are stored.
struct SparseInput {
    std::string name;
    std::uint64_t rows = 0;      // n
    std::uint64_t cols = 0;      // m
    std::uint64_t nonzeros = 0;  // nz
    std::optional<std::uint64_t> max_nnz_per_row;  // nr
    std::uint64_t max_nnz_per_col = 0;             // nc
    std::optional<std::uint64_t> block_dim;        // beta

    void validate() const;

    // Explicit block_dim, or ceil(sqrt(n)) clamped to [1, n].
    [[nodiscard]] std::uint64_t effective_block_dim() const;

    // Copy with nr := nc, for square matrices whose row bound is unknown.
    [[nodiscard]] SparseInput with_symmetric_row_bound() const;
};

// C (n x p) = A (n x m) * B (m x p)
struct DenseInput {
    std::uint64_t n = 0;
    std::uint64_t m = 0;
    std::uint64_t p = 0;

    void validate() const;
    [[nodiscard]] std::string label() const;  // "n x m x p" as "NxMxP"

    // Accepts "N" (square) or "NxMxP".
    static DenseInput parse(std::string_view text);
    bool operator==(const DenseInput&) const = default;
};

std::uint64_t ceil_log2(std::uint64_t value);

ComplexityTriple csr_complexity(const SparseInput& input);
ComplexityTriple csc_complexity(const SparseInput& input);
ComplexityTriple csb_complexity(const SparseInput& input, std::uint64_t cacheline_elements);
ComplexityTriple basic_matmul_complexity(const DenseInput& input, std::uint64_t cacheline_elements,
                                         std::optional<std::uint64_t> core_count);
ComplexityTriple co_matmul_complexity(const DenseInput& input, std::uint64_t cacheline_elements,
                                      std::uint64_t private_cache_elements,
                                      std::optional<std::uint64_t> core_count);

enum class InputKind { sparse, dense };
enum class Boundedness { cpu_bound, memory_bound };

std::string_view to_string(InputKind kind);
std::string_view to_string(Boundedness b);

using AlgorithmInput = std::variant<SparseInput, DenseInput>;

std::string input_label(const AlgorithmInput& input);

// Machine quantities a complexity model may depend on.
struct MachineShape {
    std::uint64_t cacheline_elements = 8;
    std::uint64_t private_cache_elements = 32768;
    std::optional<std::uint64_t> core_count;

    static MachineShape of(const PlatformProfile& profile);
};

struct AlgorithmModel {
    std::string name;
    InputKind kind = InputKind::sparse;
    Boundedness boundedness_hint = Boundedness::memory_bound;
    std::function<ComplexityTriple(const AlgorithmInput&, const MachineShape&)> evaluate;
};

// csr, csc, csb, basic-matmul, co-matmul
std::span<const AlgorithmModel> algorithm_registry();
const AlgorithmModel& find_algorithm(std::string_view name);

// Nine reference sparse matrices with (n, m, nz, nc).
std::vector<SparseInput> builtin_matrix_catalog();
const SparseInput& find_matrix(std::span<const SparseInput> matrices, std::string_view name);

// CSV with header "name,n,m,nz,nc,nr,beta"; nr and beta may be empty.
std::vector<SparseInput> read_matrices(std::istream& in);
std::vector<SparseInput> read_matrices_file(const std::string& path);
void write_matrices(std::ostream& out, std::span<const SparseInput> matrices);

}  // namespace ice
