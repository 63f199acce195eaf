#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <fmt/format.h>

#include "ice/complexity.hpp"
#include "ice/error.hpp"
#include "ice/platform.hpp"

namespace ice {
namespace {

constexpr std::string_view kHeader = "name,n,m,nz,nc,nr,beta";

SparseInput entry(std::string name, std::uint64_t n, std::uint64_t m, std::uint64_t nz, std::uint64_t nc) {
    SparseInput s;
    s.name = std::move(name);
    s.rows = n;
    s.cols = m;
    s.nonzeros = nz;
    s.max_nnz_per_col = nc;
    return s;
}

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(trim(cell));
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

std::optional<std::uint64_t> parse_count(const std::string& cell, std::size_t line_no, std::string_view field,
                                         bool required) {
    if (cell.empty()) {
        if (required) fail(ErrorCode::parse_error, fmt::format("line {}: field '{}' is missing", line_no, field));
        return std::nullopt;
    }
    std::size_t used = 0;
    std::uint64_t value = 0;
    try {
        if (cell.front() == '-') throw std::invalid_argument("negative");
        value = std::stoull(cell, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != cell.size()) {
        fail(ErrorCode::parse_error, fmt::format("line {}: field '{}' is not a non-negative integer: '{}'", line_no,
                                                 field, cell));
    }
    return value;
}

}  // namespace

std::vector<SparseInput> builtin_matrix_catalog() {
    return {
        entry("bone010", 986703, 986703, 47851783, 63),
        entry("kkt_power", 2063494, 2063494, 12771361, 90),
        entry("ldoor", 952203, 952203, 42493817, 77),
        entry("parabolic_fem", 525825, 525825, 3674625, 7),
        entry("pds-100", 156243, 517577, 1096002, 7),
        entry("rajat31", 4690002, 4690002, 20316253, 1200),
        entry("Rucci1", 1977885, 109900, 7791168, 108),
        entry("sme3Dc", 42930, 42930, 3148656, 405),
        entry("torso1", 116158, 116158, 8516500, 1200),
    };
}

const SparseInput& find_matrix(std::span<const SparseInput> matrices, std::string_view name) {
    const std::string key = normalize_name(name);
    std::string known;
    for (const auto& m : matrices) {
        if (normalize_name(m.name) == key) return m;
        if (!known.empty()) known += ", ";
        known += m.name;
    }
    fail(ErrorCode::unknown_name, fmt::format("unknown matrix '{}'; known matrices: {}", name, known));
}

std::vector<SparseInput> read_matrices(std::istream& in) {
    std::vector<SparseInput> out;
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string t = trim(line);
        if (t.empty() || t.front() == '#') continue;
        if (!header_seen) {
            if (t != kHeader) {
                fail(ErrorCode::parse_error, fmt::format("line {}: expected header '{}'", line_no, kHeader));
            }
            header_seen = true;
            continue;
        }
        const auto cells = split_csv(t);
        if (cells.size() < 5 || cells.size() > 7) {
            fail(ErrorCode::parse_error, fmt::format("line {}: expected 5 to 7 columns, got {}", line_no, cells.size()));
        }
        const auto cell = [&](std::size_t i) { return i < cells.size() ? cells[i] : std::string{}; };
        if (cell(0).empty()) fail(ErrorCode::parse_error, fmt::format("line {}: field 'name' is missing", line_no));
        SparseInput s{
            .name = cell(0),
            .rows = *parse_count(cell(1), line_no, "n", true),
            .cols = *parse_count(cell(2), line_no, "m", true),
            .nonzeros = *parse_count(cell(3), line_no, "nz", true),
            .max_nnz_per_row = parse_count(cell(5), line_no, "nr", false),
            .max_nnz_per_col = *parse_count(cell(4), line_no, "nc", true),
            .block_dim = parse_count(cell(6), line_no, "beta", false),
        };
        try {
            s.validate();
        } catch (const Error& e) {
            fail(ErrorCode::parse_error, fmt::format("line {}: {}", line_no, e.what()));
        }
        out.push_back(std::move(s));
    }
    if (!header_seen) fail(ErrorCode::parse_error, "matrices file is empty");
    return out;
}

std::vector<SparseInput> read_matrices_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::invalid_argument, fmt::format("cannot open matrices file '{}'", path));
    return read_matrices(in);
}

void write_matrices(std::ostream& out, std::span<const SparseInput> matrices) {
    out << kHeader << '\n';
    const auto opt = [](const std::optional<std::uint64_t>& v) { return v ? std::to_string(*v) : std::string{}; };
    for (const auto& m : matrices) {
        out << fmt::format("{},{},{},{},{},{},{}\n", m.name, m.rows, m.cols, m.nonzeros, m.max_nnz_per_col,
                           opt(m.max_nnz_per_row), opt(m.block_dim));
    }
}

}  // namespace ice
