#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "ice/cachesim.hpp"
#include "ice/cli.hpp"
#include "ice/energy.hpp"
#include "ice/error.hpp"
#include "ice/io_validation.hpp"
#include "ice/lemma1.hpp"
#include "ice/platform.hpp"
#include "ice/traces.hpp"

namespace ice::cli {
namespace {

struct Catalogs {
    std::vector<PlatformProfile> platforms;
    std::vector<SparseInput> matrices;
};

// User entries replace built-in ones of the same (normalized) name, otherwise append.
template <typename T>
void merge_into(std::vector<T>& base, std::vector<T> extra) {
    for (auto& item : extra) {
        const auto key = normalize_name(item.name);
        const auto it =
            std::find_if(base.begin(), base.end(), [&](const T& b) { return normalize_name(b.name) == key; });
        if (it != base.end()) {
            *it = std::move(item);
        } else {
            base.push_back(std::move(item));
        }
    }
}

Catalogs load_catalogs(const std::string& platforms_file, const std::string& matrices_file) {
    Catalogs c{builtin_catalog(), builtin_matrix_catalog()};
    if (!platforms_file.empty()) merge_into(c.platforms, read_platforms_file(platforms_file));
    if (!matrices_file.empty()) merge_into(c.matrices, read_matrices_file(matrices_file));
    return c;
}

AlgorithmInput resolve_input(std::string_view name, const Catalogs& catalogs) {
    const std::string key = normalize_name(name);
    for (const auto& m : catalogs.matrices) {
        if (normalize_name(m.name) == key) return m;
    }
    try {
        return DenseInput::parse(name);
    } catch (const Error&) {
        std::string known;
        for (const auto& m : catalogs.matrices) known += m.name + ", ";
        fail(ErrorCode::unknown_name,
             fmt::format("unknown input '{}'; known matrices: {}or a dense size N / NxMxP", name, known));
    }
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(ErrorCode::invalid_argument, fmt::format("cannot write '{}'", path));
    out << content;
}

std::string opt_count(const std::optional<std::uint64_t>& v) { return v ? std::to_string(*v) : "-"; }

struct Cell {
    std::size_t input = 0;
    std::size_t platform = 0;
};

// Cells are evaluated concurrently; results come back in cell order.
template <typename Result, typename Fn>
std::vector<Result> evaluate_cells(const std::vector<Cell>& cells, Fn fn) {
    std::vector<std::future<Result>> futures;
    futures.reserve(cells.size());
    for (const auto& cell : cells) futures.push_back(std::async(std::launch::async, fn, cell));
    std::vector<Result> out;
    out.reserve(cells.size());
    for (auto& f : futures) out.push_back(f.get());
    return out;
}

std::vector<Cell> grid(std::size_t inputs, std::size_t platforms) {
    std::vector<Cell> cells;
    for (std::size_t i = 0; i < inputs; ++i) {
        for (std::size_t p = 0; p < platforms; ++p) cells.push_back({i, p});
    }
    return cells;
}

struct CommonFiles {
    std::string platforms_file;
    std::string matrices_file;
};

void add_file_flags(CLI::App* cmd, CommonFiles& files) {
    cmd->add_option("--platforms-file", files.platforms_file, "JSON platform catalogue merged over the built-in one");
    cmd->add_option("--matrices-file", files.matrices_file, "CSV matrix catalogue merged over the built-in one");
}

int list_platforms(const CommonFiles& files, std::ostream& out) {
    const Catalogs c = load_catalogs(files.platforms_file, files.matrices_file);
    out << fmt::format("{:<22} {:<22} {:>12} {:>12} {:>12} {:>12} {:>6} {:>8} {:>5}\n", "name", "processor",
                       "eps_op(nJ)", "pi_op(nJ)", "eps_io(nJ)", "pi_io(nJ)", "B(el)", "Z(el)", "N");
    for (const auto& p : c.platforms) {
        out << fmt::format("{:<22} {:<22} {:>12g} {:>12g} {:>12g} {:>12g} {:>6} {:>8} {:>5}\n", p.name, p.processor,
                           p.eps_op, p.pi_op, p.eps_io, p.pi_io, p.cacheline_elements, p.private_cache_elements,
                           opt_count(p.core_count));
    }
    return kExitOk;
}

int estimate_cmd(const CommonFiles& files, const std::string& algorithm, const std::string& input_name,
                 const std::string& platform_name, const std::string& mode_text, std::ostream& out) {
    const Catalogs c = load_catalogs(files.platforms_file, files.matrices_file);
    const AlgorithmModel& model = find_algorithm(algorithm);
    const AlgorithmInput input = resolve_input(input_name, c);
    const PlatformProfile& platform = find_platform(c.platforms, platform_name);
    const BoundMode mode = parse_bound_mode(mode_text);

    const ComplexityTriple t = model.evaluate(input, MachineShape::of(platform));
    const EnergyEstimate e = estimate(t, platform, mode);
    out << fmt::format("algorithm:          {}\n", model.name);
    out << fmt::format("input:              {}\n", input_label(input));
    out << fmt::format("platform:           {}\n", platform.name);
    out << fmt::format("bound mode:         {}\n", to_string(mode));
    out << fmt::format("work (flops):       {}\n", t.work);
    out << fmt::format("span (flops):       {}\n", t.span);
    out << fmt::format("io (lines):         {}\n", t.io);
    out << fmt::format("static energy:      {:.6e} nJ\n", e.static_energy);
    out << fmt::format("compute energy:     {:.6e} nJ\n", e.compute_energy);
    out << fmt::format("memory energy:      {:.6e} nJ\n", e.memory_energy);
    out << fmt::format("total energy:       {:.6e} nJ\n", e.total);
    out << fmt::format("boundedness:        {}\n", to_string(e.boundedness));
    return kExitOk;
}

struct CompareArgs {
    CommonFiles files;
    std::string preset;
    std::vector<std::string> algorithms;
    std::vector<std::string> inputs;
    std::vector<std::string> platforms;
    std::string bound_mode;
    std::string out_csv;
    std::string out_chart;
    std::string title;
};

SweepSpec build_compare_spec(const CompareArgs& a, const Catalogs& c) {
    SweepSpec spec;
    if (a.preset == "spmv") {
        spec.algorithms = {"csc", "csb"};
        for (const auto& m : builtin_matrix_catalog()) spec.inputs.push_back(m.name);
        spec.platforms = {"Xeon", "Xeon-Phi"};
        spec.bound_mode = BoundMode::memory;
    } else if (a.preset == "matmul") {
        spec.algorithms = {"basic-matmul", "co-matmul"};
        spec.inputs = {"256", "512", "1024", "2048"};
        spec.platforms = {"Xeon", "Xeon-Phi"};
        spec.bound_mode = BoundMode::cpu;
    } else if (!a.preset.empty()) {
        fail(ErrorCode::unknown_name, fmt::format("unknown preset '{}'; known presets: spmv, matmul", a.preset));
    }
    if (!a.algorithms.empty()) spec.algorithms = a.algorithms;
    if (!a.inputs.empty()) spec.inputs = a.inputs;
    if (!a.platforms.empty()) spec.platforms = a.platforms;
    if (!a.bound_mode.empty()) spec.bound_mode = parse_bound_mode(a.bound_mode);

    if (spec.algorithms.size() != 2) fail(ErrorCode::invalid_argument, "compare needs exactly two --algorithm values");
    if (spec.inputs.empty()) fail(ErrorCode::invalid_argument, "compare needs at least one --input");
    if (spec.platforms.empty()) fail(ErrorCode::invalid_argument, "compare needs at least one --platform");
    for (const auto& name : spec.algorithms) (void)find_algorithm(name);
    for (const auto& name : spec.platforms) (void)find_platform(c.platforms, name);
    for (const auto& name : spec.inputs) (void)resolve_input(name, c);
    return spec;
}

int compare_cmd(const CompareArgs& a, std::ostream& out) {
    const Catalogs c = load_catalogs(a.files.platforms_file, a.files.matrices_file);
    const SweepSpec spec = build_compare_spec(a, c);
    const AlgorithmModel& model_a = find_algorithm(spec.algorithms[0]);
    const AlgorithmModel& model_b = find_algorithm(spec.algorithms[1]);

    std::vector<AlgorithmInput> inputs;
    for (const auto& name : spec.inputs) inputs.push_back(resolve_input(name, c));
    std::vector<const PlatformProfile*> platforms;
    for (const auto& name : spec.platforms) platforms.push_back(&find_platform(c.platforms, name));

    const auto rows = evaluate_cells<ComparisonRow>(grid(inputs.size(), platforms.size()), [&](const Cell& cell) {
        const PlatformProfile& platform = *platforms[cell.platform];
        const Comparison cmp = compare(model_a, model_b, inputs[cell.input], platform, spec.bound_mode);
        return ComparisonRow{
            .input_name = input_label(inputs[cell.input]),
            .platform_name = platform.name,
            .energy_a = cmp.a.total,
            .energy_b = cmp.b.total,
            .ratio = cmp.ratio,
            .boundedness_a = cmp.a.boundedness,
            .boundedness_b = cmp.b.boundedness,
        };
    });

    const std::string csv = comparison_csv(rows);
    if (a.out_csv.empty()) {
        out << csv;
    } else {
        write_file(a.out_csv, csv);
        out << fmt::format("wrote {} rows to {}\n", rows.size(), a.out_csv);
    }
    if (!a.out_chart.empty()) {
        const std::string title =
            a.title.empty() ? fmt::format("E({}) / E({})", model_a.name, model_b.name) : a.title;
        write_file(a.out_chart, ratio_chart_svg(rows, title));
        out << fmt::format("wrote chart to {}\n", a.out_chart);
    }
    return kExitOk;
}

int sweep_cmd(const CompareArgs& a, std::ostream& out) {
    const Catalogs c = load_catalogs(a.files.platforms_file, a.files.matrices_file);
    if (a.algorithms.empty() || a.inputs.empty() || a.platforms.empty()) {
        fail(ErrorCode::invalid_argument, "sweep needs --algorithm, --input and --platform");
    }
    const BoundMode mode = a.bound_mode.empty() ? BoundMode::automatic : parse_bound_mode(a.bound_mode);
    std::vector<const AlgorithmModel*> models;
    for (const auto& name : a.algorithms) models.push_back(&find_algorithm(name));
    std::vector<AlgorithmInput> inputs;
    for (const auto& name : a.inputs) inputs.push_back(resolve_input(name, c));
    std::vector<const PlatformProfile*> platforms;
    for (const auto& name : a.platforms) platforms.push_back(&find_platform(c.platforms, name));

    std::string csv = "algorithm,input,platform,work,span,io,static_nJ,compute_nJ,memory_nJ,total_nJ,boundedness\n";
    for (const auto* model : models) {
        const auto lines = evaluate_cells<std::string>(grid(inputs.size(), platforms.size()), [&](const Cell& cell) {
            const PlatformProfile& platform = *platforms[cell.platform];
            const ComplexityTriple t = model->evaluate(inputs[cell.input], MachineShape::of(platform));
            const EnergyEstimate e = estimate(t, platform, mode);
            return fmt::format("{},{},{},{},{},{},{:.10g},{:.10g},{:.10g},{:.10g},{}\n", model->name,
                               input_label(inputs[cell.input]), platform.name, t.work, t.span, t.io, e.static_energy,
                               e.compute_energy, e.memory_energy, e.total, to_string(e.boundedness));
        });
        for (const auto& l : lines) csv += l;
    }
    if (a.out_csv.empty()) {
        out << csv;
    } else {
        write_file(a.out_csv, csv);
        out << fmt::format("wrote {}\n", a.out_csv);
    }
    return kExitOk;
}

struct LemmaArgs {
    RandomLemma1Config random;
    std::uint64_t trace_len = 10000;
    std::vector<std::uint64_t> kernel_sizes;
};

int validate_lemma1_cmd(LemmaArgs& a, std::ostream& out) {
    a.random.trace_length = a.trace_len;
    const auto summaries = lemma1_random_sweep(a.random);
    std::uint64_t violations = 0;
    out << "random traces\n";
    out << fmt::format("{:>6} {:>8} {:>11} {:>10}\n", "cores", "trials", "violations", "max_ratio");
    for (const auto& s : summaries) {
        out << fmt::format("{:>6} {:>8} {:>11} {:>10.4f}\n", s.cores, s.trials, s.violations, s.max_ratio);
        violations += s.violations;
    }
    if (!a.kernel_sizes.empty()) {
        const auto results = lemma1_kernel_sweep(a.kernel_sizes, a.random.cores, IoValidationConfig{});
        out << "kernel traces\n";
        out << fmt::format("{:<13} {:>5} {:>6} {:>10} {:>10} {:>8} {}\n", "kernel", "size", "cores", "q_p", "P*q_1",
                           "ratio", "holds");
        for (const auto& r : results) {
            out << fmt::format("{:<13} {:>5} {:>6} {:>10} {:>10} {:>8.4f} {}\n", to_string(r.kernel), r.size, r.cores,
                               r.report.q_p, r.report.p_times_q1, r.report.ratio(), r.report.holds ? "yes" : "NO");
            if (!r.report.holds) ++violations;
        }
    }
    out << fmt::format("total violations: {}\n", violations);
    return violations == 0 ? kExitOk : kExitValidation;
}

struct IoArgs {
    IoValidationConfig config;
    std::vector<std::string> kernels;
    std::vector<std::uint64_t> sizes{32, 40, 48, 56, 64};
};

std::vector<Kernel> selected_kernels(const std::vector<std::string>& names) {
    if (names.empty() || (names.size() == 1 && names[0] == "all")) {
        return {all_kernels().begin(), all_kernels().end()};
    }
    std::vector<Kernel> out;
    for (const auto& n : names) out.push_back(parse_kernel(n));
    return out;
}

int validate_io_cmd(const IoArgs& a, std::ostream& out) {
    if (a.sizes.empty()) fail(ErrorCode::invalid_argument, "at least one size is required");
    std::uint64_t flagged = 0;
    out << fmt::format("{:<13} {:>5} {:>12} {:>12} {:>8} {}\n", "kernel", "size", "closed_form", "simulated", "ratio",
                       "flag");
    for (const Kernel k : selected_kernels(a.kernels)) {
        for (const auto size : a.sizes) {
            const IoCheck c = validate_io(k, size, a.config);
            if (!c.within_bounds) ++flagged;
            out << fmt::format("{:<13} {:>5} {:>12} {:>12} {:>8.3f} {}\n", to_string(k), size, c.closed_form_io,
                               c.simulated_misses, c.ratio, c.within_bounds ? "" : "OUT-OF-BOUNDS");
        }
    }
    out << fmt::format("flagged: {} (bounds [{}, {}])\n", flagged, a.config.lower_ratio, a.config.upper_ratio);
    return flagged == 0 ? kExitOk : kExitValidation;
}

struct DumpArgs {
    IoValidationConfig config;
    std::string kernel;
    std::uint64_t size = 8;
    std::uint32_t cores = 1;
    std::string out;
};

int dump_trace_cmd(const DumpArgs& a, std::ostream& out) {
    if (a.cores == 0) fail(ErrorCode::invalid_argument, "cores must be positive");
    const MemoryTrace trace = oracle_trace(parse_kernel(a.kernel), a.size, a.config, a.cores);
    if (a.out.empty()) {
        write_trace(out, trace);
    } else {
        std::ostringstream ss;
        write_trace(ss, trace);
        write_file(a.out, ss.str());
        out << fmt::format("wrote {} accesses to {}\n", trace.size(), a.out);
    }
    return kExitOk;
}

std::vector<MeasurementSample> read_samples(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::invalid_argument, fmt::format("cannot open samples file '{}'", path));
    std::vector<MeasurementSample> samples;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#' || line.rfind("work", 0) == 0) continue;
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream ss(line);
        MeasurementSample s;
        if (!(ss >> s.work >> s.io >> s.duration_s >> s.energy_j)) {
            fail(ErrorCode::parse_error, fmt::format("samples line {}: expected work,io,duration_s,energy_j", line_no));
        }
        samples.push_back(s);
    }
    return samples;
}

int fit_cmd(const std::string& samples_path, std::ostream& out) {
    const auto samples = read_samples(samples_path);
    const FitResult r = fit_parameters(samples);
    out << fmt::format("samples:         {}\n", samples.size());
    out << fmt::format("eps_op:          {:.6e} J/flop ({:.6g} nJ)\n", r.eps_op_j, r.eps_op_j * 1e9);
    out << fmt::format("eps_io:          {:.6e} J/line ({:.6g} nJ)\n", r.eps_io_j, r.eps_io_j * 1e9);
    out << fmt::format("static power:    {:.6g} W\n", r.static_power_w);
    out << fmt::format("residual SS:     {:.6e} J^2\n", r.residual_sum_squares);
    return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Energy complexity estimates for multithreaded algorithms", "ice"};
    app.require_subcommand(1);

    CommonFiles list_files;
    auto* list_cmd = app.add_subcommand("list-platforms", "Print the platform catalogue");
    add_file_flags(list_cmd, list_files);

    CommonFiles export_files;
    std::string export_out;
    auto* export_cmd = app.add_subcommand("export-platforms", "Write the platform catalogue as JSON");
    add_file_flags(export_cmd, export_files);
    export_cmd->add_option("--out", export_out, "output path (stdout when omitted)");

    CommonFiles matrix_files;
    auto* matrices_cmd = app.add_subcommand("list-matrices", "Print the sparse matrix catalogue as CSV");
    add_file_flags(matrices_cmd, matrix_files);

    CommonFiles est_files;
    std::string est_algorithm;
    std::string est_input;
    std::string est_platform;
    std::string est_mode = "auto";
    auto* est_cmd = app.add_subcommand("estimate", "Energy estimate for one algorithm, input and platform");
    add_file_flags(est_cmd, est_files);
    est_cmd->add_option("--algorithm", est_algorithm, "csr, csc, csb, basic-matmul, co-matmul")->required();
    est_cmd->add_option("--input", est_input, "matrix name or dense size N / NxMxP")->required();
    est_cmd->add_option("--platform", est_platform, "platform name")->required();
    est_cmd->add_option("--bound-mode", est_mode, "auto, cpu or memory");

    CompareArgs cmp;
    auto* cmp_cmd = app.add_subcommand("compare", "Energy ratio of two algorithms over inputs x platforms");
    add_file_flags(cmp_cmd, cmp.files);
    cmp_cmd->add_option("--preset", cmp.preset, "spmv (CSC vs CSB) or matmul (basic vs CO)");
    cmp_cmd->add_option("--algorithm", cmp.algorithms, "the two algorithms, A then B")->expected(2);
    cmp_cmd->add_option("--input", cmp.inputs, "inputs (repeatable)");
    cmp_cmd->add_option("--platform", cmp.platforms, "platforms (repeatable)");
    cmp_cmd->add_option("--bound-mode", cmp.bound_mode, "auto, cpu or memory");
    cmp_cmd->add_option("--out-csv", cmp.out_csv, "CSV output path (stdout when omitted)");
    cmp_cmd->add_option("--out-chart", cmp.out_chart, "SVG bar chart output path");
    cmp_cmd->add_option("--title", cmp.title, "chart title");

    CompareArgs sweep;
    auto* sweep_sub = app.add_subcommand("sweep", "Energy estimates over algorithms x inputs x platforms");
    add_file_flags(sweep_sub, sweep.files);
    sweep_sub->add_option("--algorithm", sweep.algorithms, "algorithms (repeatable)");
    sweep_sub->add_option("--input", sweep.inputs, "inputs (repeatable)");
    sweep_sub->add_option("--platform", sweep.platforms, "platforms (repeatable)");
    sweep_sub->add_option("--bound-mode", sweep.bound_mode, "auto, cpu or memory");
    sweep_sub->add_option("--out-csv", sweep.out_csv, "CSV output path (stdout when omitted)");

    LemmaArgs lemma;
    auto* lemma_cmd = app.add_subcommand("validate-lemma1", "Check Q_P <= P * Q_1 on random and kernel traces");
    lemma_cmd->add_option("--trials", lemma.random.trials, "number of random traces");
    lemma_cmd->add_option("--cores", lemma.random.cores, "core counts, cycled over trials")->delimiter(',');
    lemma_cmd->add_option("--trace-len", lemma.trace_len, "accesses per random trace");
    lemma_cmd->add_option("--seed", lemma.random.seed, "RNG seed");
    lemma_cmd->add_option("--addresses", lemma.random.address_space, "distinct addresses in random traces");
    lemma_cmd->add_option("--capacity-lines", lemma.random.geometry.capacity_lines, "private cache lines");
    lemma_cmd->add_option("--line-elements", lemma.random.geometry.line_elements, "elements per line");
    lemma_cmd->add_option("--kernel-sizes", lemma.kernel_sizes, "also check kernel traces at these sizes")
        ->delimiter(',');

    IoArgs io;
    auto* io_cmd = app.add_subcommand("validate-io", "Compare closed-form I/O with simulated ideal-cache misses");
    io_cmd->add_option("--kernel", io.kernels, "kernels (default all)")->delimiter(',');
    io_cmd->add_option("--sizes", io.sizes, "problem sizes")->delimiter(',');
    io_cmd->add_option("--line-elements", io.config.line_elements, "B in elements");
    io_cmd->add_option("--spmv-cache", io.config.spmv_cache_elements, "SpMV cache size in elements");
    io_cmd->add_option("--matmul-cache", io.config.matmul_cache_elements, "matmul cache size in elements");
    io_cmd->add_option("--density", io.config.density, "random matrix density");
    io_cmd->add_option("--block-dim", io.config.block_dim, "CSB block size (0: ceil(sqrt n))");
    io_cmd->add_option("--seed", io.config.seed, "RNG seed");
    io_cmd->add_option("--trace-cap", io.config.trace_cap, "maximum accesses per trace");

    DumpArgs dump;
    auto* dump_cmd = app.add_subcommand("dump-trace", "Write a kernel trace as 'core_id address' lines");
    dump_cmd->add_option("--kernel", dump.kernel, "kernel name")->required();
    dump_cmd->add_option("--size", dump.size, "problem size");
    dump_cmd->add_option("--cores", dump.cores, "cores");
    dump_cmd->add_option("--density", dump.config.density, "random matrix density");
    dump_cmd->add_option("--block-dim", dump.config.block_dim, "CSB block size (0: ceil(sqrt n))");
    dump_cmd->add_option("--seed", dump.config.seed, "RNG seed");
    dump_cmd->add_option("--trace-cap", dump.config.trace_cap, "maximum accesses per trace");
    dump_cmd->add_option("--out", dump.out, "output path (stdout when omitted)");

    std::string samples_path;
    auto* fit_sub = app.add_subcommand("fit", "Fit eps_op, eps_io and static power from measurements");
    fit_sub->add_option("--samples", samples_path, "CSV: work,io,duration_s,energy_j")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*list_cmd) return list_platforms(list_files, out);
        if (*export_cmd) {
            const Catalogs c = load_catalogs(export_files.platforms_file, export_files.matrices_file);
            if (export_out.empty()) {
                write_platforms(out, c.platforms);
            } else {
                std::ostringstream ss;
                write_platforms(ss, c.platforms);
                write_file(export_out, ss.str());
            }
            return kExitOk;
        }
        if (*matrices_cmd) {
            const Catalogs c = load_catalogs(matrix_files.platforms_file, matrix_files.matrices_file);
            write_matrices(out, c.matrices);
            return kExitOk;
        }
        if (*est_cmd) return estimate_cmd(est_files, est_algorithm, est_input, est_platform, est_mode, out);
        if (*cmp_cmd) return compare_cmd(cmp, out);
        if (*sweep_sub) return sweep_cmd(sweep, out);
        if (*lemma_cmd) return validate_lemma1_cmd(lemma, out);
        if (*io_cmd) return validate_io_cmd(io, out);
        if (*dump_cmd) return dump_trace_cmd(dump, out);
        if (*fit_sub) return fit_cmd(samples_path, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
    return kExitUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("ice");
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace ice::cli
