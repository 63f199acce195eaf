#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ice/cli.hpp"
#include "support.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = ice::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        if (!line.empty()) lines.push_back(line);
    }
    return lines;
}

std::vector<std::string> split(const std::string& line, char sep = ',') {
    std::vector<std::string> cells;
    std::istringstream in(line);
    for (std::string cell; std::getline(in, cell, sep);) cells.push_back(cell);
    return cells;
}

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "ice-cli-tests";
    fs::create_directories(dir);
    return dir / name;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("cli: list-platforms prints the eleven built-in rows") {
    const auto r = run({"list-platforms"});
    CHECK(r.code == 0);
    const auto lines = lines_of(r.out);
    CHECK(lines.size() == 12);  // header + 11
    CHECK(lines[0].find("(nJ)") != std::string::npos);
}

TEST_CASE("cli: user platform files add and override entries") {
    const auto path = scratch("extra.json");
    {
        std::ofstream f(path);
        f << R"({"platforms":[{"name":"Lab box","processor":"test","eps_op":0.5,"eps_io":10,"pi_op":0.2,"pi_io":30,"core_count":4}]})";
    }
    auto r = run({"list-platforms", "--platforms-file", path.string()});
    CHECK(r.code == 0);
    CHECK(lines_of(r.out).size() == 13);
    CHECK(r.out.find("Lab box") != std::string::npos);

    r = run({"estimate", "--algorithm", "basic-matmul", "--input", "64", "--platform", "lab-box", "--platforms-file",
             path.string()});
    CHECK(r.code == 0);

    {
        std::ofstream f(path);
        f << R"({"platforms":[{"name":"Xeon","processor":"override","eps_op":1,"eps_io":2,"pi_op":3,"pi_io":4}]})";
    }
    r = run({"list-platforms", "--platforms-file", path.string()});
    CHECK(lines_of(r.out).size() == 12);
    CHECK(r.out.find("override") != std::string::npos);
}

TEST_CASE("cli: malformed platform file exits 2 naming the field") {
    const auto path = scratch("bad.json");
    {
        std::ofstream f(path);
        f << R"({"platforms":[{"name":"X","processor":"p","eps_op":"fast","eps_io":1,"pi_op":1,"pi_io":1}]})";
    }
    const auto r = run({"list-platforms", "--platforms-file", path.string()});
    CHECK(r.code == 2);
    CHECK(r.err.find("eps_op") != std::string::npos);
    CHECK(run({"list-platforms", "--platforms-file", scratch("missing.json").string()}).code == 2);
}

TEST_CASE("cli: export-platforms is stable and readable") {
    const auto a = run({"export-platforms"});
    const auto b = run({"export-platforms"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    const auto path = scratch("exported.json");
    CHECK(run({"export-platforms", "--out", path.string()}).code == 0);
    CHECK(slurp(path) == a.out);
    CHECK(run({"list-platforms", "--platforms-file", path.string()}).code == 0);
}

TEST_CASE("cli: list-matrices") {
    const auto r = run({"list-matrices"});
    CHECK(r.code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 10);
    CHECK(lines[0] == "name,n,m,nz,nc,nr,beta");
}

TEST_CASE("cli: estimate reports the three terms") {
    auto r = run({"estimate", "--algorithm", "csc", "--input", "torso1", "--platform", "xeon", "--bound-mode",
                  "memory"});
    CHECK(r.code == 0);
    CHECK(r.out.find("total energy:       7.772437e+07 nJ") != std::string::npos);
    CHECK(r.out.find("static energy") != std::string::npos);
    CHECK(r.out.find("compute energy") != std::string::npos);
    CHECK(r.out.find("memory energy") != std::string::npos);
    CHECK(r.out.find("memory-bound") != std::string::npos);

    r = run({"estimate", "--algorithm", "csb", "--input", "torso1", "--platform", "xeon", "--bound-mode", "memory"});
    CHECK(r.out.find("total energy:       1.274132e+07 nJ") != std::string::npos);
}

TEST_CASE("cli: resolution failures exit 2") {
    auto r = run({"estimate", "--algorithm", "basic-matmul", "--input", "1024", "--platform", "Nehalem i7-950",
                  "--bound-mode", "cpu"});
    CHECK(r.code == 2);
    CHECK(r.err.find("needs-core-count") != std::string::npos);

    r = run({"estimate", "--algorithm", "csc", "--input", "torso1", "--platform", "pentium"});
    CHECK(r.code == 2);
    CHECK(r.err.find("Xeon-Phi") != std::string::npos);

    r = run({"estimate", "--algorithm", "rsb", "--input", "torso1", "--platform", "xeon"});
    CHECK(r.code == 2);
    CHECK(r.err.find("co-matmul") != std::string::npos);

    r = run({"estimate", "--algorithm", "csc", "--input", "nosuchmatrix", "--platform", "xeon"});
    CHECK(r.code == 2);
    CHECK(r.err.find("torso1") != std::string::npos);

    CHECK(run({"estimate", "--algorithm", "csc", "--input", "torso1", "--platform", "xeon", "--bound-mode", "x"})
              .code == 2);
}

TEST_CASE("cli: usage errors and help") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"estimate", "--algorithm", "csc"}).code == 2);
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"compare", "--help"}).code == 0);
}

TEST_CASE("cli: compare presets reproduce the comparison claims") {
    for (const std::string preset : {"spmv", "matmul"}) {
        const auto r = run({"compare", "--preset", preset});
        CHECK(r.code == 0);
        const auto lines = lines_of(r.out);
        REQUIRE(!lines.empty());
        CHECK(lines[0] == "input,platform,energy_a_nJ,energy_b_nJ,ratio,boundedness");
        CHECK(lines.size() == (preset == "spmv" ? 19u : 9u));
        for (std::size_t i = 1; i < lines.size(); ++i) {
            const auto cells = split(lines[i]);
            REQUIRE(cells.size() == 6);
            CHECK(std::stod(cells[4]) > 1.0);
            CHECK(cells[5] == (preset == "spmv" ? "memory-bound" : "cpu-bound"));
        }
    }
}

TEST_CASE("cli: compare rows follow input order then platform order") {
    const auto r = run({"compare", "--algorithm", "csc", "csb", "--input", "torso1", "--input", "bone010",
                        "--platform", "Xeon-Phi", "--platform", "Xeon", "--bound-mode", "memory"});
    REQUIRE(r.code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 5);
    CHECK(lines[1].rfind("torso1,Xeon-Phi,", 0) == 0);
    CHECK(lines[2].rfind("torso1,Xeon,", 0) == 0);
    CHECK(lines[3].rfind("bone010,Xeon-Phi,", 0) == 0);
    CHECK(lines[4].rfind("bone010,Xeon,", 0) == 0);
}

TEST_CASE("cli: comparing an algorithm with itself gives ratio 1") {
    const auto r = run({"compare", "--algorithm", "csb", "csb", "--input", "torso1", "--input", "sme3Dc",
                        "--platform", "xeon"});
    REQUIRE(r.code == 0);
    const auto lines = lines_of(r.out);
    for (std::size_t i = 1; i < lines.size(); ++i) CHECK(split(lines[i])[4] == "1");
}

TEST_CASE("cli: compare argument checks") {
    CHECK(run({"compare", "--algorithm", "csc", "csb", "--platform", "xeon"}).code == 2);
    CHECK(run({"compare", "--preset", "dense"}).code == 2);
    CHECK(run({"compare", "--algorithm", "csc", "--input", "torso1", "--platform", "xeon"}).code == 2);
    CHECK(run({"compare", "--preset", "matmul", "--platform", "Cortex-A9"}).code == 2);
}

TEST_CASE("cli: compare writes byte-identical CSV and an SVG chart") {
    const auto csv1 = scratch("a.csv");
    const auto csv2 = scratch("b.csv");
    const auto chart = scratch("chart.svg");
    CHECK(run({"compare", "--preset", "spmv", "--out-csv", csv1.string(), "--out-chart", chart.string()}).code == 0);
    CHECK(run({"compare", "--preset", "spmv", "--out-csv", csv2.string()}).code == 0);
    CHECK(slurp(csv1) == slurp(csv2));
    CHECK(slurp(csv1) == run({"compare", "--preset", "spmv"}).out);
    const std::string svg = slurp(chart);
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("torso1") != std::string::npos);
    CHECK(svg.find("stroke-dasharray") != std::string::npos);
}

TEST_CASE("cli: sweep") {
    const auto r = run({"sweep", "--algorithm", "csc", "--algorithm", "csb", "--input", "torso1", "--platform",
                        "xeon", "--platform", "xeon-phi"});
    CHECK(r.code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 5);
    CHECK(lines[1].rfind("csc,torso1,Xeon,8516500,1217,8516500,", 0) == 0);
    CHECK(run({"sweep", "--algorithm", "csc"}).code == 2);
}

TEST_CASE("cli: validate-lemma1") {
    auto r = run({"validate-lemma1", "--trials", "30", "--trace-len", "2000", "--seed", "42"});
    CHECK(r.code == 0);
    CHECK(r.out.find("total violations: 0") != std::string::npos);
    CHECK(r.out == run({"validate-lemma1", "--trials", "30", "--trace-len", "2000", "--seed", "42"}).out);

    r = run({"validate-lemma1", "--trials", "5", "--trace-len", "500", "--cores", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("1.0000") != std::string::npos);

    r = run({"validate-lemma1", "--trials", "3", "--trace-len", "300", "--cores", "2,4", "--kernel-sizes", "4,8"});
    CHECK(r.code == 0);
    CHECK(r.out.find("co-matmul") != std::string::npos);

    CHECK(run({"validate-lemma1", "--trace-len", "0"}).code == 2);
    CHECK(run({"validate-lemma1", "--capacity-lines", "0"}).code == 2);
}

TEST_CASE("cli: validate-io") {
    auto r = run({"validate-io", "--sizes", "32,64"});
    CHECK(r.code == 0);
    CHECK(r.out.find("flagged: 0") != std::string::npos);
    CHECK(lines_of(r.out).size() == 1 + 5 * 2 + 1);

    r = run({"validate-io", "--kernel", "basic-matmul", "--sizes", "16"});
    CHECK(r.code == 3);
    CHECK(r.out.find("OUT-OF-BOUNDS") != std::string::npos);

    CHECK(run({"validate-io", "--kernel", "coo"}).code == 2);
    CHECK(run({"validate-io", "--kernel", "co-matmul", "--sizes", "64", "--trace-cap", "1000"}).code == 2);
}

TEST_CASE("cli: dump-trace") {
    auto r = run({"dump-trace", "--kernel", "basic-matmul", "--size", "2"});
    CHECK(r.code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 24);
    CHECK(lines[0] == "0 0");
    CHECK(run({"dump-trace", "--kernel", "csr", "--size", "1"}).out == "0 0\n0 1099511627776\n0 2199023255552\n");
    r = run({"dump-trace", "--kernel", "csb", "--size", "16", "--cores", "4"});
    CHECK(r.code == 0);
    CHECK(r.out == run({"dump-trace", "--kernel", "csb", "--size", "16", "--cores", "4"}).out);
}

TEST_CASE("cli: fit") {
    const auto path = scratch("samples.csv");
    {
        std::ofstream f(path);
        f << "work,io,duration_s,energy_j\n1,0,1,3\n0,1,1,4\n0,0,1,2\n";
    }
    auto r = run({"fit", "--samples", path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("static power:    2 W") != std::string::npos);
    {
        std::ofstream f(path);
        f << "work,io,duration_s,energy_j\n1,0,1,3\n";
    }
    r = run({"fit", "--samples", path.string()});
    CHECK(r.code == 2);
    CHECK(r.err.find("insufficient-data") != std::string::npos);
}

TEST_CASE("cli: report helpers") {
    using ice::cli::ComparisonRow;
    const std::vector<ComparisonRow> rows{
        {"m1", "P", 10.0, 4.0, 2.5, ice::Boundedness::memory_bound, ice::Boundedness::memory_bound},
        {"m2", "P", 1.0, 3.0, 1.0 / 3.0, ice::Boundedness::cpu_bound, ice::Boundedness::memory_bound},
    };
    const auto csv = ice::cli::comparison_csv(rows);
    CHECK(csv == "input,platform,energy_a_nJ,energy_b_nJ,ratio,boundedness\n"
                 "m1,P,10,4,2.5,memory-bound\n"
                 "m2,P,1,3,0.3333,cpu-bound/memory-bound\n");
    CHECK(ice::cli::format_ratio(6.100213) == "6.1");
    CHECK(ice::cli::format_ratio(3.021148) == "3.021");
    const auto svg = ice::cli::ratio_chart_svg(rows, "t");
    CHECK(svg.find("</svg>") != std::string::npos);
}
