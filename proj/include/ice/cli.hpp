#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ice/complexity.hpp"
#include "ice/energy.hpp"

namespace ice::cli {

// Process exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitUsage = 2;       // unknown names, bad arguments, bad files
inline constexpr int kExitValidation = 3;  // a checked property was violated

struct SweepSpec {
    std::vector<std::string> algorithms;
    std::vector<std::string> inputs;
    std::vector<std::string> platforms;
    BoundMode bound_mode = BoundMode::automatic;
};

struct ComparisonRow {
    std::string input_name;
    std::string platform_name;
    Nanojoules energy_a = 0;
    Nanojoules energy_b = 0;
    double ratio = 0;
    Boundedness boundedness_a = Boundedness::cpu_bound;
    Boundedness boundedness_b = Boundedness::cpu_bound;
};

// Columns: input,platform,energy_a_nJ,energy_b_nJ,ratio,boundedness
std::string comparison_csv(std::span<const ComparisonRow> rows);

// Standalone SVG: one bar group per input, one bar per platform, dashed line at 1.0.
std::string ratio_chart_svg(std::span<const ComparisonRow> rows, std::string_view title);

// Ratio with four significant figures.
std::string format_ratio(double ratio);

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ice::cli
