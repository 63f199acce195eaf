#include <array>
#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "ice/cli.hpp"

namespace ice::cli {
namespace {

std::string xml_escape(std::string_view s) {
    std::string out;
    for (const char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out.push_back(c);
        }
    }
    return out;
}

std::string csv_field(std::string_view s) {
    if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
    std::string out = "\"";
    for (const char c : s) {
        if (c == '"') out += '"';
        out.push_back(c);
    }
    return out + "\"";
}

std::string boundedness_cell(const ComparisonRow& row) {
    if (row.boundedness_a == row.boundedness_b) return std::string(to_string(row.boundedness_a));
    return fmt::format("{}/{}", to_string(row.boundedness_a), to_string(row.boundedness_b));
}

constexpr std::array kPalette{"#4472c4", "#ed7d31", "#70ad47", "#ffc000", "#5b9bd5", "#a5a5a5"};

}  // namespace

std::string format_ratio(double ratio) { return fmt::format("{:.4g}", ratio); }

std::string comparison_csv(std::span<const ComparisonRow> rows) {
    std::string out = "input,platform,energy_a_nJ,energy_b_nJ,ratio,boundedness\n";
    for (const auto& r : rows) {
        out += fmt::format("{},{},{:.10g},{:.10g},{},{}\n", csv_field(r.input_name), csv_field(r.platform_name),
                           r.energy_a, r.energy_b, format_ratio(r.ratio), boundedness_cell(r));
    }
    return out;
}

std::string ratio_chart_svg(std::span<const ComparisonRow> rows, std::string_view title) {
    std::vector<std::string> inputs;
    std::vector<std::string> platforms;
    for (const auto& r : rows) {
        if (std::find(inputs.begin(), inputs.end(), r.input_name) == inputs.end()) inputs.push_back(r.input_name);
        if (std::find(platforms.begin(), platforms.end(), r.platform_name) == platforms.end()) {
            platforms.push_back(r.platform_name);
        }
    }

    double max_ratio = 1.0;
    for (const auto& r : rows) max_ratio = std::max(max_ratio, r.ratio);
    const double y_max = std::ceil(max_ratio * 1.1);

    const double left = 60;
    const double top = 40;
    const double plot_h = 300;
    const double bar_w = 18;
    const double group_gap = 20;
    const double group_w = bar_w * static_cast<double>(std::max<std::size_t>(platforms.size(), 1)) + group_gap;
    const double plot_w = std::max(200.0, group_w * static_cast<double>(inputs.size()));
    const double width = left + plot_w + 160;
    const double height = top + plot_h + 90;
    const auto y_of = [&](double v) { return top + plot_h - v / y_max * plot_h; };

    std::string svg = fmt::format(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{:.0f}\" height=\"{:.0f}\" font-family=\"sans-serif\" "
        "font-size=\"11\">\n",
        width, height);
    svg += fmt::format("<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");
    svg += fmt::format("<text x=\"{:.1f}\" y=\"20\" font-size=\"14\">{}</text>\n", left, xml_escape(title));

    const int ticks = 5;
    for (int t = 0; t <= ticks; ++t) {
        const double v = y_max * t / ticks;
        svg += fmt::format("<line x1=\"{:.1f}\" y1=\"{:.1f}\" x2=\"{:.1f}\" y2=\"{:.1f}\" stroke=\"#ddd\"/>\n", left,
                           y_of(v), left + plot_w, y_of(v));
        svg += fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\" text-anchor=\"end\">{:.3g}</text>\n", left - 6,
                           y_of(v) + 4, v);
    }
    svg += fmt::format("<text x=\"15\" y=\"{:.1f}\" transform=\"rotate(-90 15 {:.1f})\" text-anchor=\"middle\">"
                       "energy ratio A/B</text>\n",
                       top + plot_h / 2, top + plot_h / 2);

    for (std::size_t g = 0; g < inputs.size(); ++g) {
        const double gx = left + group_gap / 2 + group_w * static_cast<double>(g);
        for (const auto& r : rows) {
            if (r.input_name != inputs[g]) continue;
            const auto pi = static_cast<std::size_t>(
                std::find(platforms.begin(), platforms.end(), r.platform_name) - platforms.begin());
            const double x = gx + bar_w * static_cast<double>(pi);
            svg += fmt::format(
                "<rect x=\"{:.1f}\" y=\"{:.1f}\" width=\"{:.1f}\" height=\"{:.1f}\" fill=\"{}\">"
                "<title>{} / {}: {}</title></rect>\n",
                x, y_of(r.ratio), bar_w - 2, top + plot_h - y_of(r.ratio), kPalette[pi % kPalette.size()],
                xml_escape(r.input_name), xml_escape(r.platform_name), format_ratio(r.ratio));
        }
        const double label_x = gx + (group_w - group_gap) / 2;
        svg += fmt::format(
            "<text x=\"{:.1f}\" y=\"{:.1f}\" text-anchor=\"end\" transform=\"rotate(-40 {:.1f} {:.1f})\">{}</text>\n",
            label_x, top + plot_h + 14, label_x, top + plot_h + 14, xml_escape(inputs[g]));
    }

    svg += fmt::format(
        "<line x1=\"{:.1f}\" y1=\"{:.1f}\" x2=\"{:.1f}\" y2=\"{:.1f}\" stroke=\"red\" stroke-dasharray=\"6 4\"/>\n",
        left, y_of(1.0), left + plot_w, y_of(1.0));
    svg += fmt::format("<line x1=\"{0:.1f}\" y1=\"{1:.1f}\" x2=\"{0:.1f}\" y2=\"{2:.1f}\" stroke=\"black\"/>\n", left,
                       top, top + plot_h);
    svg += fmt::format("<line x1=\"{0:.1f}\" y1=\"{1:.1f}\" x2=\"{2:.1f}\" y2=\"{1:.1f}\" stroke=\"black\"/>\n", left,
                       top + plot_h, left + plot_w);

    for (std::size_t p = 0; p < platforms.size(); ++p) {
        const double ly = top + 16 * static_cast<double>(p);
        svg += fmt::format("<rect x=\"{:.1f}\" y=\"{:.1f}\" width=\"10\" height=\"10\" fill=\"{}\"/>\n",
                           left + plot_w + 15, ly, kPalette[p % kPalette.size()]);
        svg += fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\">{}</text>\n", left + plot_w + 30, ly + 9,
                           xml_escape(platforms[p]));
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace ice::cli
