#include "panast/charts.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "panast/error.hpp"

namespace panast {
namespace {

std::string escape_xml(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

// Fixed precision keeps goldens stable; "-0.000" is normalized to "0.000".
std::string num(double v) {
    std::string s = fmt::format("{:.3f}", v);
    if (s == "-0.000") s = "0.000";
    return s;
}

struct Point {
    double x;
    double y;
};

Point polar(double cx, double cy, double radius, std::size_t axis) {
    const double angle = -std::numbers::pi / 2.0 +
                         2.0 * std::numbers::pi * static_cast<double>(axis) / static_cast<double>(kSentimentCount);
    return {cx + radius * std::cos(angle), cy + radius * std::sin(angle)};
}

std::string polygon_points(double cx, double cy, const PerSentiment<double>& radii) {
    std::string out;
    for (std::size_t i = 0; i < kSentimentCount; ++i) {
        const Point pt = polar(cx, cy, radii[i], i);
        if (i) out += ' ';
        out += num(pt.x) + "," + num(pt.y);
    }
    return out;
}

}  // namespace

double kiviat_radius(double p, double rim_radius) noexcept { return (p + 1.0) / 2.0 * rim_radius; }

std::string render_kiviat(const ScoreVector& vector, const std::string& title, const KiviatLayout& layout) {
    const double c = layout.center();
    std::string svg;
    svg += fmt::format(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{0}\" viewBox=\"0 0 {0} {0}\">\n",
        num(layout.size));
    svg += "<style>.grid{fill:none;stroke:#cccccc;stroke-width:1}"
           ".axis{stroke:#888888;stroke-width:1}"
           ".score{fill:#d62728;fill-opacity:0.25;stroke:#d62728;stroke-width:2}"
           ".vertex{fill:#d62728}"
           "text{font-family:sans-serif;font-size:12px}</style>\n";
    svg += fmt::format("<rect width=\"{0}\" height=\"{0}\" fill=\"#ffffff\"/>\n", num(layout.size));
    if (!title.empty())
        svg += fmt::format("<text class=\"title\" x=\"{}\" y=\"18\" text-anchor=\"middle\">{}</text>\n",
                           num(c), escape_xml(title));

    // Reference rings at p = -0.5, 0, 0.5, 1.
    for (double p : {-0.5, 0.0, 0.5, 1.0}) {
        PerSentiment<double> ring{};
        ring.fill(kiviat_radius(p, layout.rim_radius));
        svg += fmt::format("<polygon class=\"grid\" data-p=\"{}\" points=\"{}\"/>\n", num(p),
                           polygon_points(c, c, ring));
    }

    for (std::size_t i = 0; i < kSentimentCount; ++i) {
        const Point rim = polar(c, c, layout.rim_radius, i);
        svg += fmt::format("<line class=\"axis\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>\n", num(c), num(c),
                           num(rim.x), num(rim.y));
    }

    PerSentiment<double> radii{};
    for (std::size_t i = 0; i < kSentimentCount; ++i)
        radii[i] = kiviat_radius(vector.scores[i].p, layout.rim_radius);
    svg += fmt::format("<polygon class=\"score\" points=\"{}\"/>\n", polygon_points(c, c, radii));

    for (std::size_t i = 0; i < kSentimentCount; ++i) {
        const Sentiment s = kAllSentiments[i];
        const Point v = polar(c, c, radii[i], i);
        svg += fmt::format("<circle class=\"vertex\" data-sentiment=\"{}\" data-p=\"{:.7f}\" cx=\"{}\" "
                           "cy=\"{}\" r=\"3\"/>\n",
                           name(s), vector.scores[i].p, num(v.x), num(v.y));
    }

    for (std::size_t i = 0; i < kSentimentCount; ++i) {
        const Point at = polar(c, c, layout.label_radius, i);
        const double dx = at.x - c;
        const char* anchor = std::abs(dx) < 1.0 ? "middle" : (dx > 0 ? "start" : "end");
        svg += fmt::format("<text class=\"label\" x=\"{}\" y=\"{}\" text-anchor=\"{}\" "
                           "dominant-baseline=\"middle\">{}</text>\n",
                           num(at.x), num(at.y), anchor, escape_xml(display_name(kAllSentiments[i])));
    }
    svg += "</svg>\n";
    return svg;
}

SparklineChart render_sparklines(const TimeSeries& series, const std::vector<Sentiment>& sentiments,
                                 const std::vector<Date>& markers, const std::string& title) {
    if (series.points.empty()) throw Error(ErrorKind::EmptyEvent, "cannot chart an empty time series");

    constexpr double kLabelWidth = 110.0;
    constexpr double kPlotWidth = 480.0;
    constexpr double kRowHeight = 48.0;
    constexpr double kRowGap = 10.0;
    constexpr double kTop = 30.0;
    constexpr double kRight = 60.0;
    constexpr double kAxisHeight = 24.0;

    SparklineChart chart;
    const Date first = series.points.front().date;
    const Date last = series.points.back().date;
    const double span = static_cast<double>((last - first).count());
    auto x_of = [&](Date d) {
        if (span == 0.0) return kLabelWidth + kPlotWidth / 2.0;
        return kLabelWidth + kPlotWidth * static_cast<double>((d - first).count()) / span;
    };

    const double plot_bottom = kTop + static_cast<double>(sentiments.size()) * (kRowHeight + kRowGap);
    const double width = kLabelWidth + kPlotWidth + kRight;
    const double height = plot_bottom + kAxisHeight;

    std::string svg;
    svg += fmt::format("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{1}\" "
                       "viewBox=\"0 0 {0} {1}\">\n",
                       num(width), num(height));
    svg += "<style>.baseline{stroke:#cccccc;stroke-width:1;stroke-dasharray:2,2}"
           ".spark{fill:none;stroke:#1f77b4;stroke-width:1.5}"
           ".dot{fill:#1f77b4}"
           ".marker{stroke:#d62728;stroke-width:1}"
           "text{font-family:sans-serif;font-size:11px}</style>\n";
    svg += fmt::format("<rect width=\"{}\" height=\"{}\" fill=\"#ffffff\"/>\n", num(width), num(height));
    if (!title.empty())
        svg += fmt::format("<text class=\"title\" x=\"{}\" y=\"16\">{}</text>\n", num(kLabelWidth),
                           escape_xml(title));

    for (const Date m : markers) {
        if (m < first || m > last) {
            chart.warnings.push_back(fmt::format("marker {} outside series range {}..{}; ignored",
                                                 format_date(m), format_date(first), format_date(last)));
            continue;
        }
        svg += fmt::format("<line class=\"marker\" data-date=\"{}\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>\n",
                           format_date(m), num(x_of(m)), num(kTop - 4.0), num(x_of(m)), num(plot_bottom));
    }

    for (std::size_t row = 0; row < sentiments.size(); ++row) {
        const Sentiment s = sentiments[row];
        const double top = kTop + static_cast<double>(row) * (kRowHeight + kRowGap);
        // p in [-1, 1] maps to [top + kRowHeight, top].
        auto y_of = [&](double p) { return top + (1.0 - (p + 1.0) / 2.0) * kRowHeight; };

        svg += fmt::format("<g class=\"sparkline\" data-sentiment=\"{}\">\n", name(s));
        svg += fmt::format("<text class=\"label\" x=\"4\" y=\"{}\" dominant-baseline=\"middle\">{}</text>\n",
                           num(top + kRowHeight / 2.0), escape_xml(display_name(s)));
        svg += fmt::format("<line class=\"baseline\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>\n",
                           num(kLabelWidth), num(y_of(0.0)), num(kLabelWidth + kPlotWidth), num(y_of(0.0)));

        // Split into runs of consecutive days.
        std::size_t i = 0;
        const auto& pts = series.points;
        while (i < pts.size()) {
            std::size_t j = i + 1;
            while (j < pts.size() && (pts[j].date - pts[j - 1].date).count() == 1) ++j;
            if (j - i == 1) {
                svg += fmt::format("<circle class=\"dot\" cx=\"{}\" cy=\"{}\" r=\"2\"/>\n", num(x_of(pts[i].date)),
                                   num(y_of(pts[i].vector[s].p)));
            } else {
                std::string points;
                for (std::size_t k = i; k < j; ++k) {
                    if (k > i) points += ' ';
                    points += num(x_of(pts[k].date)) + "," + num(y_of(pts[k].vector[s].p));
                }
                svg += fmt::format("<polyline class=\"spark\" points=\"{}\"/>\n", points);
            }
            i = j;
        }
        const double last_p = pts.back().vector[s].p;
        svg += fmt::format("<text class=\"value\" x=\"{}\" y=\"{}\" dominant-baseline=\"middle\">{:.4f}</text>\n",
                           num(kLabelWidth + kPlotWidth + 6.0), num(y_of(last_p)), last_p);
        svg += "</g>\n";
    }

    svg += fmt::format("<text class=\"axis-label\" x=\"{}\" y=\"{}\">{}</text>\n", num(kLabelWidth),
                       num(plot_bottom + 16.0), format_date(first));
    svg += fmt::format("<text class=\"axis-label\" x=\"{}\" y=\"{}\" text-anchor=\"end\">{}</text>\n",
                       num(kLabelWidth + kPlotWidth), num(plot_bottom + 16.0), format_date(last));
    svg += "</svg>\n";
    chart.svg = std::move(svg);
    return chart;
}

}  // namespace panast
