#pragma once

#include <string>
#include <vector>

#include "panast/events.hpp"
#include "panast/score.hpp"

namespace panast {

struct KiviatLayout {
    double size = 480.0;  // square canvas, in SVG user units
    double rim_radius = 170.0;
    double label_radius = 196.0;

    double center() const noexcept { return size / 2.0; }
};

/// Distance from the center for score p: -1 at the center, +1 at the rim.
double kiviat_radius(double p, double rim_radius) noexcept;

/// Radar chart with one axis per sentiment in ordinal order, starting at
/// twelve o'clock and proceeding clockwise.
std::string render_kiviat(const ScoreVector& vector, const std::string& title = {},
                          const KiviatLayout& layout = {});

struct SparklineChart {
    std::string svg;
    std::vector<std::string> warnings;
};

/// One small line chart per requested sentiment on a shared date axis, with
/// optional vertical marker lines. Runs of consecutive days are joined;
/// isolated days are drawn as dots. Markers outside the series' date range
/// are skipped with a warning. Throws Error(EmptyEvent) for an empty series.
SparklineChart render_sparklines(const TimeSeries& series, const std::vector<Sentiment>& sentiments,
                                 const std::vector<Date>& markers = {}, const std::string& title = {});

}  // namespace panast
