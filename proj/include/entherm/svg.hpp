#pragma once

#include <string>
#include <vector>

namespace entherm {

struct PlotSeries {
    std::vector<double> x;
    std::vector<double> y;
    std::string label;
    std::string color = "#1f6fb4";
    bool line = true;
    bool markers = false;
};

struct PlotSpec {
    std::string title;
    std::string x_label;
    std::string y_label;
    bool log_x = false;
    int width = 720;
    int height = 480;
    std::vector<PlotSeries> series;
};

// Renders the plot as a standalone SVG document. Non-finite points are
// dropped; with log_x so are points at x <= 0. Empty input still yields the
// axes frame.
std::string render_plot(const PlotSpec& spec);

void write_plot(const std::string& path, const PlotSpec& spec);

} // namespace entherm
