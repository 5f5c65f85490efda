#include "entherm/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace entherm {

namespace {

constexpr int kMarginLeft = 70;
constexpr int kMarginRight = 20;
constexpr int kMarginTop = 40;
constexpr int kMarginBottom = 55;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out += c;
        }
    }
    return out;
}

bool usable(double x, double y, bool log_x) {
    if (!std::isfinite(x) || !std::isfinite(y)) return false;
    return !log_x || x > 0;
}

// Round tick positions: 1-2-5 ladder on linear axes, decades on log axes.
std::vector<double> linear_ticks(double lo, double hi) {
    const double span = hi - lo;
    double step = std::pow(10.0, std::floor(std::log10(span / 4.0)));
    if (span / step > 8) step *= 2;
    if (span / step > 8) step *= 2.5;
    if (span / step > 8) step *= 2;
    std::vector<double> ticks;
    for (double t = std::ceil(lo / step) * step; t <= hi + 1e-9 * span;
         t += step)
        ticks.push_back(std::abs(t) < 1e-12 * span ? 0.0 : t);
    return ticks;
}

std::vector<double> log_ticks(double lo, double hi) {
    std::vector<double> ticks;
    for (int d = int(std::floor(lo)); d <= int(std::ceil(hi)); ++d)
        if (d >= lo - 1e-9 && d <= hi + 1e-9) ticks.push_back(double(d));
    if (ticks.empty()) ticks = {lo, hi};
    return ticks;
}

} // namespace

std::string render_plot(const PlotSpec& spec) {
    const int plot_w = spec.width - kMarginLeft - kMarginRight;
    const int plot_h = spec.height - kMarginTop - kMarginBottom;
    if (plot_w < 50 || plot_h < 50)
        throw std::invalid_argument("plot canvas too small");

    double x_lo = 0, x_hi = 1, y_lo = 0, y_hi = 1;
    bool have_data = false;
    for (const PlotSeries& s : spec.series) {
        if (s.x.size() != s.y.size())
            throw std::invalid_argument("series x/y length mismatch");
        for (std::size_t k = 0; k < s.x.size(); ++k) {
            if (!usable(s.x[k], s.y[k], spec.log_x)) continue;
            const double px = spec.log_x ? std::log10(s.x[k]) : s.x[k];
            if (!have_data) {
                x_lo = x_hi = px;
                y_lo = y_hi = s.y[k];
                have_data = true;
            } else {
                x_lo = std::min(x_lo, px);
                x_hi = std::max(x_hi, px);
                y_lo = std::min(y_lo, s.y[k]);
                y_hi = std::max(y_hi, s.y[k]);
            }
        }
    }
    if (x_hi - x_lo < 1e-12) { x_lo -= 0.5; x_hi += 0.5; }
    if (y_hi - y_lo < 1e-12) { y_lo -= 0.5; y_hi += 0.5; }
    const double y_pad = 0.05 * (y_hi - y_lo);
    y_lo -= y_pad;
    y_hi += y_pad;

    auto sx = [&](double px) {
        return kMarginLeft + (px - x_lo) / (x_hi - x_lo) * plot_w;
    };
    auto sy = [&](double y) {
        return kMarginTop + (y_hi - y) / (y_hi - y_lo) * plot_h;
    };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.width
        << "\" height=\"" << spec.height << "\" viewBox=\"0 0 " << spec.width
        << " " << spec.height << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // axes frame and ticks
    out << "<rect x=\"" << kMarginLeft << "\" y=\"" << kMarginTop
        << "\" width=\"" << plot_w << "\" height=\"" << plot_h
        << "\" fill=\"none\" stroke=\"black\"/>\n";
    const auto xticks =
        spec.log_x ? log_ticks(x_lo, x_hi) : linear_ticks(x_lo, x_hi);
    for (double t : xticks) {
        const double px = sx(t);
        out << "<line x1=\"" << num(px) << "\" y1=\""
            << kMarginTop + plot_h << "\" x2=\"" << num(px) << "\" y2=\""
            << kMarginTop + plot_h + 5 << "\" stroke=\"black\"/>\n";
        const std::string label =
            spec.log_x ? "1e" + num(t) : num(t);
        out << "<text x=\"" << num(px) << "\" y=\""
            << kMarginTop + plot_h + 20
            << "\" font-size=\"12\" text-anchor=\"middle\">" << label
            << "</text>\n";
    }
    for (double t : linear_ticks(y_lo, y_hi)) {
        const double py = sy(t);
        out << "<line x1=\"" << kMarginLeft - 5 << "\" y1=\"" << num(py)
            << "\" x2=\"" << kMarginLeft << "\" y2=\"" << num(py)
            << "\" stroke=\"black\"/>\n"
            << "<text x=\"" << kMarginLeft - 8 << "\" y=\"" << num(py + 4)
            << "\" font-size=\"12\" text-anchor=\"end\">" << num(t)
            << "</text>\n";
    }

    out << "<text x=\"" << spec.width / 2 << "\" y=\"22\" font-size=\"15\" "
        << "text-anchor=\"middle\">" << escape(spec.title) << "</text>\n"
        << "<text x=\"" << kMarginLeft + plot_w / 2 << "\" y=\""
        << spec.height - 12 << "\" font-size=\"13\" text-anchor=\"middle\">"
        << escape(spec.x_label) << "</text>\n"
        << "<text x=\"18\" y=\"" << kMarginTop + plot_h / 2
        << "\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 "
        << "18 " << kMarginTop + plot_h / 2 << ")\">" << escape(spec.y_label)
        << "</text>\n";

    // clip data to the frame
    out << "<clipPath id=\"frame\"><rect x=\"" << kMarginLeft << "\" y=\""
        << kMarginTop << "\" width=\"" << plot_w << "\" height=\"" << plot_h
        << "\"/></clipPath>\n<g clip-path=\"url(#frame)\">\n";

    for (const PlotSeries& s : spec.series) {
        std::vector<std::pair<double, double>> pts;
        for (std::size_t k = 0; k < s.x.size(); ++k) {
            if (!usable(s.x[k], s.y[k], spec.log_x)) continue;
            const double px = spec.log_x ? std::log10(s.x[k]) : s.x[k];
            pts.emplace_back(sx(px), sy(s.y[k]));
        }
        if (s.line && pts.size() > 1) {
            out << "<polyline fill=\"none\" stroke=\"" << s.color
                << "\" stroke-width=\"1.5\" points=\"";
            for (const auto& [px, py] : pts)
                out << num(px) << "," << num(py) << " ";
            out << "\"/>\n";
        }
        if (s.markers || pts.size() == 1)
            for (const auto& [px, py] : pts)
                out << "<circle cx=\"" << num(px) << "\" cy=\"" << num(py)
                    << "\" r=\"3\" fill=\"" << s.color << "\"/>\n";
    }
    out << "</g>\n";

    // legend
    int row = 0;
    for (const PlotSeries& s : spec.series) {
        if (s.label.empty()) continue;
        const int ly = kMarginTop + 14 + 18 * row++;
        const int lx = kMarginLeft + plot_w - 150;
        out << "<line x1=\"" << lx << "\" y1=\"" << ly << "\" x2=\""
            << lx + 24 << "\" y2=\"" << ly << "\" stroke=\"" << s.color
            << "\" stroke-width=\"2\"/>\n";
        if (s.markers)
            out << "<circle cx=\"" << lx + 12 << "\" cy=\"" << ly
                << "\" r=\"3\" fill=\"" << s.color << "\"/>\n";
        out << "<text x=\"" << lx + 30 << "\" y=\"" << ly + 4
            << "\" font-size=\"12\">" << escape(s.label) << "</text>\n";
    }

    out << "</svg>\n";
    return out.str();
}

void write_plot(const std::string& path, const PlotSpec& spec) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << render_plot(spec);
    if (!out) throw std::runtime_error("write failed: " + path);
}

} // namespace entherm
