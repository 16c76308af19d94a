#include "bifrac/figures.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace bifrac {

namespace {

constexpr double kWidth = 520.0;
constexpr double kHeight = 380.0;
constexpr double kMarginL = 64.0, kMarginR = 16.0, kMarginT = 36.0, kMarginB = 48.0;

struct Axis {
    double lo = 0.0, hi = 1.0;
    bool log = false;

    double to_unit(double v) const {
        const double a = log ? std::log10(v) : v;
        const double l = log ? std::log10(lo) : lo;
        const double h = log ? std::log10(hi) : hi;
        return (a - l) / (h - l);
    }
};

struct Panel {
    std::ostringstream body;
    Axis x, y;
    std::string title;

    double px(double v) const { return kMarginL + x.to_unit(v) * (kWidth - kMarginL - kMarginR); }
    double py(double v) const { return kHeight - kMarginB - y.to_unit(v) * (kHeight - kMarginT - kMarginB); }

    void line(double x1, double y1, double x2, double y2, const std::string& color,
              double width = 1.0, const std::string& dash = "") {
        body << "<line x1=\"" << px(x1) << "\" y1=\"" << py(y1) << "\" x2=\"" << px(x2)
             << "\" y2=\"" << py(y2) << "\" stroke=\"" << color << "\" stroke-width=\""
             << width << '"';
        if (!dash.empty()) body << " stroke-dasharray=\"" << dash << '"';
        body << "/>\n";
    }

    void dot(double xv, double yv, const std::string& color) {
        body << "<circle cx=\"" << px(xv) << "\" cy=\"" << py(yv)
             << "\" r=\"3\" fill=\"" << color << "\"/>\n";
    }

    void polyline(const std::vector<std::pair<double, double>>& pts,
                  const std::string& color) {
        body << "<polyline fill=\"none\" stroke=\"" << color << "\" points=\"";
        for (auto& [xv, yv] : pts) body << px(xv) << ',' << py(yv) << ' ';
        body << "\"/>\n";
    }

    void text(double xpix, double ypix, const std::string& s, int size = 12,
              const std::string& anchor = "start") {
        body << "<text x=\"" << xpix << "\" y=\"" << ypix << "\" font-size=\"" << size
             << "\" font-family=\"sans-serif\" text-anchor=\"" << anchor << "\">" << s
             << "</text>\n";
    }

    void axes(const std::string& xlabel, const std::string& ylabel) {
        body << "<rect x=\"" << kMarginL << "\" y=\"" << kMarginT << "\" width=\""
             << kWidth - kMarginL - kMarginR << "\" height=\""
             << kHeight - kMarginT - kMarginB
             << "\" fill=\"none\" stroke=\"black\"/>\n";
        for (int i = 0; i <= 4; ++i) {
            const double fx = i / 4.0;
            const double vx = x.log ? std::pow(10.0, std::log10(x.lo) + fx * (std::log10(x.hi) - std::log10(x.lo)))
                                    : x.lo + fx * (x.hi - x.lo);
            const double vy = y.log ? std::pow(10.0, std::log10(y.lo) + fx * (std::log10(y.hi) - std::log10(y.lo)))
                                    : y.lo + fx * (y.hi - y.lo);
            std::ostringstream lx, ly;
            lx << std::setprecision(3) << vx;
            ly << std::setprecision(3) << vy;
            text(px(vx), kHeight - kMarginB + 16, lx.str(), 10, "middle");
            text(kMarginL - 6, py(vy) + 4, ly.str(), 10, "end");
            line(vx, y.lo, vx, y.hi, "#dddddd", 0.5);
            line(x.lo, vy, x.hi, vy, "#dddddd", 0.5);
        }
        text(kWidth / 2, kHeight - 12, xlabel, 12, "middle");
        body << "<text x=\"14\" y=\"" << kHeight / 2
             << "\" font-size=\"12\" font-family=\"sans-serif\" text-anchor=\"middle\" "
                "transform=\"rotate(-90 14 "
             << kHeight / 2 << ")\">" << ylabel << "</text>\n";
        text(kWidth / 2, 20, title, 13, "middle");
    }

    void save(const std::string& file) {
        std::ofstream os(file);
        if (!os) throw std::runtime_error("cannot write SVG '" + file + "'");
        os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
           << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
           << "\" height=\"" << kHeight << "\">\n"
           << body.str() << "</svg>\n";
    }
};

double positive_floor(double v) { return std::max(std::abs(v), 1.0e-15); }

std::string fmt_slope(double s) {
    std::ostringstream os;
    os << "slope " << std::fixed << std::setprecision(2) << s;
    return os.str();
}

}  // namespace

void write_ci_panel_svg(const std::string& file, const ExperimentSummary& summary,
                        const std::string& title) {
    Panel p;
    p.title = title;
    double ylo = 1e300, yhi = -1e300;
    for (auto& per : summary.per_n) {
        for (int i = 0; i < 2; ++i) {
            ylo = std::min(ylo, per.ci_lo[i]);
            yhi = std::max(yhi, per.ci_hi[i]);
        }
    }
    const double pad = 0.1 * (yhi - ylo);
    p.x = {static_cast<double>(summary.per_n.front().n) * 0.95,
           static_cast<double>(summary.per_n.back().n) * 1.05, false};
    p.y = {ylo - pad, yhi + pad, false};
    p.axes("n", "estimate");
    const char* colors[2] = {"#1f77b4", "#d62728"};
    for (int i = 0; i < 2; ++i) {
        p.line(p.x.lo, summary.truth[i], p.x.hi, summary.truth[i], colors[i], 1.0, "4,3");
        for (auto& per : summary.per_n) {
            const double xo = per.n + (i == 0 ? -3.0 : 3.0);
            p.line(xo, per.ci_lo[i], xo, per.ci_hi[i], colors[i], 1.5);
            p.dot(xo, per.mean[i], colors[i]);
        }
    }
    p.text(kMarginL + 8, kMarginT + 16, "component 1", 11);
    p.body << "<rect x=\"" << kMarginL + 80 << "\" y=\"" << kMarginT + 8
           << "\" width=\"10\" height=\"10\" fill=\"#1f77b4\"/>\n";
    p.text(kMarginL + 8, kMarginT + 32, "component 2", 11);
    p.body << "<rect x=\"" << kMarginL + 80 << "\" y=\"" << kMarginT + 24
           << "\" width=\"10\" height=\"10\" fill=\"#d62728\"/>\n";
    p.save(file);
}

namespace {

void loglog_panel(const std::string& file, const std::string& title,
                  const std::vector<std::pair<std::string, std::vector<std::pair<double, double>>>>& series,
                  const std::vector<std::string>& annotations) {
    Panel p;
    p.title = title;
    double xlo = 1e300, xhi = 0, ylo = 1e300, yhi = 0;
    for (auto& [label, pts] : series) {
        for (auto& [x, y] : pts) {
            xlo = std::min(xlo, x);
            xhi = std::max(xhi, x);
            ylo = std::min(ylo, y);
            yhi = std::max(yhi, y);
        }
    }
    p.x = {xlo * 0.9, xhi * 1.1, true};
    p.y = {ylo * 0.5, yhi * 2.0, true};
    p.axes("n", "value");
    const char* colors[4] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd"};
    int idx = 0;
    for (auto& [label, pts] : series) {
        const std::string color = colors[idx % 4];
        p.polyline(pts, color);
        for (auto& [x, y] : pts) p.dot(x, y, color);
        p.text(kMarginL + 8, kMarginT + 16 + 16 * idx, label, 11);
        p.body << "<rect x=\"" << kWidth - kMarginR - 180 << "\" y=\"0\" width=\"0\" height=\"0\"/>\n";
        ++idx;
    }
    int arow = 0;
    for (auto& a : annotations)
        p.text(kWidth - kMarginR - 8, kMarginT + 16 + 16 * arow++, a, 11, "end");
    p.save(file);
}

}  // namespace

void write_rates_panel_svg(const std::string& file, const ExperimentSummary& summary,
                           const std::string& title) {
    std::vector<std::pair<std::string, std::vector<std::pair<double, double>>>> series(4);
    series[0].first = "|bias| 1";
    series[1].first = "|bias| 2";
    series[2].first = "var 1";
    series[3].first = "var 2";
    for (auto& per : summary.per_n) {
        series[0].second.emplace_back(per.n, positive_floor(per.bias[0]));
        series[1].second.emplace_back(per.n, positive_floor(per.bias[1]));
        series[2].second.emplace_back(per.n, positive_floor(per.variance[0]));
        series[3].second.emplace_back(per.n, positive_floor(per.variance[1]));
    }
    loglog_panel(file, title, series,
                 {"bias1 " + fmt_slope(summary.bias_fit[0].slope),
                  "bias2 " + fmt_slope(summary.bias_fit[1].slope),
                  "var1 " + fmt_slope(summary.variance_fit[0].slope),
                  "var2 " + fmt_slope(summary.variance_fit[1].slope)});
}

void write_cross_panel_svg(const std::string& file, const ExperimentSummary& summary,
                           const std::string& title) {
    std::vector<std::pair<std::string, std::vector<std::pair<double, double>>>> series(1);
    series[0].first = "|cross cov|";
    for (auto& per : summary.per_n)
        series[0].second.emplace_back(per.n, positive_floor(per.cross_covariance));
    loglog_panel(file, title, series, {fmt_slope(summary.cross_fit.slope)});
}

} // namespace bifrac
