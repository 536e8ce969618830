#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace epc::cli {

namespace {

constexpr double kWidth = 640, kHeight = 480, kMargin = 60;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string label(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '<') out += "&lt;";
        else if (c == '>') out += "&gt;";
        else if (c == '&') out += "&amp;";
        else out += c;
    }
    return out;
}

struct Range {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    void add(double v) {
        if (!std::isfinite(v)) return;
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    void settle() {
        if (!(lo <= hi)) lo = 0, hi = 1;
        if (lo == hi) lo -= 0.5, hi += 0.5;
    }
};

}  // namespace

SvgPlot::SvgPlot(std::string title, std::string x_label, std::string y_label)
    : title_(std::move(title)), x_label_(std::move(x_label)), y_label_(std::move(y_label)) {}

void SvgPlot::add_series(const std::vector<double>& x, const std::vector<double>& y, bool lines) {
    series_.push_back({x, y, lines});
}

void SvgPlot::set_heatmap(const std::vector<double>& x_axis, const std::vector<double>& y_axis,
                          const std::vector<double>& values) {
    hx_ = x_axis;
    hy_ = y_axis;
    hv_ = values;
}

std::string SvgPlot::str() const {
    Range xr, yr;
    for (const auto& s : series_) {
        for (double v : s.x) xr.add(v);
        for (double v : s.y) yr.add(v);
    }
    for (double v : hx_) xr.add(v);
    for (double v : hy_) yr.add(v);
    xr.settle();
    yr.settle();
    const double pw = kWidth - 2 * kMargin, ph = kHeight - 2 * kMargin;
    auto px = [&](double x) { return kMargin + (x - xr.lo) / (xr.hi - xr.lo) * pw; };
    auto py = [&](double y) { return kHeight - kMargin - (y - yr.lo) / (yr.hi - yr.lo) * ph; };

    std::string o;
    o += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) + "\" height=\"" + num(kHeight) + "\">\n";
    o += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    if (!hv_.empty() && hx_.size() > 1 && hy_.size() > 1) {
        Range vr;
        for (double v : hv_) vr.add(std::log10(std::max(v, 1e-300)));
        vr.settle();
        const double cw = pw / static_cast<double>(hx_.size()), ch = ph / static_cast<double>(hy_.size());
        for (std::size_t i = 0; i < hy_.size(); ++i)
            for (std::size_t j = 0; j < hx_.size(); ++j) {
                double v = std::log10(std::max(hv_[i * hx_.size() + j], 1e-300));
                int grey = static_cast<int>(255 * (v - vr.lo) / (vr.hi - vr.lo));
                char fill[16];
                std::snprintf(fill, sizeof fill, "#%02x%02x%02x", grey, grey, grey);
                o += "<rect x=\"" + num(kMargin + static_cast<double>(j) * cw) + "\" y=\"" +
                     num(kHeight - kMargin - static_cast<double>(i + 1) * ch) + "\" width=\"" + num(cw + 0.5) +
                     "\" height=\"" + num(ch + 0.5) + "\" fill=\"" + fill + "\"/>\n";
            }
    }

    for (std::size_t k = 0; k < series_.size(); ++k) {
        const auto& s = series_[k];
        const char* colour = kPalette[k % 8];
        if (s.lines) {
            std::string pts;
            for (std::size_t i = 0; i < s.x.size(); ++i)
                if (std::isfinite(s.x[i]) && std::isfinite(s.y[i])) pts += num(px(s.x[i])) + "," + num(py(s.y[i])) + " ";
            o += "<polyline fill=\"none\" stroke=\"" + std::string(colour) + "\" stroke-width=\"1.5\" points=\"" + pts + "\"/>\n";
        } else {
            for (std::size_t i = 0; i < s.x.size(); ++i)
                if (std::isfinite(s.x[i]) && std::isfinite(s.y[i]))
                    o += "<circle cx=\"" + num(px(s.x[i])) + "\" cy=\"" + num(py(s.y[i])) + "\" r=\"2\" fill=\"" +
                         colour + "\"/>\n";
        }
    }

    o += "<rect x=\"" + num(kMargin) + "\" y=\"" + num(kMargin) + "\" width=\"" + num(pw) + "\" height=\"" + num(ph) +
         "\" fill=\"none\" stroke=\"black\"/>\n";
    o += "<text x=\"" + num(kWidth / 2) + "\" y=\"30\" text-anchor=\"middle\" font-size=\"16\">" + escape(title_) + "</text>\n";
    o += "<text x=\"" + num(kWidth / 2) + "\" y=\"" + num(kHeight - 15) + "\" text-anchor=\"middle\">" + escape(x_label_) + "</text>\n";
    o += "<text x=\"15\" y=\"" + num(kHeight / 2) + "\" text-anchor=\"middle\" transform=\"rotate(-90 15 " + num(kHeight / 2) +
         ")\">" + escape(y_label_) + "</text>\n";
    o += "<text x=\"" + num(kMargin) + "\" y=\"" + num(kHeight - kMargin + 15) + "\" text-anchor=\"middle\" font-size=\"10\">" + label(xr.lo) + "</text>\n";
    o += "<text x=\"" + num(kWidth - kMargin) + "\" y=\"" + num(kHeight - kMargin + 15) + "\" text-anchor=\"middle\" font-size=\"10\">" + label(xr.hi) + "</text>\n";
    o += "<text x=\"" + num(kMargin - 5) + "\" y=\"" + num(kHeight - kMargin) + "\" text-anchor=\"end\" font-size=\"10\">" + label(yr.lo) + "</text>\n";
    o += "<text x=\"" + num(kMargin - 5) + "\" y=\"" + num(kMargin + 4) + "\" text-anchor=\"end\" font-size=\"10\">" + label(yr.hi) + "</text>\n";
    o += "</svg>\n";
    return o;
}

}  // namespace epc::cli
