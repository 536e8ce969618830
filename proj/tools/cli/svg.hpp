#pragma once

#include <string>
#include <vector>

namespace epc::cli {

/// Minimal self-contained SVG plots: scatter/line series or a grey-scale
/// heat map. Meant for a quick look, not for publication.
class SvgPlot {
public:
    SvgPlot(std::string title, std::string x_label, std::string y_label);

    void add_series(const std::vector<double>& x, const std::vector<double>& y, bool lines);
    /// values row-major over y (rows) then x; darker means smaller.
    void set_heatmap(const std::vector<double>& x_axis, const std::vector<double>& y_axis,
                     const std::vector<double>& values);

    std::string str() const;

private:
    struct Series {
        std::vector<double> x, y;
        bool lines;
    };
    std::string title_, x_label_, y_label_;
    std::vector<Series> series_;
    std::vector<double> hx_, hy_, hv_;
};

}  // namespace epc::cli
