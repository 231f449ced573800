#pragma once

#include <string>
#include <vector>

namespace sflow {

/// Minimal deterministic SVG line plotter (pure vector output).
class SvgPlot {
public:
    SvgPlot(int width, int height, std::string title, std::string xlabel = "",
            std::string ylabel = "");

    void add_series(std::vector<double> x, std::vector<double> y, std::string color,
                    double stroke_width = 1.0);
    /// Horizontal span markers drawn as thick segments at a fixed y.
    void add_spans(const std::vector<std::pair<double, double>>& spans, double y,
                   std::string color, double stroke_width = 4.0);

    std::string render() const;
    void save(const std::string& path) const;

private:
    struct Series {
        std::vector<double> x, y;
        std::string color;
        double width;
    };
    struct Span {
        double x0, x1, y;
        std::string color;
        double width;
    };
    int width_, height_;
    std::string title_, xlabel_, ylabel_;
    std::vector<Series> series_;
    std::vector<Span> spans_;
};

} // namespace sflow
