#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

namespace specon {

// fixed six-significant-digit formatting keeps emitted files byte-stable
inline std::string format_g6(double v) {
    if (std::isnan(v)) return "";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

inline std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (const unsigned char ch : data) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string hex64(std::uint64_t v) {
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

struct CsvWriter {
    std::ostream& os;

    void comment(const std::string& text) { os << "# " << text << "\n"; }

    void row(const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) os << ",";
            os << cells[i];
        }
        os << "\n";
    }
};

struct SvgSeries {
    std::vector<std::pair<double, double>> points;  // NaN y breaks the polyline
    std::string color;
    std::string label;
    bool markers = false;
};

namespace detail {

inline double nice_step(double span, int target) {
    const double raw = span / std::max(target, 1);
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    for (const double m : {1.0, 2.0, 5.0, 10.0}) {
        if (raw <= m * mag * (1.0 + 1e-12)) return m * mag;
    }
    return 10.0 * mag;
}

}  // namespace detail

class SvgPlot {
public:
    SvgPlot(std::string title, std::string xlabel, std::string ylabel)
        : title_(std::move(title)), xlabel_(std::move(xlabel)), ylabel_(std::move(ylabel)) {}

    void add(SvgSeries series) { series_.push_back(std::move(series)); }

    void vertical_marker(double x, const std::string& color, const std::string& label) {
        markers_.push_back({x, color, label});
    }

    void set_metadata(const std::string& json_text) { metadata_ = json_text; }

    void render(std::ostream& os) const {
        const int w = 920, h = 560, ml = 70, mr = 30, mt = 46, mb = 56;
        double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
        for (const auto& s : series_)
            for (const auto& [x, y] : s.points) {
                if (std::isnan(y)) continue;
                xmin = std::min(xmin, x);
                xmax = std::max(xmax, x);
                ymin = std::min(ymin, y);
                ymax = std::max(ymax, y);
            }
        for (const auto& m : markers_) {
            xmin = std::min(xmin, m.x);
            xmax = std::max(xmax, m.x);
        }
        if (xmin > xmax) {
            xmin = 0;
            xmax = 1;
        }
        if (ymin > ymax) {
            ymin = 0;
            ymax = 1;
        }
        if (xmax == xmin) xmax = xmin + 1;
        if (ymax == ymin) ymax = ymin + 1;
        const double ypad = 0.06 * (ymax - ymin);
        ymin -= ypad;
        ymax += ypad;
        auto px = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * (w - ml - mr); };
        auto py = [&](double y) { return h - mb - (y - ymin) / (ymax - ymin) * (h - mt - mb); };

        os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
           << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
        if (!metadata_.empty())
            os << "<metadata id=\"config\">" << metadata_ << "</metadata>\n";
        os << "<rect width=\"" << w << "\" height=\"" << h << "\" fill=\"white\"/>\n";
        os << "<text x=\"" << w / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\" "
              "font-family=\"sans-serif\">"
           << title_ << "</text>\n";

        const double xstep = detail::nice_step(xmax - xmin, 8);
        for (double t = std::ceil(xmin / xstep) * xstep; t <= xmax + 1e-12; t += xstep) {
            os << "<line x1=\"" << format_g6(px(t)) << "\" y1=\"" << h - mb << "\" x2=\""
               << format_g6(px(t)) << "\" y2=\"" << h - mb + 5
               << "\" stroke=\"black\"/>\n";
            os << "<text x=\"" << format_g6(px(t)) << "\" y=\"" << h - mb + 20
               << "\" text-anchor=\"middle\" font-size=\"11\" font-family=\"sans-serif\">"
               << format_g6(t) << "</text>\n";
        }
        const double ystep = detail::nice_step(ymax - ymin, 6);
        for (double t = std::ceil(ymin / ystep) * ystep; t <= ymax + 1e-12; t += ystep) {
            os << "<line x1=\"" << ml - 5 << "\" y1=\"" << format_g6(py(t)) << "\" x2=\"" << ml
               << "\" y2=\"" << format_g6(py(t)) << "\" stroke=\"black\"/>\n";
            os << "<text x=\"" << ml - 8 << "\" y=\"" << format_g6(py(t) + 4)
               << "\" text-anchor=\"end\" font-size=\"11\" font-family=\"sans-serif\">"
               << format_g6(t) << "</text>\n";
        }
        os << "<rect x=\"" << ml << "\" y=\"" << mt << "\" width=\"" << w - ml - mr
           << "\" height=\"" << h - mt - mb
           << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
        os << "<text x=\"" << (ml + w - mr) / 2 << "\" y=\"" << h - 14
           << "\" text-anchor=\"middle\" font-size=\"13\" font-family=\"sans-serif\">" << xlabel_
           << "</text>\n";
        os << "<text x=\"18\" y=\"" << (mt + h - mb) / 2
           << "\" text-anchor=\"middle\" font-size=\"13\" font-family=\"sans-serif\" "
              "transform=\"rotate(-90 18 "
           << (mt + h - mb) / 2 << ")\">" << ylabel_ << "</text>\n";

        for (const auto& m : markers_) {
            os << "<line x1=\"" << format_g6(px(m.x)) << "\" y1=\"" << mt << "\" x2=\""
               << format_g6(px(m.x)) << "\" y2=\"" << h - mb << "\" stroke=\"" << m.color
               << "\" stroke-dasharray=\"4 3\"/>\n";
        }
        for (const auto& s : series_) {
            std::string path;
            bool open = false;
            for (const auto& [x, y] : s.points) {
                if (std::isnan(y)) {
                    open = false;
                    continue;
                }
                path += open ? "L" : "M";
                path += format_g6(px(x)) + " " + format_g6(py(y));
                open = true;
            }
            if (!path.empty())
                os << "<path d=\"" << path << "\" fill=\"none\" stroke=\"" << s.color
                   << "\" stroke-width=\"1.5\"/>\n";
            if (s.markers)
                for (const auto& [x, y] : s.points) {
                    if (std::isnan(y)) continue;
                    os << "<circle cx=\"" << format_g6(px(x)) << "\" cy=\"" << format_g6(py(y))
                       << "\" r=\"3\" fill=\"" << s.color << "\"/>\n";
                }
        }
        int ly = mt + 16;
        for (const auto& s : series_) {
            if (s.label.empty()) continue;
            os << "<line x1=\"" << ml + 10 << "\" y1=\"" << ly - 4 << "\" x2=\"" << ml + 34
               << "\" y2=\"" << ly - 4 << "\" stroke=\"" << s.color
               << "\" stroke-width=\"2\"/>\n";
            os << "<text x=\"" << ml + 40 << "\" y=\"" << ly
               << "\" font-size=\"12\" font-family=\"sans-serif\">" << s.label << "</text>\n";
            ly += 16;
        }
        for (const auto& m : markers_) {
            if (m.label.empty()) continue;
            os << "<text x=\"" << ml + 40 << "\" y=\"" << ly
               << "\" font-size=\"12\" font-family=\"sans-serif\" fill=\"" << m.color << "\">"
               << m.label << "</text>\n";
            ly += 16;
        }
        os << "</svg>\n";
    }

private:
    struct Marker {
        double x;
        std::string color;
        std::string label;
    };

    std::string title_, xlabel_, ylabel_;
    std::vector<SvgSeries> series_;
    std::vector<Marker> markers_;
    std::string metadata_;
};

inline const char* palette(std::size_t i) {
    static const char* colors[] = {"#1f6feb", "#d1242f", "#1a7f37", "#9a6700",
                                   "#8250df", "#bf3989", "#57606a"};
    return colors[i % 7];
}

}  // namespace specon
