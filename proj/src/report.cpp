#include "chronocalc/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace chronocalc {

double linear_slope(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("linear_slope: need >= 2 points");
    const double n = double(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const double denom = n * sxx - sx * sx;
    if (denom == 0.0) throw std::invalid_argument("linear_slope: degenerate abscissae");
    return (n * sxy - sx * sy) / denom;
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
    std::vector<double> lx, ly;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] > 0.0) || !(y[i] > 0.0))
            throw std::invalid_argument("loglog_slope: needs positive data");
        lx.push_back(std::log10(x[i]));
        ly.push_back(std::log10(y[i]));
    }
    return linear_slope(lx, ly);
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

CsvWriter::CsvWriter(std::string path, const std::vector<std::string>& header, bool append)
    : path_(std::move(path)) {
    const bool exists = std::ifstream(path_).good();
    std::ofstream out(path_, append ? std::ios::app : std::ios::trunc);
    if (!out) throw std::runtime_error("CsvWriter: cannot open " + path_);
    if (!append || !exists) {
        for (std::size_t i = 0; i < header.size(); ++i)
            out << header[i] << (i + 1 < header.size() ? "," : "");
        out << "\n";
    }
}

void CsvWriter::write_row(const std::vector<std::string>& cells) {
    std::ofstream out(path_, std::ios::app);
    for (std::size_t i = 0; i < cells.size(); ++i)
        out << cells[i] << (i + 1 < cells.size() ? "," : "");
    out << "\n";
}

CsvTable read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("read_csv: cannot open " + path);
    CsvTable t;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (first) {
            t.header = std::move(cells);
            first = false;
        } else {
            t.rows.push_back(std::move(cells));
        }
    }
    if (first) throw std::runtime_error("read_csv: missing header row in " + path);
    return t;
}

std::vector<double> CsvTable::column_as_double(std::size_t idx) const {
    std::vector<double> out;
    out.reserve(rows.size());
    for (const auto& r : rows) {
        if (idx >= r.size()) throw std::runtime_error("CsvTable: short row");
        out.push_back(std::stod(r[idx]));
    }
    return out;
}

namespace {

constexpr int kW = 640;
constexpr int kH = 480;
constexpr int kMargin = 56;

double map_coord(double v, double lo, double hi, double out_lo, double out_hi) {
    if (hi == lo) return 0.5 * (out_lo + out_hi);
    return out_lo + (v - lo) / (hi - lo) * (out_hi - out_lo);
}

std::string svg_open(const std::string& title) {
    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kW << "\" height=\"" << kH
      << "\" viewBox=\"0 0 " << kW << " " << kH << "\">\n"
      << "<rect width=\"" << kW << "\" height=\"" << kH << "\" fill=\"white\"/>\n"
      << "<text x=\"" << kW / 2 << "\" y=\"24\" text-anchor=\"middle\" font-family=\"monospace\" "
         "font-size=\"14\">"
      << title << "</text>\n";
    return s.str();
}

std::string polyline(const std::vector<double>& px, const std::vector<double>& py) {
    std::ostringstream s;
    s << "<polyline fill=\"none\" stroke=\"#1f3a93\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < px.size(); ++i) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.2f,%.2f ", px[i], py[i]);
        s << buf;
    }
    s << "\"/>\n";
    for (std::size_t i = 0; i < px.size(); ++i) {
        char buf[96];
        std::snprintf(buf, sizeof(buf), "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"2.5\" fill=\"#1f3a93\"/>\n",
                      px[i], py[i]);
        s << buf;
    }
    return s.str();
}

std::string axes_box() {
    std::ostringstream s;
    s << "<rect x=\"" << kMargin << "\" y=\"" << kMargin << "\" width=\"" << kW - 2 * kMargin
      << "\" height=\"" << kH - 2 * kMargin << "\" fill=\"none\" stroke=\"#444\"/>\n";
    return s.str();
}

}  // namespace

std::string svg_loglog(const std::vector<double>& x, const std::vector<double>& y,
                       const std::string& title) {
    if (x.empty() || x.size() != y.size())
        throw std::invalid_argument("svg_loglog: empty or mismatched data");
    const double slope = x.size() >= 2 ? loglog_slope(x, y) : 0.0;
    std::vector<double> lx(x.size()), ly(y.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        lx[i] = std::log10(x[i]);
        ly[i] = std::log10(y[i]);
    }
    const auto [lxmin, lxmax] = std::minmax_element(lx.begin(), lx.end());
    const auto [lymin, lymax] = std::minmax_element(ly.begin(), ly.end());
    std::vector<double> px(x.size()), py(y.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        px[i] = map_coord(lx[i], *lxmin, *lxmax, kMargin, kW - kMargin);
        py[i] = map_coord(ly[i], *lymin, *lymax, kH - kMargin, kMargin);
    }
    std::ostringstream s;
    s << svg_open(title) << axes_box() << polyline(px, py);
    char buf[128];
    std::snprintf(buf, sizeof(buf),
                  "<text x=\"%d\" y=\"%d\" font-family=\"monospace\" font-size=\"13\">slope=%.3f</text>\n",
                  kMargin + 8, kMargin + 18, slope);
    s << buf << "</svg>\n";
    return s.str();
}

std::string svg_line(const std::vector<double>& x, const std::vector<double>& y,
                     const std::string& title) {
    if (x.empty() || x.size() != y.size())
        throw std::invalid_argument("svg_line: empty or mismatched data");
    const auto [xmin, xmax] = std::minmax_element(x.begin(), x.end());
    const auto [ymin, ymax] = std::minmax_element(y.begin(), y.end());
    std::vector<double> px(x.size()), py(y.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        px[i] = map_coord(x[i], *xmin, *xmax, kMargin, kW - kMargin);
        py[i] = map_coord(y[i], *ymin, *ymax, kH - kMargin, kMargin);
    }
    std::ostringstream s;
    s << svg_open(title) << axes_box() << polyline(px, py) << "</svg>\n";
    return s.str();
}

std::string svg_heatmap(const std::vector<double>& values, std::size_t nx, std::size_t ny,
                        const std::string& title) {
    if (values.size() != nx * ny || values.empty())
        throw std::invalid_argument("svg_heatmap: bad grid size");
    const auto [vmin, vmax] = std::minmax_element(values.begin(), values.end());
    const double cw = double(kW - 2 * kMargin) / double(nx);
    const double ch = double(kH - 2 * kMargin) / double(ny);
    std::ostringstream s;
    s << svg_open(title);
    for (std::size_t j = 0; j < ny; ++j) {
        for (std::size_t i = 0; i < nx; ++i) {
            const double v = values[j * nx + i];
            const double unit = (*vmax == *vmin) ? 0.0 : (v - *vmin) / (*vmax - *vmin);
            const int shade = int(std::lround(255.0 * (1.0 - unit)));
            char buf[160];
            std::snprintf(buf, sizeof(buf),
                          "<rect x=\"%.2f\" y=\"%.2f\" width=\"%.2f\" height=\"%.2f\" "
                          "fill=\"rgb(%d,%d,255)\"/>\n",
                          kMargin + double(i) * cw, kMargin + double(j) * ch, cw + 0.5, ch + 0.5,
                          shade, shade);
            s << buf;
        }
    }
    s << axes_box() << "</svg>\n";
    return s.str();
}

}  // namespace chronocalc
