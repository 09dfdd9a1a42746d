#pragma once

#include <string>
#include <vector>

namespace chronocalc {

/// Least-squares slope of log10(y) against log10(x). Nonpositive values
/// are rejected.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

/// Least-squares slope of y against x.
double linear_slope(const std::vector<double>& x, const std::vector<double>& y);

/// Locale-independent shortest-roundtrip double formatting ('.' decimal).
std::string format_double(double v);

/// CSV with a mandatory header row, comma separators, LF line endings.
class CsvWriter {
public:
    CsvWriter(std::string path, const std::vector<std::string>& header, bool append = false);
    void write_row(const std::vector<std::string>& cells);
    const std::string& path() const { return path_; }

private:
    std::string path_;
};

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::vector<double> column_as_double(std::size_t idx) const;
};
CsvTable read_csv(const std::string& path);

/// Deterministic SVGs (no timestamps). loglog draws decade grids and a
/// fitted-slope annotation; heatmap shades |value| over a rectangular grid.
std::string svg_loglog(const std::vector<double>& x, const std::vector<double>& y,
                       const std::string& title);
std::string svg_line(const std::vector<double>& x, const std::vector<double>& y,
                     const std::string& title);
std::string svg_heatmap(const std::vector<double>& values, std::size_t nx, std::size_t ny,
                        const std::string& title);

}  // namespace chronocalc
