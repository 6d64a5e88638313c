#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace isingnet {

// Sample Pearson correlation with the p-value reported as an inequality band,
// via the two-sided t-test t = r sqrt((m-2)/(1-r^2)). When either variable is
// constant the correlation is undefined (defined = false, r = NaN).
struct CorrelationReport {
    std::string x_name;
    std::string y_name;
    std::size_t count = 0;
    bool defined = false;
    double pearson_r = 0.0;
    std::string p_band;  // "p<0.001", "p<0.01", "p<0.05", "n.s." or "undefined"
};

CorrelationReport pearson(std::span<const double> xs, std::span<const double> ys,
                          std::string x_name = "x", std::string y_name = "y");

// Linear 2D histogram over [min, max] per axis; the maximum lands in the top
// bin. A constant axis degenerates to a single bin.
struct Histogram2D {
    int nx = 0;
    int ny = 0;
    std::vector<std::uint64_t> counts;  // row-major, counts[iy * nx + ix]
    std::vector<double> x_edges;        // nx + 1 values
    std::vector<double> y_edges;        // ny + 1 values

    std::uint64_t at(int ix, int iy) const { return counts[static_cast<std::size_t>(iy) * nx + ix]; }
};

Histogram2D histogram2d(std::span<const double> xs, std::span<const double> ys, int bins = 64);

}  // namespace isingnet
