#include "isingnet/stats.hpp"

#include <algorithm>
#include <boost/math/distributions/students_t.hpp>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace isingnet {

CorrelationReport pearson(std::span<const double> xs, std::span<const double> ys,
                          std::string x_name, std::string y_name)
{
    if (xs.size() != ys.size()) throw std::invalid_argument("sample vectors differ in length");
    if (xs.size() < 3) throw std::invalid_argument("need at least 3 samples");

    CorrelationReport report;
    report.x_name = std::move(x_name);
    report.y_name = std::move(y_name);
    report.count = xs.size();

    const double m = static_cast<double>(xs.size());
    double mean_x = 0.0, mean_y = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mean_x += xs[i];
        mean_y += ys[i];
    }
    mean_x /= m;
    mean_y /= m;

    double sxx = 0.0, syy = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double dx = xs[i] - mean_x;
        const double dy = ys[i] - mean_y;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }

    if (sxx == 0.0 || syy == 0.0) {
        report.defined = false;
        report.pearson_r = std::numeric_limits<double>::quiet_NaN();
        report.p_band = "undefined";
        return report;
    }

    double r = sxy / std::sqrt(sxx * syy);
    r = std::clamp(r, -1.0, 1.0);
    report.defined = true;
    report.pearson_r = r;

    const double dof = m - 2.0;
    double p;
    if (1.0 - r * r <= 0.0) {
        p = 0.0;
    } else {
        const double t = r * std::sqrt(dof / (1.0 - r * r));
        const boost::math::students_t dist(dof);
        p = 2.0 * boost::math::cdf(boost::math::complement(dist, std::abs(t)));
    }
    if (p < 0.001) report.p_band = "p<0.001";
    else if (p < 0.01) report.p_band = "p<0.01";
    else if (p < 0.05) report.p_band = "p<0.05";
    else report.p_band = "n.s.";
    return report;
}

Histogram2D histogram2d(std::span<const double> xs, std::span<const double> ys, int bins)
{
    if (xs.size() != ys.size()) throw std::invalid_argument("sample vectors differ in length");
    if (xs.empty()) throw std::invalid_argument("need at least 1 sample");
    if (bins < 1) throw std::invalid_argument("bin count must be positive");

    const auto [xmin_it, xmax_it] = std::minmax_element(xs.begin(), xs.end());
    const auto [ymin_it, ymax_it] = std::minmax_element(ys.begin(), ys.end());
    const double xmin = *xmin_it, xmax = *xmax_it;
    const double ymin = *ymin_it, ymax = *ymax_it;

    Histogram2D h;
    h.nx = xmax > xmin ? bins : 1;  // constant axis degenerates to one bin
    h.ny = ymax > ymin ? bins : 1;
    h.counts.assign(static_cast<std::size_t>(h.nx) * h.ny, 0);

    h.x_edges.resize(h.nx + 1);
    for (int k = 0; k <= h.nx; ++k)
        h.x_edges[k] = h.nx == 1 ? xmin : xmin + (xmax - xmin) * k / h.nx;
    h.y_edges.resize(h.ny + 1);
    for (int k = 0; k <= h.ny; ++k)
        h.y_edges[k] = h.ny == 1 ? ymin : ymin + (ymax - ymin) * k / h.ny;

    auto bin_of = [](double v, double lo, double hi, int nbins) {
        if (nbins == 1) return 0;
        const int b = static_cast<int>((v - lo) / (hi - lo) * nbins);
        return std::clamp(b, 0, nbins - 1);  // closed upper edge
    };
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const int bx = bin_of(xs[i], xmin, xmax, h.nx);
        const int by = bin_of(ys[i], ymin, ymax, h.ny);
        ++h.counts[static_cast<std::size_t>(by) * h.nx + bx];
    }
    return h;
}

}  // namespace isingnet
