#include "sheetlab/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sheetlab {

double pairwise_sum(std::span<const double> values) {
    const std::size_t n = values.size();
    if (n == 0) return 0.0;
    if (n <= 8) {
        double s = 0.0;
        for (double v : values) s += v;
        return s;
    }
    const std::size_t half = n / 2;
    return pairwise_sum(values.subspan(0, half)) + pairwise_sum(values.subspan(half));
}

LineFit fit_line(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw std::invalid_argument("fit_line: size mismatch");
    const std::size_t n = x.size();
    if (n < 2) throw std::invalid_argument("fit_line: need at least 2 points");

    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);

    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (sxx <= 0.0) throw std::invalid_argument("fit_line: degenerate design (constant x)");

    LineFit fit;
    fit.n = n;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;

    double ss_res = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = y[i] - (fit.intercept + fit.slope * x[i]);
        ss_res += r * r;
    }
    fit.residual_rms = std::sqrt(ss_res / static_cast<double>(n));
    const double dof = static_cast<double>(n > 2 ? n - 2 : 1);
    fit.slope_stderr = std::sqrt(ss_res / dof / sxx);
    return fit;
}

LineFit fit_line_grouped(std::span<const double> x, std::span<const double> y,
                         std::span<const int> group) {
    if (x.size() != y.size() || x.size() != group.size())
        throw std::invalid_argument("fit_line_grouped: size mismatch");
    const std::size_t n = x.size();
    if (n < 2) throw std::invalid_argument("fit_line_grouped: need at least 2 points");

    // Within-group centering absorbs the per-group intercepts; the shared
    // slope is then plain OLS on the centered data.
    int gmax = 0;
    for (int g : group) {
        if (g < 0) throw std::invalid_argument("fit_line_grouped: negative group id");
        gmax = std::max(gmax, g);
    }
    const std::size_t ngroups = static_cast<std::size_t>(gmax) + 1;
    std::vector<double> gx(ngroups, 0.0), gy(ngroups, 0.0);
    std::vector<std::size_t> gn(ngroups, 0);
    for (std::size_t i = 0; i < n; ++i) {
        gx[group[i]] += x[i];
        gy[group[i]] += y[i];
        gn[group[i]] += 1;
    }
    for (std::size_t g = 0; g < ngroups; ++g) {
        if (gn[g] > 0) {
            gx[g] /= static_cast<double>(gn[g]);
            gy[g] /= static_cast<double>(gn[g]);
        }
    }

    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double cx = x[i] - gx[group[i]];
        const double cy = y[i] - gy[group[i]];
        sxx += cx * cx;
        sxy += cx * cy;
    }
    if (sxx <= 0.0)
        throw std::invalid_argument("fit_line_grouped: degenerate design (constant x within groups)");

    LineFit fit;
    fit.n = n;
    fit.slope = sxy / sxx;
    fit.intercept = 0.0;  // per-group intercepts absorbed

    double ss_res = 0.0;
    std::size_t used_groups = 0;
    for (std::size_t g = 0; g < ngroups; ++g)
        if (gn[g] > 0) ++used_groups;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = (y[i] - gy[group[i]]) - fit.slope * (x[i] - gx[group[i]]);
        ss_res += r * r;
    }
    fit.residual_rms = std::sqrt(ss_res / static_cast<double>(n));
    const std::size_t params = used_groups + 1;
    const double dof = static_cast<double>(n > params ? n - params : 1);
    fit.slope_stderr = std::sqrt(ss_res / dof / sxx);
    return fit;
}

RootFit fit_root_fixed_slope(std::span<const double> x, std::span<const double> y,
                             double slope) {
    if (x.size() != y.size()) throw std::invalid_argument("fit_root_fixed_slope: size mismatch");
    const std::size_t n = x.size();
    if (n == 0) throw std::invalid_argument("fit_root_fixed_slope: empty");
    if (slope == 0.0) throw std::invalid_argument("fit_root_fixed_slope: zero slope");

    // y_i = slope * (x_i - root)  =>  root = mean(x_i - y_i / slope)
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += x[i] - y[i] / slope;

    RootFit fit;
    fit.root = acc / static_cast<double>(n);

    double ss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = y[i] - slope * (x[i] - fit.root);
        ss += r * r;
    }
    fit.residual_rms = std::sqrt(ss / static_cast<double>(n));
    const double dof = static_cast<double>(n > 1 ? n - 1 : 1);
    fit.root_stderr = std::sqrt(ss / dof / static_cast<double>(n)) / std::abs(slope);
    return fit;
}

std::vector<double> isotonic_non_decreasing(std::span<const double> values) {
    // Pool adjacent violators with uniform weights.
    std::vector<double> level;
    std::vector<std::size_t> count;
    for (double v : values) {
        level.push_back(v);
        count.push_back(1);
        while (level.size() >= 2 && level[level.size() - 2] > level.back()) {
            const double merged = (level[level.size() - 2] * static_cast<double>(count[count.size() - 2]) +
                                   level.back() * static_cast<double>(count.back())) /
                                  static_cast<double>(count[count.size() - 2] + count.back());
            count[count.size() - 2] += count.back();
            level[level.size() - 2] = merged;
            level.pop_back();
            count.pop_back();
        }
    }
    std::vector<double> out;
    out.reserve(values.size());
    for (std::size_t b = 0; b < level.size(); ++b)
        out.insert(out.end(), count[b], level[b]);
    return out;
}

double quantile(std::vector<double> values, double q) {
    if (values.empty()) throw std::invalid_argument("quantile: empty sample");
    if (q < 0.0 || q > 1.0) throw std::invalid_argument("quantile: q outside [0,1]");
    std::sort(values.begin(), values.end());
    const double pos = q * static_cast<double>(values.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(pos);
    if (lo + 1 >= values.size()) return values.back();
    const double frac = pos - static_cast<double>(lo);
    return values[lo] * (1.0 - frac) + values[lo + 1] * frac;
}

GaussLegendre gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: order must be >= 1");
    GaussLegendre rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Chebyshev-based initial guess, then Newton on P_n.
        double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                            (static_cast<double>(n) + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= n; ++j) {
                const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.nodes[static_cast<std::size_t>(i)] = -x;
        rule.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.weights[static_cast<std::size_t>(i)] = w;
        rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
    }
    return rule;
}

}  // namespace sheetlab
