#ifndef SHEETLAB_STATS_HPP
#define SHEETLAB_STATS_HPP

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace sheetlab {

/// Neumaier compensated accumulator. Keeps a running correction term so
/// long sums (2^14+ terms) do not lose low-order digits.
class KahanSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

/// Pairwise reduction in a fixed order. Same result regardless of how the
/// inputs were produced (thread count never changes the tree shape).
double pairwise_sum(std::span<const double> values);

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double slope_stderr = 0.0;
    double residual_rms = 0.0;
    std::size_t n = 0;
};

/// Ordinary least squares y = a + b x. Throws std::invalid_argument if the
/// design is degenerate (fewer than two distinct x values).
LineFit fit_line(std::span<const double> x, std::span<const double> y);

/// Least squares with a shared slope and one intercept per group:
/// y = a_{g(i)} + b x. Used for decay fits stratified by bands of the
/// controlled variable. Throws on degenerate design.
LineFit fit_line_grouped(std::span<const double> x, std::span<const double> y,
                         std::span<const int> group);

/// Fixed-slope regression y = (x - root) * slope: returns the least-squares
/// root and its standard error.
struct RootFit {
    double root = 0.0;
    double root_stderr = 0.0;
    double residual_rms = 0.0;
};
RootFit fit_root_fixed_slope(std::span<const double> x, std::span<const double> y,
                             double slope);

/// Pool-adjacent-violators projection onto non-decreasing sequences.
std::vector<double> isotonic_non_decreasing(std::span<const double> values);

/// Empirical quantile (linear interpolation between order statistics),
/// q in [0,1].
double quantile(std::vector<double> values, double q);

struct GaussLegendre {
    std::vector<double> nodes;    // on [-1, 1]
    std::vector<double> weights;
};

/// Gauss-Legendre rule of order n (Newton iteration on Legendre roots).
GaussLegendre gauss_legendre(int n);

}  // namespace sheetlab

#endif
