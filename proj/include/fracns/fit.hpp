#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

namespace fracns {

struct FitResult {
    double exponent = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    double window_min = 0.0;
    double window_max = 0.0;
};

/// Least-squares fit of log(y) = exponent * log(x) + intercept.
inline FitResult loglog_fit(const Eigen::ArrayXd& x, const Eigen::ArrayXd& y) {
    if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("loglog_fit: need >= 2 points");
    if ((x <= 0.0).any() || (y <= 0.0).any()) throw std::domain_error("loglog_fit: positive data required");
    const Eigen::ArrayXd lx = x.log(), ly = y.log();
    const double mx = lx.mean(), my = ly.mean();
    const double sxx = ((lx - mx) * (lx - mx)).sum();
    const double sxy = ((lx - mx) * (ly - my)).sum();
    FitResult fit;
    fit.exponent = sxy / sxx;
    fit.intercept = my - fit.exponent * mx;
    const Eigen::ArrayXd pred = fit.exponent * lx + fit.intercept;
    const double ss_res = ((ly - pred) * (ly - pred)).sum();
    const double ss_tot = ((ly - my) * (ly - my)).sum();
    fit.r_squared = ss_tot == 0.0 ? 1.0 : 1.0 - ss_res / ss_tot;
    fit.window_min = x.minCoeff();
    fit.window_max = x.maxCoeff();
    return fit;
}

}  // namespace fracns
