#include "certinv/predict.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace certinv {

RlsState RlsState::init(int dim, double lambda, double p0, const Eigen::VectorXd& theta0) {
    if (dim <= 0) throw PreconditionError("RlsState: dimension must be positive");
    if (!(lambda > 0.0 && lambda <= 1.0)) throw PreconditionError("RlsState: lambda must lie in (0, 1]");
    if (!(p0 > 0.0)) throw PreconditionError("RlsState: p0 must be positive");
    RlsState s;
    s.lambda = lambda;
    s.P = Eigen::MatrixXd::Identity(dim, dim) * p0;
    if (theta0.size() == 0) {
        s.theta = Eigen::VectorXd::Zero(dim);
    } else {
        if (theta0.size() != dim) throw PreconditionError("RlsState: theta0 has wrong dimension");
        s.theta = theta0;
    }
    return s;
}

RlsState rls_update(RlsState s, const Eigen::VectorXd& phi, double y) {
    if (phi.size() != s.theta.size()) throw PreconditionError("rls_update: dimension mismatch");
    if (!std::isfinite(y) || !phi.allFinite()) throw PreconditionError("rls_update: non-finite input");
    if (!(s.lambda > 0.0 && s.lambda <= 1.0)) throw PreconditionError("rls_update: lambda must lie in (0, 1]");

    const Eigen::VectorXd Pphi = s.P * phi;
    const double denom = s.lambda + phi.dot(Pphi);
    const Eigen::VectorXd k = Pphi / denom;
    s.theta += k * (y - phi.dot(s.theta));
    // P is symmetric, so phi' P = (P phi)'.
    s.P = (s.P - k * Pphi.transpose()) / s.lambda;
    s.P = 0.5 * (s.P + s.P.transpose()).eval();
    return s;
}

double predict(const RlsState& s, const Eigen::VectorXd& phi) {
    if (phi.size() != s.theta.size()) throw PreconditionError("predict: dimension mismatch");
    return phi.dot(s.theta);
}

Eigen::VectorXd DemandFeatureMap::operator()(const HistoryLog& log, int t) const {
    Eigen::VectorXd phi(dim());
    int i = 0;
    phi[i++] = 1.0;
    for (int lag = 1; lag <= d_w; ++lag) phi[i++] = log.demand_or_zero(t - lag);
    for (int lag = 0; lag <= d_x; ++lag) phi[i++] = log.stock_or_zero(t - lag);
    return phi;
}

Eigen::VectorXd CostFeatureMap::operator()(std::span<const double> resolved, int t, int H) const {
    Eigen::VectorXd phi(dim());
    int i = 0;
    phi[i++] = 1.0;
    for (int k = ar_order - 1; k >= 0; --k) {
        const long tau = static_cast<long>(t) - H - k;
        phi[i++] = (tau >= 0 && tau < static_cast<long>(resolved.size())) ? resolved[tau] : 0.0;
    }
    for (double period : fourier_periods) {
        const double angle = 2.0 * std::numbers::pi * t / period;
        phi[i++] = std::sin(angle);
        phi[i++] = std::cos(angle);
    }
    return phi;
}

std::optional<double> empirical_quantile(std::span<const double> residuals, double level) {
    if (residuals.empty()) return std::nullopt;
    if (std::isnan(level)) throw PreconditionError("empirical_quantile: level is NaN");
    if (level <= 0.0) return -std::numeric_limits<double>::infinity();
    const std::size_t n = residuals.size();
    const double dn = static_cast<double>(n);
    if (level > 1.0) return std::numeric_limits<double>::infinity();

    // smallest k with k / n >= level, evaluated with the same comparison as the definition
    auto k = static_cast<std::size_t>(std::ceil(level * dn));
    k = std::clamp<std::size_t>(k, 1, n);
    while (k > 1 && static_cast<double>(k - 1) / dn >= level) --k;
    while (k < n && static_cast<double>(k) / dn < level) ++k;

    std::vector<double> sorted(residuals.begin(), residuals.end());
    std::nth_element(sorted.begin(), sorted.begin() + static_cast<long>(k - 1), sorted.end());
    return sorted[k - 1];
}

double baseline_quantile_policy(std::span<const double> demand_history, double alpha, double stock,
                                double w_max) {
    if (stock < 0.0 || stock > w_max) throw PreconditionError("baseline_quantile_policy: stock outside [0, w_max]");
    const double cap = w_max - stock;
    if (demand_history.empty()) return cap;
    // level 0 would give -inf; the smallest observation is the natural floor
    const double level = 1.0 - alpha;
    const auto q = level > 0.0 ? empirical_quantile(demand_history, level)
                               : *std::min_element(demand_history.begin(), demand_history.end());
    return std::min(std::max(0.0, *q - stock), cap);
}

} // namespace certinv
