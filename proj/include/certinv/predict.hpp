#pragma once

#include "certinv/core.hpp"

#include <Eigen/Dense>

#include <optional>
#include <span>
#include <vector>

namespace certinv {

/// Recursive least squares state with exponential forgetting.
struct RlsState {
    Eigen::VectorXd theta;
    Eigen::MatrixXd P;
    double lambda = 1.0;

    /// theta = theta0 (zeros if empty), P = p0 * I.
    static RlsState init(int dim, double lambda, double p0, const Eigen::VectorXd& theta0 = {});

    int dim() const { return static_cast<int>(theta.size()); }
};

/// One RLS step: k = P phi / (lambda + phi' P phi), theta += k (y - phi' theta),
/// P = (P - k phi' P) / lambda.
RlsState rls_update(RlsState s, const Eigen::VectorXd& phi, double y);

double predict(const RlsState& s, const Eigen::VectorXd& phi);

/// ARX regressor [1, W_{t-1} .. W_{t-d_w}, X_t .. X_{t-d_x}].
/// Lags before the start of the log read as 0.
struct DemandFeatureMap {
    int d_w = 2;
    int d_x = 2;

    int dim() const { return 1 + d_w + d_x + 1; }
    Eigen::VectorXd operator()(const HistoryLog& log, int t) const;
};

/// Cost regressor [1, C_{t-H-p+1} .. C_{t-H}, sin/cos pairs per period],
/// where C_tau is the realised H-step cost. resolved[tau] holds C_tau for
/// tau = 0 .. resolved.size()-1; anything outside reads as 0.
struct CostFeatureMap {
    int ar_order = 5;
    std::vector<double> fourier_periods;

    int dim() const { return 1 + ar_order + 2 * static_cast<int>(fourier_periods.size()); }
    Eigen::VectorXd operator()(std::span<const double> resolved, int t, int H) const;
};

/// inf{ p : #{r <= p} / n >= level }. nullopt when residuals is empty;
/// -inf for level 0 and +inf when level exceeds 1.
std::optional<double> empirical_quantile(std::span<const double> residuals, double level);

/// Order towards the empirical (1 - alpha)-quantile of past demand, capped
/// at w_max - stock. Empty history orders to capacity.
double baseline_quantile_policy(std::span<const double> demand_history, double alpha, double stock,
                                double w_max);

} // namespace certinv
