#pragma once

#include "certinv/gain.hpp"

namespace certinv {

/// min(max(0, w_hat - X + g), w_max - X); a saturated gain orders to capacity.
double certified_order(double w_hat, double stock, Gain gain, double w_max);

/// Certified order with the service-level gain evaluated at (E, t).
double certified_order(double w_hat, double stock, int errors, int t, int T, double alpha, double w_max);

/// Always order up to capacity.
double trivial_order(double stock, double w_max);

/// max(0, w_hat - X); carries no service-level guarantee.
double uncertified_order(double w_hat, double stock);

enum class PolicyKind { certified, uncertified, trivial };

/// Per-run policy state: parameters plus the running count of critical
/// stock events E_t = sum_{tau=1..t} 1[X_tau <= x_c].
class OrderPolicy {
public:
    OrderPolicy(PolicyKind kind, int T, double alpha, double w_max, double x_c);

    /// Observe X_t for t >= 1 and count it if critical.
    void observe(int t, double stock);

    Gain gain(int t) const;
    double order(double w_hat, double stock, int t) const;

    int errors() const { return errors_; }
    PolicyKind kind() const { return kind_; }

private:
    PolicyKind kind_;
    int T_;
    double alpha_;
    double w_max_;
    double x_c_;
    int errors_ = 0;
    int last_observed_ = 0;
};

} // namespace certinv
