#pragma once

#include "certinv/gain.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace certinv {

struct ErrorBoundParams {
    double b_star = 2.0;  ///< value right after burn-in
    double t_star = 0.0;  ///< burn-in end; b(t) = 0 on [0, t_star] when t_star > 0
    double rate = 0.05;   ///< alpha or beta
    double T_eff = 300.0; ///< horizon the bound is normalised to
};

/// Piecewise-linear error bound: zero during burn-in, then a ramp from
/// b_star up to rate * T_eff at t = T_eff.
///
/// With t_star = 0 there is no burn-in and b(0) = b_star. The constructor
/// rejects parameters for which b is not a valid bound (negative, decreasing,
/// or exceeding rate * T_eff).
class ErrorBound {
public:
    explicit ErrorBound(ErrorBoundParams p);

    double operator()(double t) const;

    const ErrorBoundParams& params() const { return p_; }
    double ceiling() const { return p_.rate * p_.T_eff; }

private:
    ErrorBoundParams p_;
};

/// Bound paired with the service-level gain: b_star = 2, t_star = 0.
ErrorBound policy_bound(int T, double alpha);

/// Nonlinear integral gain for the order policy.
///
/// r = (E + 1) / b(t) with b the policy bound; tan(pi r / 2) for r < 1 and
/// +inf otherwise.
Gain policy_gain(int errors, int t, int T, double alpha);

/// Gain for the cost interval: tan(pi/2 (2 (E+1)/b - 1)) when 0 < b and
/// E + 1 < b, +inf otherwise. Negative when (E + 1)/b < 1/2.
Gain inference_gain(int errors, double bound_value);

/// Counting process with unit increments.
class ErrorProcess {
public:
    void advance(bool event);
    int count() const { return count_; }
    const std::vector<int>& history() const { return history_; }

private:
    int count_ = 0;
    std::vector<int> history_{0};
};

using GainFunction = std::function<Gain(int errors, int t)>;

/// Brute-force check that a gain bounds any error process it drives.
///
/// Each trial grows the error count by one with a trial-specific probability
/// whenever the gain is below saturation, and never when saturated. Returns
/// true iff E_t <= b(t) <= rate * T_eff held at every step of every trial.
/// Throws PreconditionError when gain is not associated with bound, i.e.
/// some (E, t) with E + 1 >= b(t) has gain below saturation.
bool lemma1_oracle(const ErrorBound& bound, const GainFunction& gain, Gain saturation,
                   int trials, std::uint64_t seed);

} // namespace certinv
