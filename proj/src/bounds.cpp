#include "certinv/bounds.hpp"
#include "certinv/core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

namespace certinv {

ErrorBound::ErrorBound(ErrorBoundParams p) : p_(p) {
    if (!(p_.rate >= 0.0 && p_.rate <= 1.0))
        throw PreconditionError("ErrorBound: rate must lie in [0, 1]");
    if (!(p_.T_eff > 0.0))
        throw PreconditionError("ErrorBound: T_eff must be positive");
    if (!(p_.t_star >= 0.0 && p_.t_star < p_.T_eff))
        throw PreconditionError("ErrorBound: t_star must lie in [0, T_eff)");
    if (!(p_.b_star >= 0.0 && p_.b_star <= ceiling()))
        throw PreconditionError("ErrorBound: b_star=" + std::to_string(p_.b_star) +
                                " must lie in [0, rate*T_eff=" + std::to_string(ceiling()) + "]");
}

double ErrorBound::operator()(double t) const {
    if (p_.t_star > 0.0 && t <= p_.t_star) return 0.0;
    const double ramp = std::max(0.0, t - p_.t_star);
    const double top = ceiling();
    return std::min(top, p_.b_star + (top - p_.b_star) * ramp / (p_.T_eff - p_.t_star));
}

ErrorBound policy_bound(int T, double alpha) {
    if (alpha * T < 2.0) throw PreconditionError("policy gain requires alpha * T >= 2");
    return ErrorBound({.b_star = 2.0, .t_star = 0.0, .rate = alpha, .T_eff = static_cast<double>(T)});
}

Gain policy_gain(int errors, int t, int T, double alpha) {
    if (errors < 0 || t < 0 || t > T) throw PreconditionError("policy_gain: need E >= 0 and 0 <= t <= T");
    const double denom = policy_bound(T, alpha)(t);
    const double num = errors + 1.0;
    if (num >= denom) return Gain::infinity();
    return Gain::finite(std::tan(std::numbers::pi / 2.0 * num / denom));
}

Gain inference_gain(int errors, double bound_value) {
    if (errors < 0 || bound_value < 0.0)
        throw PreconditionError("inference_gain: need E >= 0 and b >= 0");
    const double num = errors + 1.0;
    if (!(bound_value > 0.0) || num >= bound_value) return Gain::infinity();
    return Gain::finite(std::tan(std::numbers::pi / 2.0 * (2.0 * num / bound_value - 1.0)));
}

void ErrorProcess::advance(bool event) {
    if (event) ++count_;
    history_.push_back(count_);
}

bool lemma1_oracle(const ErrorBound& bound, const GainFunction& gain, Gain saturation,
                   int trials, std::uint64_t seed) {
    const int horizon = static_cast<int>(std::floor(bound.params().T_eff));
    const int max_errors = static_cast<int>(std::ceil(bound.ceiling())) + 2;

    for (int t = 0; t <= horizon; ++t) {
        for (int e = 0; e <= max_errors; ++e) {
            if (e + 1.0 >= bound(t) && gain(e, t) < saturation) {
                throw PreconditionError("lemma1_oracle: gain is not associated with the bound at E=" +
                                        std::to_string(e) + ", t=" + std::to_string(t));
            }
        }
    }

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < trials; ++trial) {
        // every fourth trial grows greedily
        const double p_grow = (trial % 4 == 0) ? 1.0 : unit(rng);
        int errors = 0;
        for (int t = 0; t < horizon; ++t) {
            const bool saturated = gain(errors, t) >= saturation;
            if (!saturated && unit(rng) < p_grow) ++errors;
            if (errors > bound(t + 1) || bound(t + 1) > bound.ceiling()) return false;
        }
    }
    return true;
}

} // namespace certinv
