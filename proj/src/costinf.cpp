#include "certinv/costinf.hpp"

#include <algorithm>
#include <string>

namespace certinv {

CostInterval nominal_interval(double c_hat, std::span<const double> residuals, double beta, double cap) {
    if (!(beta >= 0.0 && beta <= 1.0)) throw PreconditionError("nominal_interval: beta must lie in [0, 1]");
    const auto q_lo = empirical_quantile(residuals, beta / 2.0);
    const auto q_hi = empirical_quantile(residuals, 1.0 - beta / 2.0);
    if (!q_lo || !q_hi) return CostInterval::full(cap);
    const double lo = std::clamp(c_hat + *q_lo, 0.0, cap);
    const double hi = std::clamp(c_hat + *q_hi, 0.0, cap);
    return {lo, hi, false, false};
}

CostInterval adjust_interval(const CostInterval& nominal, Gain q, double cap) {
    if (nominal.is_empty || nominal.lo < 0.0 || nominal.hi > cap || nominal.lo > nominal.hi)
        throw PreconditionError("adjust_interval: nominal interval must lie within [0, cap]");
    if (q.is_infinite()) return CostInterval::full(cap);
    const double lo = std::max(0.0, nominal.lo - q.value());
    const double hi = std::min(nominal.hi + q.value(), cap);
    if (lo > hi) return {lo, hi, false, true};
    return {lo, hi, nominal.is_full && q.value() >= 0.0, false};
}

MiscoverageLedger::MiscoverageLedger(int H) : H_(H) {
    if (H_ < 2) throw PreconditionError("MiscoverageLedger: H must be >= 2");
}

void MiscoverageLedger::emit(int tau, const CostInterval& interval) {
    if (tau != next_tau_)
        throw PreconditionError("MiscoverageLedger::emit: expected tau=" + std::to_string(next_tau_) +
                                ", got " + std::to_string(tau));
    pending_.push_back({tau, interval});
    ++next_tau_;
}

bool MiscoverageLedger::resolve(int tau, double realized_cost) {
    if (pending_.empty() || pending_.front().tau != tau) {
        if (tau < next_tau_ && (pending_.empty() || tau < pending_.front().tau))
            throw PreconditionError("MiscoverageLedger::resolve: tau=" + std::to_string(tau) + " already resolved");
        throw PreconditionError("MiscoverageLedger::resolve: tau=" + std::to_string(tau) +
                                " is not the oldest pending interval");
    }
    const bool covered = pending_.front().interval.contains(realized_cost);
    pending_.pop_front();
    outcomes_.push_back(covered);
    if (!covered) ++observed_;
    return covered;
}

int MiscoverageLedger::potential_misses(int t) const {
    return static_cast<int>(std::count_if(pending_.begin(), pending_.end(), [&](const Pending& p) {
        return p.tau > t - H_ && p.tau < t && !p.interval.is_full;
    }));
}

int MiscoverageLedger::error_count(int t) const {
    if (next_tau_ > t)
        throw PreconditionError("MiscoverageLedger: interval at tau >= t=" + std::to_string(t) + " already emitted");
    if (!pending_.empty() && pending_.front().tau <= t - H_)
        throw PreconditionError("MiscoverageLedger: tau=" + std::to_string(pending_.front().tau) +
                                " still pending at t=" + std::to_string(t));
    return observed_ + potential_misses(t);
}

Gain compute_q(const MiscoverageLedger& ledger, int t, const ErrorBound& bound) {
    return inference_gain(ledger.error_count(t), bound(t));
}

ErrorBound inference_bound(int T, int H, double beta, double t_star, double b_star) {
    return ErrorBound({.b_star = b_star, .t_star = t_star, .rate = beta, .T_eff = static_cast<double>(T - H + 1)});
}

CostInference::CostInference(int H, double beta, double cap, ErrorBound bound, const CostModelConfig& model)
    : H_(H), beta_(beta), cap_(cap), bound_(std::move(bound)), features_(model.features), ledger_(H) {
    Eigen::VectorXd theta0 = Eigen::VectorXd::Zero(features_.dim());
    theta0[0] = cap_ / 2.0;
    model_ = RlsState::init(features_.dim(), model.lambda, model.p0, theta0);
}

CostInference::Emission CostInference::emit(int t) {
    const Eigen::VectorXd phi = features_(resolved_, t, H_);
    const double c_hat = predict(model_, phi);
    const CostInterval nominal = nominal_interval(c_hat, residuals_, beta_, cap_);
    const int errors = ledger_.error_count(t);
    const Gain q = gain_override_ ? gain_override_(errors, t) : inference_gain(errors, bound_(t));
    const CostInterval interval = adjust_interval(nominal, q, cap_);
    ledger_.emit(t, interval);
    emitted_features_.push_back(phi);
    emitted_predictions_.push_back(c_hat);
    return {c_hat, nominal, q, interval, errors};
}

bool CostInference::resolve(int tau, double realized) {
    if (tau != static_cast<int>(resolved_.size()) || tau >= static_cast<int>(emitted_predictions_.size()))
        throw PreconditionError("CostInference::resolve: unexpected tau=" + std::to_string(tau));
    const bool covered = ledger_.resolve(tau, realized);
    resolved_.push_back(realized);
    residuals_.push_back(realized - emitted_predictions_[static_cast<std::size_t>(tau)]);
    model_ = rls_update(std::move(model_), emitted_features_[static_cast<std::size_t>(tau)], realized);
    return covered;
}

} // namespace certinv
