#pragma once

#include "certinv/bounds.hpp"
#include "certinv/gain.hpp"
#include "certinv/predict.hpp"

#include <deque>
#include <span>
#include <vector>

namespace certinv {

/// Prediction interval on [0, cap] for an H-step cost.
///
/// is_full marks the structural interval [0, cap] (never set by comparing
/// floats). is_empty marks an interval shrunk past itself by a negative
/// adjustment; it covers nothing.
struct CostInterval {
    double lo = 0.0;
    double hi = 0.0;
    bool is_full = false;
    bool is_empty = false;

    static CostInterval full(double cap) { return {0.0, cap, true, false}; }

    bool contains(double v) const { return !is_empty && lo <= v && v <= hi; }
    double width() const { return is_empty ? 0.0 : hi - lo; }
};

/// [c_hat + Q(beta/2), c_hat + Q(1 - beta/2)] from past residuals, clipped
/// to [0, cap]. Without residuals returns the full interval.
CostInterval nominal_interval(double c_hat, std::span<const double> residuals, double beta, double cap);

/// [max(0, lo - q), min(hi + q, cap)]; +inf gives the full interval and an
/// inverted result is flagged empty.
CostInterval adjust_interval(const CostInterval& nominal, Gain q, double cap);

/// Observed and potential miscoverage bookkeeping for emitted intervals.
///
/// At time t the intervals for tau <= t - H have been resolved against the
/// realised cost; those for t - H < tau < t are pending. The error count is
/// observed misses plus pending intervals that are not the full interval.
class MiscoverageLedger {
public:
    explicit MiscoverageLedger(int H);

    /// Record the interval emitted at tau; taus must be consecutive from 0.
    void emit(int tau, const CostInterval& interval);

    /// Resolve the pending interval for tau. Returns true if covered.
    bool resolve(int tau, double realized_cost);

    int observed_misses() const { return observed_; }
    int resolved_count() const { return static_cast<int>(outcomes_.size()); }
    const std::vector<bool>& covered() const { return outcomes_; }

    /// Pending non-full intervals in (t - H, t).
    int potential_misses(int t) const;

    /// Observed plus potential misses at time t. Throws if the ledger is
    /// not consistent with t (something older than t - H still pending, or
    /// an interval at or after t already emitted).
    int error_count(int t) const;

    int next_tau() const { return next_tau_; }

private:
    struct Pending {
        int tau;
        CostInterval interval;
    };

    int H_;
    int next_tau_ = 0;
    int observed_ = 0;
    std::deque<Pending> pending_;
    std::vector<bool> outcomes_;
};

/// q_t = inference_gain(E_t, b(t)).
Gain compute_q(const MiscoverageLedger& ledger, int t, const ErrorBound& bound);

/// Bound used for cost inference: rate beta, T_eff = T - H + 1, b_star = H
/// unless overridden.
ErrorBound inference_bound(int T, int H, double beta, double t_star, double b_star);

struct CostModelConfig {
    double lambda = 0.99;
    double p0 = 100.0;
    CostFeatureMap features;
};

/// Online cost interval engine: an RLS point predictor for C^H_t, quantile
/// nominal intervals from its past residuals, and the gain adjustment.
class CostInference {
public:
    struct Emission {
        double prediction;
        CostInterval nominal;
        Gain q;
        CostInterval interval;
        int error_count;
    };

    CostInference(int H, double beta, double cap, ErrorBound bound, const CostModelConfig& model);

    /// Emit the interval for C^H_t. Call once per t, in order, after every
    /// tau <= t - H has been resolved.
    Emission emit(int t);

    /// Feed the realised C^H_tau. Returns true if the interval covered it.
    bool resolve(int tau, double realized);

    const MiscoverageLedger& ledger() const { return ledger_; }
    const ErrorBound& bound() const { return bound_; }
    std::span<const double> resolved_costs() const { return resolved_; }
    std::span<const double> residuals() const { return residuals_; }

    /// Substitute gain used in place of compute_q; for negative controls.
    void override_gain(GainFunction g) { gain_override_ = std::move(g); }

private:
    int H_;
    double beta_;
    double cap_;
    ErrorBound bound_;
    CostFeatureMap features_;
    RlsState model_;
    MiscoverageLedger ledger_;
    std::vector<Eigen::VectorXd> emitted_features_;
    std::vector<double> emitted_predictions_;
    std::vector<double> resolved_;
    std::vector<double> residuals_;
    GainFunction gain_override_;
};

} // namespace certinv
