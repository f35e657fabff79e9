#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace certinv {

/// Raised when an operation is called outside its domain.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Parameters shared by every run.
struct SystemConfig {
    int T = 300;            ///< horizon length (steps)
    int H = 10;             ///< cost horizon (steps), H >= 2
    double alpha = 0.05;    ///< service-level rate
    double beta = 0.05;     ///< coverage rate
    double w_max = 50.0;    ///< demand upper bound (exclusive)
    double x_c = 0.0;       ///< critical stock threshold
    double h = 1.0;         ///< holding cost per item per step
    int T_hist = 150;       ///< pretraining window length
    double x0 = 0.0;        ///< stock at the start of pretraining
    std::uint64_t seed = 1;

    /// Throws PreconditionError naming the first violated invariant.
    void validate() const;

    /// A-priori bound on the H-step operating cost, H * w_max * (1 + h).
    double cost_cap() const { return H * w_max * (1.0 + h); }

    /// Number of resolvable horizons, T - H + 1.
    int resolved_horizons() const { return T - H + 1; }
};

struct InventoryState {
    int t = 0;
    double stock = 0.0;
    int critical_events = 0;
};

/// X_{t+1} = max(0, X + U - W).
double step_dynamics(double stock, double order, double demand);

/// c_t = U_t + h X_t.
double period_cost(double order, double stock, double holding_rate);

/// Sum of exactly H period costs.
double horizon_cost(std::span<const double> costs, int H);

inline bool is_critical(double stock, double threshold) { return stock <= threshold; }

/// Append-only record of the information set, indexed by absolute time.
///
/// Time may start below zero (pretraining). Stock is recorded one step ahead
/// of orders/demand/costs: after append_step at time t the stock at t+1 is
/// known.
class HistoryLog {
public:
    HistoryLog(int first_t, double initial_stock);

    int first_t() const { return first_t_; }
    /// One past the last time with a recorded order/demand/cost.
    int end_t() const { return first_t_ + static_cast<int>(orders_.size()); }

    void append_step(double order, double demand, double cost, double next_stock);

    bool has_stock(int t) const;
    bool has_step(int t) const;

    double stock(int t) const;
    double order(int t) const;
    double demand(int t) const;
    double cost(int t) const;

    /// Lagged values with 0 for times before the log starts.
    double stock_or_zero(int t) const { return has_stock(t) ? stock(t) : 0.0; }
    double demand_or_zero(int t) const { return has_step(t) ? demand(t) : 0.0; }

    /// C^H_t, defined once c_t .. c_{t+H-1} are recorded.
    std::optional<double> horizon_cost_at(int t, int H) const;

    std::span<const double> demands() const { return demands_; }

private:
    std::size_t index(int t) const { return static_cast<std::size_t>(t - first_t_); }

    int first_t_;
    std::vector<double> stocks_;
    std::vector<double> orders_;
    std::vector<double> demands_;
    std::vector<double> costs_;
};

} // namespace certinv
