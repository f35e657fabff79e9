#include "certinv/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace certinv {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw PreconditionError(what);
}

} // namespace

void SystemConfig::validate() const {
    require(T >= 1, "T must be >= 1");
    require(H >= 2, "H must be >= 2");
    require(H <= T, "H must not exceed T");
    require(alpha >= 0.0 && alpha <= 1.0, "alpha must lie in [0, 1]");
    require(beta >= 0.0 && beta <= 1.0, "beta must lie in [0, 1]");
    require(std::isfinite(w_max) && w_max > 0.0, "w_max must be positive");
    require(x_c >= 0.0, "x_c must be >= 0");
    require(std::isfinite(h) && h > 0.0, "h must be positive");
    require(T_hist >= 0, "T_hist must be >= 0");
    require(x0 >= 0.0 && x0 <= w_max, "x0 must lie in [0, w_max]");
    require(alpha * T >= 2.0, "alpha * T must be >= 2");
}

double step_dynamics(double stock, double order, double demand) {
    require(stock >= 0.0 && order >= 0.0 && demand >= 0.0,
            "step_dynamics: stock, order and demand must be nonnegative");
    return std::max(0.0, stock + order - demand);
}

double period_cost(double order, double stock, double holding_rate) {
    require(order >= 0.0 && stock >= 0.0, "period_cost: order and stock must be nonnegative");
    require(holding_rate > 0.0, "period_cost: holding rate must be positive");
    return order + holding_rate * stock;
}

double horizon_cost(std::span<const double> costs, int H) {
    require(static_cast<int>(costs.size()) == H, "horizon_cost: expected exactly H costs");
    require(std::all_of(costs.begin(), costs.end(), [](double c) { return c >= 0.0; }),
            "horizon_cost: costs must be nonnegative");
    return std::accumulate(costs.begin(), costs.end(), 0.0);
}

HistoryLog::HistoryLog(int first_t, double initial_stock) : first_t_(first_t) {
    require(initial_stock >= 0.0, "HistoryLog: initial stock must be nonnegative");
    stocks_.push_back(initial_stock);
}

void HistoryLog::append_step(double order, double demand, double cost, double next_stock) {
    orders_.push_back(order);
    demands_.push_back(demand);
    costs_.push_back(cost);
    stocks_.push_back(next_stock);
}

bool HistoryLog::has_stock(int t) const {
    return t >= first_t_ && index(t) < stocks_.size();
}

bool HistoryLog::has_step(int t) const {
    return t >= first_t_ && index(t) < orders_.size();
}

double HistoryLog::stock(int t) const {
    if (!has_stock(t)) throw std::out_of_range("HistoryLog: no stock at t=" + std::to_string(t));
    return stocks_[index(t)];
}

double HistoryLog::order(int t) const {
    if (!has_step(t)) throw std::out_of_range("HistoryLog: no order at t=" + std::to_string(t));
    return orders_[index(t)];
}

double HistoryLog::demand(int t) const {
    if (!has_step(t)) throw std::out_of_range("HistoryLog: no demand at t=" + std::to_string(t));
    return demands_[index(t)];
}

double HistoryLog::cost(int t) const {
    if (!has_step(t)) throw std::out_of_range("HistoryLog: no cost at t=" + std::to_string(t));
    return costs_[index(t)];
}

std::optional<double> HistoryLog::horizon_cost_at(int t, int H) const {
    if (t < first_t_ || !has_step(t + H - 1)) return std::nullopt;
    return horizon_cost(std::span<const double>(costs_).subspan(index(t), static_cast<std::size_t>(H)), H);
}

} // namespace certinv
