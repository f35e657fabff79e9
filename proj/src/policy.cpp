#include "certinv/policy.hpp"
#include "certinv/bounds.hpp"
#include "certinv/core.hpp"

#include <algorithm>
#include <string>

namespace certinv {

double certified_order(double w_hat, double stock, Gain gain, double w_max) {
    if (stock < 0.0 || stock > w_max) throw PreconditionError("certified_order: stock outside [0, w_max]");
    const double cap = w_max - stock;
    if (gain.is_infinite()) return cap;
    return std::min(std::max(0.0, w_hat - stock + gain.value()), cap);
}

double certified_order(double w_hat, double stock, int errors, int t, int T, double alpha, double w_max) {
    return certified_order(w_hat, stock, policy_gain(errors, t, T, alpha), w_max);
}

double trivial_order(double stock, double w_max) {
    if (stock < 0.0 || stock > w_max) throw PreconditionError("trivial_order: stock outside [0, w_max]");
    return w_max - stock;
}

double uncertified_order(double w_hat, double stock) {
    return std::max(0.0, w_hat - stock);
}

OrderPolicy::OrderPolicy(PolicyKind kind, int T, double alpha, double w_max, double x_c)
    : kind_(kind), T_(T), alpha_(alpha), w_max_(w_max), x_c_(x_c) {
    if (kind_ == PolicyKind::certified) policy_bound(T_, alpha_); // validates alpha * T >= 2
}

void OrderPolicy::observe(int t, double stock) {
    if (t != last_observed_ + 1)
        throw PreconditionError("OrderPolicy::observe: expected t=" + std::to_string(last_observed_ + 1));
    last_observed_ = t;
    if (is_critical(stock, x_c_)) ++errors_;
}

Gain OrderPolicy::gain(int t) const {
    return policy_gain(errors_, t, T_, alpha_);
}

double OrderPolicy::order(double w_hat, double stock, int t) const {
    switch (kind_) {
    case PolicyKind::certified:
        return certified_order(w_hat, stock, gain(t), w_max_);
    case PolicyKind::uncertified:
        return std::min(uncertified_order(w_hat, stock), w_max_ - stock);
    case PolicyKind::trivial:
        return trivial_order(stock, w_max_);
    }
    return 0.0;
}

} // namespace certinv
