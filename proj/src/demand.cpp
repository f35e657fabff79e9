#include "certinv/demand.hpp"
#include "certinv/core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace certinv {

DemandGenerator::DemandGenerator(double w_max)
    : w_max_(w_max), below_cap_(std::nextafter(w_max, 0.0)) {
    if (!(w_max > 0.0)) throw PreconditionError("DemandGenerator: w_max must be positive");
}

double DemandGenerator::draw(const StepView& view) {
    const double w = generate(view);
    if (std::isnan(w)) throw PreconditionError(name() + ": generated NaN demand at t=" + std::to_string(view.t));
    return std::clamp(w, 0.0, below_cap_);
}

double periodic_demand(int t, double shock) {
    const double w = 20.0 + 20.0 * std::sin(2.0 * std::numbers::pi * t / 50.0) + shock;
    return std::clamp(w, 0.0, 50.0);
}

PeriodicDemand::PeriodicDemand(std::uint64_t seed, double w_max) : DemandGenerator(w_max), rng_(seed) {}

double PeriodicDemand::generate(const StepView& view) {
    return periodic_demand(view.t, shock_(rng_));
}

std::pair<double, SirState> sir_step(const SirState& s, bool reinfection) {
    const double e = reinfection ? 1.0 : 0.0;
    const double S1 = s.S + (s.R - 0.001) * e;
    const double I1 = s.I + 0.001 * e;
    SirState next;
    next.S = S1 - 0.5 * S1 * I1;
    next.I = std::max(0.0, I1 + 0.5 * S1 * I1 - 0.2 * I1);
    next.R = (1.0 - e) * s.R + 0.2 * (s.I + 0.001 * e);
    return {50.0 * next.I, next};
}

SirDemand::SirDemand(std::uint64_t seed, SirState initial, double w_max)
    : DemandGenerator(w_max), rng_(seed), state_(initial) {}

double SirDemand::generate(const StepView&) {
    auto [w, next] = sir_step(state_, reinfect_(rng_));
    state_ = next;
    return w;
}

double feedback_demand(double previous_stock, double shock) {
    if (previous_stock < 0.0) throw PreconditionError("feedback_demand: stock must be nonnegative");
    return std::min(5.0 + previous_stock + shock, 49.999);
}

FeedbackDemand::FeedbackDemand(std::uint64_t seed, double w_max) : DemandGenerator(w_max), rng_(seed) {}

double FeedbackDemand::generate(const StepView& view) {
    const double w = feedback_demand(previous_stock_, shock_(rng_));
    previous_stock_ = view.stock;
    return w;
}

AdversarialDemand::AdversarialDemand(std::uint64_t seed, double w_max, double eps, double x_c)
    : DemandGenerator(w_max), rng_(seed), eps_(eps), x_c_(x_c) {
    if (!(eps > 0.0 && eps < w_max)) throw PreconditionError("AdversarialDemand: eps must lie in (0, w_max)");
}

double AdversarialDemand::generate(const StepView& view) {
    const double high = w_max() - eps_;
    if (view.stock + view.order - high <= x_c_) return high;
    return std::bernoulli_distribution(0.5)(rng_) ? high : 0.0;
}

SeriesDemand::SeriesDemand(std::vector<double> values, int first_t, double w_max, std::string label)
    : DemandGenerator(w_max), values_(std::move(values)), first_t_(first_t), label_(std::move(label)) {}

double SeriesDemand::generate(const StepView& view) {
    const long i = static_cast<long>(view.t) - first_t_;
    if (i < 0 || i >= static_cast<long>(values_.size()))
        throw PreconditionError("SeriesDemand: no sample for t=" + std::to_string(view.t));
    return values_[static_cast<std::size_t>(i)];
}

} // namespace certinv
