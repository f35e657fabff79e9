#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace certinv {

/// What a demand process may observe before choosing W_t: the time, the
/// current stock, and the order just placed.
struct StepView {
    int t = 0;
    double stock = 0.0;
    double order = 0.0;
};

/// Source of demand W_t in [0, w_max).
///
/// Subclasses produce raw values through generate(); draw() clamps them
/// below w_max so the half-open range holds for every emitted value.
class DemandGenerator {
public:
    explicit DemandGenerator(double w_max);
    virtual ~DemandGenerator() = default;

    double draw(const StepView& view);
    double w_max() const { return w_max_; }
    virtual std::string name() const = 0;

protected:
    virtual double generate(const StepView& view) = 0;

private:
    double w_max_;
    double below_cap_;
};

/// 20 + 20 sin(2 pi t / 50) + e, clipped to [0, 50].
double periodic_demand(int t, double shock);

class PeriodicDemand final : public DemandGenerator {
public:
    explicit PeriodicDemand(std::uint64_t seed, double w_max = 50.0);
    std::string name() const override { return "periodic"; }

protected:
    double generate(const StepView& view) override;

private:
    std::mt19937_64 rng_;
    std::normal_distribution<double> shock_{0.0, 1.0};
};

struct SirState {
    double S = 0.999;
    double I = 0.001;
    double R = 0.0;
};

/// One step of the stochastic SIR recursion given the reinfection draw.
/// Returns (50 * I_new, next state).
std::pair<double, SirState> sir_step(const SirState& state, bool reinfection);

class SirDemand final : public DemandGenerator {
public:
    explicit SirDemand(std::uint64_t seed, SirState initial = {}, double w_max = 50.0);
    std::string name() const override { return "sir"; }
    const SirState& state() const { return state_; }

protected:
    double generate(const StepView& view) override;

private:
    std::mt19937_64 rng_;
    std::bernoulli_distribution reinfect_{0.03};
    SirState state_;
};

/// min(5 + X_prev + e, 49.999).
double feedback_demand(double previous_stock, double shock);

/// Demand reacting to the previous step's stock, with chi-squared(1) shocks.
class FeedbackDemand final : public DemandGenerator {
public:
    explicit FeedbackDemand(std::uint64_t seed, double w_max = 50.0);
    std::string name() const override { return "feedback"; }

protected:
    double generate(const StepView& view) override;

private:
    std::mt19937_64 rng_;
    std::chi_squared_distribution<double> shock_{1.0};
    double previous_stock_ = 0.0;
};

/// Sees the published order and demands w_max - eps whenever that drives
/// the stock to or below x_c; otherwise picks 0 or w_max - eps at random.
class AdversarialDemand final : public DemandGenerator {
public:
    AdversarialDemand(std::uint64_t seed, double w_max, double eps, double x_c);
    std::string name() const override { return "adversarial"; }

protected:
    double generate(const StepView& view) override;

private:
    std::mt19937_64 rng_;
    double eps_;
    double x_c_;
};

/// Replays a recorded series; the sample for time t is values[t - first_t].
class SeriesDemand final : public DemandGenerator {
public:
    SeriesDemand(std::vector<double> values, int first_t, double w_max, std::string label);
    std::string name() const override { return label_; }

protected:
    double generate(const StepView& view) override;

private:
    std::vector<double> values_;
    int first_t_;
    std::string label_;
};

} // namespace certinv
