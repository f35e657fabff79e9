#include "certinv/harness.hpp"

#include <algorithm>
#include <array>
#include <future>
#include <stdexcept>
#include <utility>

namespace certinv {

namespace {

constexpr std::array<std::pair<Scenario, std::string_view>, 5> kScenarioNames{{
    {Scenario::periodic, "periodic"},
    {Scenario::sir, "sir"},
    {Scenario::feedback, "feedback"},
    {Scenario::adversarial, "adversarial"},
    {Scenario::elec2, "elec2"},
}};

constexpr std::array<std::pair<PolicyKind, std::string_view>, 3> kPolicyNames{{
    {PolicyKind::certified, "certified"},
    {PolicyKind::uncertified, "uncertified"},
    {PolicyKind::trivial, "trivial"},
}};

} // namespace

std::string_view to_string(Scenario s) {
    for (const auto& [k, v] : kScenarioNames)
        if (k == s) return v;
    return "unknown";
}

std::optional<Scenario> parse_scenario(std::string_view name) {
    for (const auto& [k, v] : kScenarioNames)
        if (v == name) return k;
    return std::nullopt;
}

std::string_view to_string(PolicyKind p) {
    for (const auto& [k, v] : kPolicyNames)
        if (k == p) return v;
    return "unknown";
}

std::optional<PolicyKind> parse_policy(std::string_view name) {
    for (const auto& [k, v] : kPolicyNames)
        if (v == name) return k;
    return std::nullopt;
}

void RunConfig::validate() const {
    system.validate();
    if (demand_model.features.d_w < 0 || demand_model.features.d_x < 0)
        throw PreconditionError("demand model orders must be >= 0");
    if (cost_model.features.ar_order < 0) throw PreconditionError("cost_ar_order must be >= 0");
    for (double p : cost_model.features.fourier_periods)
        if (!(p > 0.0)) throw PreconditionError("cost_fourier_periods must be positive");
    if (!(adversary_eps > 0.0 && adversary_eps < system.w_max))
        throw PreconditionError("adversary_eps must lie in (0, w_max)");
    // constructs and validates both bounds
    inference_bound(system.T, system.H, system.beta, inference_t_star, effective_inference_b_star());
    RlsState::init(demand_model.features.dim(), demand_model.lambda, demand_model.p0);
    RlsState::init(cost_model.features.dim(), cost_model.lambda, cost_model.p0);
}

double RunConfig::effective_inference_b_star() const {
    return inference_b_star > 0.0 ? inference_b_star : static_cast<double>(system.H);
}

RunConfig default_config(Scenario scenario) {
    RunConfig c;
    c.scenario = scenario;
    c.demand_model.lambda = 0.99;
    c.demand_model.features = {.d_w = 2, .d_x = 2};
    c.cost_model.features = {.ar_order = 5, .fourier_periods = {}};
    switch (scenario) {
    case Scenario::periodic:
    case Scenario::adversarial:
        c.cost_model.lambda = 0.99;
        c.inference_t_star = 40;
        break;
    case Scenario::sir:
        c.cost_model.lambda = 0.995;
        c.inference_t_star = 50;
        break;
    case Scenario::feedback:
        c.cost_model.lambda = 0.95;
        c.inference_t_star = 30;
        break;
    case Scenario::elec2: {
        constexpr int day = Elec2Series::samples_per_day;
        c.system.T = 12 * 7 * day;
        c.system.H = day;
        c.system.T_hist = 3 * day;
        c.system.w_max = 1.0;
        c.demand_model.features = {.d_w = day, .d_x = 0};
        c.cost_model.lambda = 0.995;
        // periods of 3, 6, 12, 24 hours and 7 days, in half-hour samples
        c.cost_model.features = {.ar_order = 24, .fourier_periods = {6, 12, 24, 48, 7 * day}};
        c.inference_t_star = 10 * day;
        break;
    }
    }
    return c;
}

Pretraining pretrain(DemandGenerator& generator, const SystemConfig& system, const DemandModelConfig& model) {
    Pretraining out{RlsState::init(model.features.dim(), model.lambda, model.p0),
                    HistoryLog(-system.T_hist, system.x0)};
    std::vector<double> demands;
    demands.reserve(static_cast<std::size_t>(system.T_hist));
    for (int t = -system.T_hist; t < 0; ++t) {
        const double stock = out.log.stock(t);
        const double order = baseline_quantile_policy(demands, system.alpha, stock, system.w_max);
        const double demand = generator.draw({t, stock, order});
        const Eigen::VectorXd phi = model.features(out.log, t);
        out.log.append_step(order, demand, period_cost(order, stock, system.h), step_dynamics(stock, order, demand));
        out.demand_model = rls_update(std::move(out.demand_model), phi, demand);
        demands.push_back(demand);
    }
    return out;
}

RunResult run(const RunConfig& config, DemandGenerator& generator) {
    config.validate();
    const SystemConfig& sys = config.system;
    const int T = sys.T;
    const int H = sys.H;
    const double cap = sys.cost_cap();

    RunResult result;
    result.config = config;
    result.generator = generator.name();

    Pretraining pre = pretrain(generator, sys, config.demand_model);
    HistoryLog& log = pre.log;
    RlsState demand_model = std::move(pre.demand_model);

    OrderPolicy policy(config.policy, T, sys.alpha, sys.w_max, sys.x_c);
    const ErrorBound policy_b = policy_bound(T, sys.alpha);
    CostInference inference(H, sys.beta, cap,
                            inference_bound(T, H, sys.beta, config.inference_t_star, config.effective_inference_b_star()),
                            config.cost_model);

    auto& steps = result.steps;
    steps.resize(static_cast<std::size_t>(T) + 1);

    auto resolve = [&](int tau) {
        const auto realized = log.horizon_cost_at(tau, H);
        if (!realized) throw std::logic_error("horizon cost not yet available for tau=" + std::to_string(tau));
        auto& rec = steps[static_cast<std::size_t>(tau)];
        rec.horizon_cost = *realized;
        rec.covered = inference.resolve(tau, *realized);
    };

    for (int t = 0; t <= T; ++t) {
        try {
            auto& rec = steps[static_cast<std::size_t>(t)];
            const double stock = log.stock(t);
            rec.t = t;
            rec.stock = stock;
            if (t >= 1) policy.observe(t, stock);
            rec.policy_errors = policy.errors();
            rec.policy_bound = policy_b(t);
            if (t >= H) resolve(t - H);
            if (t == T) break;

            const Eigen::VectorXd phi = config.demand_model.features(log, t);
            const double w_hat = predict(demand_model, phi);
            const double order = policy.order(w_hat, stock, t);
            rec.w_hat = w_hat;
            if (config.policy == PolicyKind::certified) rec.policy_gain = policy.gain(t);
            rec.order = order;

            if (t <= T - H) {
                const auto e = inference.emit(t);
                rec.cost_prediction = e.prediction;
                rec.nominal = e.nominal;
                rec.q = e.q;
                rec.interval = e.interval;
                rec.inference_errors = e.error_count;
                rec.inference_observed = inference.ledger().observed_misses();
                rec.inference_bound = inference.bound()(t);
            } else if (t == T - H + 1) {
                rec.inference_errors = inference.ledger().error_count(t);
                rec.inference_observed = inference.ledger().observed_misses();
                rec.inference_bound = inference.bound()(t);
            }

            const double demand = generator.draw({t, stock, order});
            const double cost = period_cost(order, stock, sys.h);
            log.append_step(order, demand, cost, step_dynamics(stock, order, demand));
            rec.demand = demand;
            rec.cost = cost;
            demand_model = rls_update(std::move(demand_model), phi, demand);
        } catch (const std::exception& ex) {
            throw std::runtime_error("run aborted at step t=" + std::to_string(t) + ": " + ex.what());
        }
    }

    result.summary = metrics(steps, config);
    return result;
}

std::unique_ptr<DemandGenerator> make_generator(const RunConfig& config) {
    const auto& sys = config.system;
    switch (config.scenario) {
    case Scenario::periodic:
        return std::make_unique<PeriodicDemand>(sys.seed, sys.w_max);
    case Scenario::sir:
        return std::make_unique<SirDemand>(sys.seed, config.sir_initial, sys.w_max);
    case Scenario::feedback:
        return std::make_unique<FeedbackDemand>(sys.seed, sys.w_max);
    case Scenario::adversarial:
        return std::make_unique<AdversarialDemand>(sys.seed, sys.w_max, config.adversary_eps, sys.x_c);
    case Scenario::elec2: {
        if (config.data_path.empty()) throw DataFileError("scenario elec2 requires a data file (--data PATH)");
        const auto series = load_elec2(config.data_path, config.column);
        auto windows = split_windows(series, sys.T_hist, sys.T);
        return std::make_unique<SeriesDemand>(std::move(windows.evaluation), -sys.T_hist, sys.w_max, "elec2");
    }
    }
    throw std::logic_error("unknown scenario");
}

RunResult run(const RunConfig& config) {
    auto generator = make_generator(config);
    return run(config, *generator);
}

RunResult run(const RunConfig& config, const Elec2Series& series) {
    auto windows = split_windows(series, config.system.T_hist, config.system.T);
    SeriesDemand generator(std::move(windows.evaluation), -config.system.T_hist, config.system.w_max, "elec2");
    return run(config, generator);
}

RunSummary metrics(std::span<const StepRecord> steps, const RunConfig& config) {
    const auto& sys = config.system;
    RunSummary s;
    s.T = sys.T;
    s.H = sys.H;
    s.alpha = sys.alpha;
    s.beta = sys.beta;
    s.cost_cap = sys.cost_cap();
    s.policy_errors_bounded = true;
    s.inference_errors_bounded = true;
    s.costs_bounded = true;

    const ErrorBound inf_b = inference_bound(sys.T, sys.H, sys.beta, config.inference_t_star,
                                             config.effective_inference_b_star());
    double cost_sum = 0.0;
    int cost_n = 0;
    double width_sum = 0.0;
    int interval_n = 0;
    for (const auto& r : steps) {
        if (r.t >= 1 && is_critical(r.stock, sys.x_c)) ++s.critical_events;
        if (r.cost) {
            cost_sum += *r.cost;
            ++cost_n;
        }
        s.max_policy_errors = std::max(s.max_policy_errors, r.policy_errors);
        if (r.policy_errors > r.policy_bound || r.policy_bound > sys.alpha * sys.T) s.policy_errors_bounded = false;
        if (r.inference_errors) {
            s.max_inference_errors = std::max(s.max_inference_errors, *r.inference_errors);
            if (*r.inference_errors > *r.inference_bound || *r.inference_bound > inf_b.ceiling())
                s.inference_errors_bounded = false;
        }
        if (r.horizon_cost) {
            s.max_horizon_cost = std::max(s.max_horizon_cost, *r.horizon_cost);
            if (*r.horizon_cost < 0.0 || *r.horizon_cost > s.cost_cap) s.costs_bounded = false;
        }
        if (r.covered) {
            ++s.resolved_horizons;
            if (!*r.covered) ++s.miscoverage_events;
        }
        if (r.interval) {
            ++interval_n;
            width_sum += r.interval->width();
            if (r.interval->is_full) ++s.full_intervals;
            if (r.interval->is_empty) ++s.empty_intervals;
        }
    }
    s.service_level = 1.0 - static_cast<double>(s.critical_events) / sys.T;
    s.coverage = s.resolved_horizons > 0
                     ? 1.0 - static_cast<double>(s.miscoverage_events) / s.resolved_horizons
                     : 1.0;
    s.mean_cost = cost_n > 0 ? cost_sum / cost_n : 0.0;
    s.mean_interval_width = interval_n > 0 ? width_sum / interval_n : 0.0;
    s.meets_service_level = s.critical_events <= sys.alpha * sys.T;
    s.meets_coverage = s.resolved_horizons == sys.resolved_horizons() &&
                       s.miscoverage_events <= sys.beta * sys.resolved_horizons();
    return s;
}

std::vector<RunResult> run_seeds(const RunConfig& config, std::span<const std::uint64_t> seeds) {
    std::vector<std::future<RunResult>> jobs;
    jobs.reserve(seeds.size());
    for (auto seed : seeds) {
        RunConfig c = config;
        c.system.seed = seed;
        jobs.push_back(std::async(std::launch::async, [c] { return run(c); }));
    }
    std::vector<RunResult> out;
    out.reserve(seeds.size());
    for (auto& j : jobs) out.push_back(j.get());
    return out;
}

} // namespace certinv
