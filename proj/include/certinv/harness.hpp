#pragma once

#include "certinv/bounds.hpp"
#include "certinv/core.hpp"
#include "certinv/costinf.hpp"
#include "certinv/demand.hpp"
#include "certinv/ingest.hpp"
#include "certinv/policy.hpp"
#include "certinv/predict.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace certinv {

enum class Scenario { periodic, sir, feedback, adversarial, elec2 };

std::string_view to_string(Scenario s);
std::optional<Scenario> parse_scenario(std::string_view name);
std::string_view to_string(PolicyKind p);
std::optional<PolicyKind> parse_policy(std::string_view name);

struct DemandModelConfig {
    double lambda = 0.99;
    double p0 = 100.0;
    DemandFeatureMap features;
};

/// Everything a run needs.
struct RunConfig {
    Scenario scenario = Scenario::periodic;
    SystemConfig system;
    PolicyKind policy = PolicyKind::certified;
    DemandModelConfig demand_model;
    CostModelConfig cost_model;
    double inference_t_star = 40.0;
    double inference_b_star = 0.0; ///< <= 0 selects the default H
    SirState sir_initial;
    double adversary_eps = 1e-3;
    std::string data_path;
    std::string column = "nswdemand";
    std::string out_dir = "out";

    void validate() const;
    double effective_inference_b_star() const;
};

/// Defaults for each scenario (T, H, model orders, forgetting factors,
/// burn-in lengths).
RunConfig default_config(Scenario scenario);

/// One row of a trajectory. Row t = T carries only the final stock and the
/// policy error process; cost-inference fields are set for t <= T - H (and
/// the error process up to t = T - H + 1).
struct StepRecord {
    int t = 0;
    double stock = 0.0;
    std::optional<double> order;
    std::optional<double> demand;
    std::optional<double> cost;
    std::optional<double> w_hat;
    std::optional<Gain> policy_gain;
    int policy_errors = 0;
    double policy_bound = 0.0;
    std::optional<double> horizon_cost;
    std::optional<double> cost_prediction;
    std::optional<CostInterval> nominal;
    std::optional<Gain> q;
    std::optional<CostInterval> interval;
    std::optional<bool> covered;
    std::optional<int> inference_errors;
    std::optional<int> inference_observed;
    std::optional<double> inference_bound;
};

struct RunSummary {
    int T = 0;
    int H = 0;
    double alpha = 0.0;
    double beta = 0.0;
    int critical_events = 0;
    double service_level = 0.0;
    int resolved_horizons = 0;
    int miscoverage_events = 0;
    double coverage = 0.0;
    double mean_cost = 0.0;
    double max_horizon_cost = 0.0;
    double cost_cap = 0.0;
    int max_policy_errors = 0;
    int max_inference_errors = 0;
    int full_intervals = 0;
    int empty_intervals = 0;
    double mean_interval_width = 0.0;
    bool meets_service_level = false;
    bool meets_coverage = false;
    bool policy_errors_bounded = false;
    bool inference_errors_bounded = false;
    bool costs_bounded = false;

    bool certified() const {
        return meets_service_level && meets_coverage && policy_errors_bounded && inference_errors_bounded &&
               costs_bounded;
    }
};

struct RunResult {
    RunConfig config;
    std::string generator;
    std::vector<StepRecord> steps;
    RunSummary summary;
};

struct Pretraining {
    RlsState demand_model;
    HistoryLog log;
};

/// Replay t = -T_hist .. -1 under the empirical-quantile baseline policy,
/// tracking the demand model along the way. The cost model is untouched.
Pretraining pretrain(DemandGenerator& generator, const SystemConfig& system, const DemandModelConfig& model);

/// Closed-loop run. Per step t: observe X_t, resolve C^H_{t-H}, predict
/// demand, order, emit the cost interval for C^H_t, draw W_t, advance the
/// stock and record c_t.
RunResult run(const RunConfig& config, DemandGenerator& generator);

/// Build the scenario's generator (loading data for elec2) and run.
RunResult run(const RunConfig& config);

/// Run as above on an already loaded series (evaluation window is used).
RunResult run(const RunConfig& config, const Elec2Series& series);

std::unique_ptr<DemandGenerator> make_generator(const RunConfig& config);

/// Summary metrics recomputed from the per-step records.
RunSummary metrics(std::span<const StepRecord> steps, const RunConfig& config);

/// Independent runs for each seed, in parallel; results in seed order.
std::vector<RunResult> run_seeds(const RunConfig& config, std::span<const std::uint64_t> seeds);

} // namespace certinv
