#include "certinv/harness.hpp"
#include "certinv/report.hpp"
#include "oracles.hpp"
#include "synthetic_elec2.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <filesystem>

using namespace certinv;

namespace {

class Constant final : public DemandGenerator {
public:
    explicit Constant(double v, double w_max = 50.0) : DemandGenerator(w_max), v_(v) {}
    std::string name() const override { return "constant"; }

protected:
    double generate(const StepView&) override { return v_; }

private:
    double v_;
};

class FailsAt final : public DemandGenerator {
public:
    explicit FailsAt(int t) : DemandGenerator(50.0), t_(t) {}
    std::string name() const override { return "fails"; }

protected:
    double generate(const StepView& v) override {
        if (v.t == t_) throw std::runtime_error("sensor offline");
        return 10.0;
    }

private:
    int t_;
};

} // namespace

TEST(Pretrain, ZeroWindowLeavesPriorUntouched) {
    SystemConfig sys;
    sys.T_hist = 0;
    Constant g(5.0);
    const auto pre = pretrain(g, sys, {});
    EXPECT_EQ(pre.log.end_t(), 0);
    EXPECT_EQ(pre.demand_model.theta, Eigen::VectorXd::Zero(6));
    EXPECT_EQ(pre.demand_model.P, Eigen::MatrixXd::Identity(6, 6) * 100.0);
}

TEST(Pretrain, DefaultWindowLength) {
    SystemConfig sys;
    PeriodicDemand g(1);
    const auto pre = pretrain(g, sys, {});
    EXPECT_EQ(pre.log.first_t(), -150);
    EXPECT_EQ(pre.log.end_t(), 0);
    EXPECT_EQ(pre.log.demands().size(), 150u);
}

TEST(Pretrain, ConstantDemandIsLearnt) {
    SystemConfig sys;
    const DemandModelConfig model{.lambda = 1.0, .p0 = 100.0, .features = {.d_w = 2, .d_x = 2}};
    Constant g(5.0);
    const auto pre = pretrain(g, sys, model);

    const int n = sys.T_hist;
    Eigen::MatrixXd Phi(n, model.features.dim());
    Eigen::VectorXd y(n);
    for (int i = 0; i < n; ++i) {
        Phi.row(i) = model.features(pre.log, -n + i).transpose();
        y[i] = pre.log.demand(-n + i);
    }
    const auto ref = oracle::weighted_least_squares(Phi, y, 1.0, 100.0, Eigen::VectorXd::Zero(model.features.dim()));
    const Eigen::VectorXd phi0 = model.features(pre.log, 0);
    const double w_hat = predict(pre.demand_model, phi0);
    EXPECT_NEAR(w_hat, phi0.dot(ref.theta), 1e-6);
    EXPECT_NEAR(w_hat, 5.0, 1e-3);
}

TEST(Run, TrivialPolicyNeverRunsOut) {
    for (auto scenario : {Scenario::periodic, Scenario::sir, Scenario::feedback, Scenario::adversarial}) {
        RunConfig c = default_config(scenario);
        c.policy = PolicyKind::trivial;
        const auto r = run(c);
        EXPECT_EQ(r.summary.critical_events, 0) << to_string(scenario);
        EXPECT_EQ(r.summary.service_level, 1.0);
        for (std::size_t t = 1; t < r.steps.size(); ++t) EXPECT_GT(r.steps[t].stock, 0.0);
    }
}

TEST(Run, RecordLayoutFollowsTheStepProtocol) {
    const RunConfig c = default_config(Scenario::periodic);
    const auto r = run(c);
    const int T = c.system.T, H = c.system.H;
    ASSERT_EQ(static_cast<int>(r.steps.size()), T + 1);
    int errors = 0;
    for (int t = 0; t <= T; ++t) {
        const auto& s = r.steps[static_cast<std::size_t>(t)];
        ASSERT_EQ(s.t, t);
        if (t >= 1 && s.stock <= c.system.x_c) ++errors;
        ASSERT_EQ(s.policy_errors, errors);
        ASSERT_EQ(s.order.has_value(), t < T);
        ASSERT_EQ(s.interval.has_value(), t <= T - H);
        ASSERT_EQ(s.covered.has_value(), t <= T - H);
        ASSERT_EQ(s.inference_errors.has_value(), t <= T - H + 1);
        if (t < T) {
            ASSERT_GE(*s.order, 0.0);
            ASSERT_LE(*s.order, c.system.w_max - s.stock);
            ASSERT_LE(s.stock, c.system.w_max);
            ASSERT_DOUBLE_EQ(*s.cost, *s.order + c.system.h * s.stock);
            ASSERT_DOUBLE_EQ(r.steps[static_cast<std::size_t>(t) + 1].stock,
                             std::max(0.0, s.stock + *s.order - *s.demand));
        }
        if (t <= T - H) {
            double sum = 0.0;
            for (int k = 0; k < H; ++k) sum += *r.steps[static_cast<std::size_t>(t + k)].cost;
            ASSERT_NEAR(*s.horizon_cost, sum, 1e-9);
            ASSERT_EQ(*s.covered, s.interval->contains(*s.horizon_cost));
            if (s.q->is_infinite()) ASSERT_TRUE(s.interval->is_full);
        }
        if (t <= static_cast<int>(c.inference_t_star) && t <= T - H) ASSERT_TRUE(s.interval->is_full);
    }
    EXPECT_EQ(errors, r.summary.critical_events);
}

TEST(Run, GuaranteesHoldAcrossSeeds) {
    for (auto scenario : {Scenario::periodic, Scenario::sir, Scenario::feedback}) {
        RunConfig c = default_config(scenario);
        const std::vector<std::uint64_t> seeds{101, 102, 103, 104, 105};
        for (const auto& r : run_seeds(c, seeds)) {
            EXPECT_TRUE(r.summary.meets_service_level) << to_string(scenario) << " seed " << r.config.system.seed;
            EXPECT_TRUE(r.summary.meets_coverage) << to_string(scenario) << " seed " << r.config.system.seed;
            EXPECT_TRUE(r.summary.policy_errors_bounded);
            EXPECT_TRUE(r.summary.inference_errors_bounded);
            EXPECT_TRUE(r.summary.costs_bounded);
        }
    }
}

TEST(Run, UncertifiedPolicyIsNotAdmissible) {
    RunConfig c = default_config(Scenario::periodic);
    c.policy = PolicyKind::uncertified;
    EXPECT_FALSE(run(c).summary.meets_service_level);
}

TEST(Run, ReproducibleBytes) {
    RunConfig c = default_config(Scenario::sir);
    c.system.seed = 77;
    const auto a = trajectory_csv(run(c));
    const auto b = trajectory_csv(run(c));
    EXPECT_EQ(a, b);
    c.system.seed = 78;
    EXPECT_NE(a, trajectory_csv(run(c)));
}

TEST(Run, ErrorsCarryStepContext) {
    RunConfig c = default_config(Scenario::periodic);
    c.system.T_hist = 0;
    FailsAt g(17);
    try {
        run(c, g);
        FAIL() << "expected an exception";
    } catch (const std::runtime_error& e) {
        EXPECT_NE(std::string(e.what()).find("t=17"), std::string::npos) << e.what();
        EXPECT_NE(std::string(e.what()).find("sensor offline"), std::string::npos);
    }
}

TEST(Run, InvalidConfigRejected) {
    RunConfig c = default_config(Scenario::periodic);
    c.system.H = 1;
    EXPECT_THROW(run(c), PreconditionError);
    c = default_config(Scenario::periodic);
    c.inference_b_star = 20; // > beta * (T - H + 1)
    EXPECT_THROW(run(c), PreconditionError);
}

TEST(Metrics, EdgeCases) {
    RunConfig c = default_config(Scenario::periodic);
    c.system.T = 4;
    c.system.H = 2;
    c.system.alpha = 0.5;
    c.system.beta = 0.5;
    c.inference_t_star = 0;
    c.inference_b_star = 1;
    std::vector<StepRecord> steps(5);
    for (int t = 0; t <= 4; ++t) {
        steps[static_cast<std::size_t>(t)].t = t;
        steps[static_cast<std::size_t>(t)].stock = 1.0;
        steps[static_cast<std::size_t>(t)].policy_bound = 2.0;
    }
    for (int t = 0; t <= 2; ++t) {
        auto& s = steps[static_cast<std::size_t>(t)];
        s.interval = CostInterval::full(c.system.cost_cap());
        s.horizon_cost = 3.0;
        s.covered = true;
    }
    const auto m = metrics(steps, c);
    EXPECT_EQ(m.service_level, 1.0);
    EXPECT_EQ(m.coverage, 1.0);
    EXPECT_EQ(m.full_intervals, 3);
    EXPECT_TRUE(m.meets_coverage);
}

TEST(Report, CsvHeaderAndMetricsJson) {
    const auto r = run(default_config(Scenario::feedback));
    const auto csv = trajectory_csv(r);
    const auto header = csv.substr(0, csv.find('\n'));
    EXPECT_EQ(header, "t,X,U,W,c,w_hat,g_policy,E_policy,b_policy,C_H,c_hat,nominal_lo,nominal_hi,q,lo,hi,full,empty,"
                      "covered,E_inf,E_inf_observed,b_inf");
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 302);

    const auto j = nlohmann::json::parse(metrics_json(r));
    for (const auto& [k, v] : j.items()) EXPECT_TRUE(v.is_number()) << k;
    EXPECT_EQ(j["service_level"].get<double>(), r.summary.service_level);
    EXPECT_EQ(j["coverage"].get<double>(), r.summary.coverage);
}

TEST(Run, Elec2LookAlikeMeetsBothGuarantees) {
    const RunConfig defaults = default_config(Scenario::elec2);
    const auto n = static_cast<std::size_t>(2 * (defaults.system.T_hist + defaults.system.T));
    const auto path = std::filesystem::temp_directory_path() / "certinv_elec2_lookalike.csv";
    fixtures::write_elec2_csv(path, fixtures::synthetic_elec2(n, 5));

    RunConfig c = defaults;
    c.data_path = path.string();
    const auto r = run(c);
    EXPECT_EQ(r.generator, "elec2");
    EXPECT_TRUE(r.summary.certified()) << "service " << r.summary.service_level << " coverage " << r.summary.coverage;
    EXPECT_EQ(r.summary.resolved_horizons, c.system.T - c.system.H + 1);
    std::filesystem::remove(path);
}
