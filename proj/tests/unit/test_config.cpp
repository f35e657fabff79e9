#include "certinv/config.hpp"

#include <gtest/gtest.h>

using namespace certinv;

TEST(Settings, ParsesKeyValueLines) {
    const auto s = parse_settings("# experiment\nscenario = \"sir\"\n\nseed=7   # inline\n  T_hist = 20\n");
    ASSERT_EQ(s.size(), 3u);
    EXPECT_EQ(s[0], Setting("scenario", "sir"));
    EXPECT_EQ(s[1], Setting("seed", "7"));
    EXPECT_EQ(s[2], Setting("T_hist", "20"));
    EXPECT_THROW(parse_settings("just words\n"), ConfigError);
}

TEST(Settings, UnknownKeyIsNamed) {
    try {
        build_config({{"lamda", "0.9"}});
        FAIL();
    } catch (const ConfigError& e) {
        EXPECT_NE(std::string(e.what()).find("lamda"), std::string::npos);
    }
}

TEST(Settings, BadValueIsNamed) {
    try {
        build_config({{"T", "three hundred"}});
        FAIL();
    } catch (const ConfigError& e) {
        EXPECT_NE(std::string(e.what()).find("'T'"), std::string::npos);
    }
    EXPECT_THROW(build_config({{"scenario", "tsunami"}}), ConfigError);
    EXPECT_THROW(build_config({{"policy", "greedy"}}), ConfigError);
}

TEST(Settings, ScenarioDefaultsThenOverrides) {
    const auto sir = build_config({{"seed", "3"}, {"scenario", "sir"}});
    EXPECT_EQ(sir.scenario, Scenario::sir);
    EXPECT_EQ(sir.cost_model.lambda, 0.995);
    EXPECT_EQ(sir.inference_t_star, 50.0);
    EXPECT_EQ(sir.system.seed, 3u);

    const auto elec = build_config({{"scenario", "elec2"}, {"cost_fourier_periods", "[6, 12]"}});
    EXPECT_EQ(elec.system.T, 4032);
    EXPECT_EQ(elec.system.H, 48);
    EXPECT_EQ(elec.demand_model.features.d_w, 48);
    EXPECT_EQ(elec.cost_model.features.fourier_periods, (std::vector<double>{6, 12}));
}

TEST(Settings, ScenarioDefaultsMatchExperiments) {
    const auto p = default_config(Scenario::periodic);
    EXPECT_EQ(p.system.T, 300);
    EXPECT_EQ(p.system.H, 10);
    EXPECT_EQ(p.system.T_hist, 150);
    EXPECT_EQ(p.system.w_max, 50.0);
    EXPECT_EQ(p.demand_model.lambda, 0.99);
    EXPECT_EQ(p.cost_model.lambda, 0.99);
    EXPECT_EQ(p.inference_t_star, 40.0);
    EXPECT_EQ(p.cost_model.features.ar_order, 5);
    EXPECT_EQ(default_config(Scenario::feedback).cost_model.lambda, 0.95);
    EXPECT_EQ(default_config(Scenario::feedback).inference_t_star, 30.0);

    const auto e = default_config(Scenario::elec2);
    EXPECT_EQ(e.system.T_hist, 144);
    EXPECT_EQ(e.system.w_max, 1.0);
    EXPECT_EQ(e.demand_model.features.d_x, 0);
    EXPECT_EQ(e.cost_model.features.ar_order, 24);
    EXPECT_EQ(e.cost_model.features.fourier_periods, (std::vector<double>{6, 12, 24, 48, 336}));
    EXPECT_EQ(e.inference_t_star, 480.0);
    EXPECT_EQ(e.cost_model.lambda, 0.995);
}

TEST(Settings, DumpReadsBackToTheSameConfig) {
    for (auto s : {Scenario::periodic, Scenario::sir, Scenario::feedback, Scenario::adversarial, Scenario::elec2}) {
        RunConfig c = default_config(s);
        c.system.seed = 12345;
        c.data_path = "some file.csv";
        const auto back = build_config(parse_settings(dump_config(c)));
        EXPECT_EQ(config_values(back), config_values(c)) << to_string(s);
    }
}
