// certinv: run and certify inventory-control scenarios from the command line.

#include "certinv/config.hpp"
#include "certinv/harness.hpp"
#include "certinv/report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace certinv;

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

struct CommonFlags {
    std::optional<std::string> scenario;
    std::optional<std::string> config;
    std::optional<std::string> seed;
    std::optional<std::string> data;
    std::optional<std::string> column;
    std::optional<std::string> out;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--scenario", f.scenario, "periodic | sir | feedback | adversarial | elec2");
    cmd->add_option("--config", f.config, "key = value config file");
    cmd->add_option("--seed", f.seed, "RNG seed (first seed for certify)");
    cmd->add_option("--data", f.data, "Elec2 CSV file");
    cmd->add_option("--column", f.column, "demand column in the data file");
    cmd->add_option("--out", f.out, "output directory");
    cmd->allow_extras();
    cmd->footer("Any config key can be overridden with --key value.");
}

std::vector<Setting> extra_settings(const std::vector<std::string>& extras) {
    std::vector<Setting> out;
    for (std::size_t i = 0; i < extras.size(); ++i) {
        const std::string& arg = extras[i];
        if (arg.rfind("--", 0) != 0) throw ConfigError("unexpected argument '" + arg + "'");
        std::string key = arg.substr(2);
        std::string value;
        if (const auto eq = key.find('='); eq != std::string::npos) {
            value = key.substr(eq + 1);
            key.erase(eq);
        } else {
            if (i + 1 >= extras.size()) throw ConfigError("missing value for key '" + key + "'");
            value = extras[++i];
        }
        if (std::find(config_keys().begin(), config_keys().end(), key) == config_keys().end())
            throw ConfigError("unknown config key '" + key + "'");
        out.emplace_back(std::move(key), std::move(value));
    }
    return out;
}

RunConfig resolve_config(const CommonFlags& f, const std::vector<std::string>& extras) {
    std::vector<Setting> settings;
    if (f.config) settings = read_settings(*f.config);
    auto add = [&](const char* key, const std::optional<std::string>& v) {
        if (v) settings.emplace_back(key, *v);
    };
    add("scenario", f.scenario);
    add("seed", f.seed);
    add("data", f.data);
    add("column", f.column);
    add("out", f.out);
    for (auto& s : extra_settings(extras)) settings.push_back(std::move(s));
    RunConfig config = build_config(settings);
    config.validate();
    if (config.scenario == Scenario::elec2 && config.data_path.empty())
        throw ConfigError("scenario elec2 requires --data PATH");
    return config;
}

void print_summary(const RunResult& r) {
    const auto& s = r.summary;
    std::cout << to_string(r.config.scenario) << " seed=" << r.config.system.seed
              << " service_level=" << s.service_level << " (" << s.critical_events << " critical, bound "
              << s.alpha * s.T << ")"
              << " coverage=" << s.coverage << " (" << s.miscoverage_events << "/" << s.resolved_horizons
              << " missed)"
              << " mean_cost=" << s.mean_cost << (s.certified() ? "" : " VIOLATION") << '\n';
}

int cmd_run(const CommonFlags& f, const std::vector<std::string>& extras) {
    const RunConfig config = resolve_config(f, extras);
    const RunResult result = run(config);
    export_run(result, config.out_dir);
    print_summary(result);
    std::cout << "wrote " << config.out_dir << "/trajectory.csv and " << config.out_dir << "/metrics.json\n";
    return kOk;
}

int cmd_certify(const CommonFlags& f, const std::vector<std::string>& extras, int n_seeds, bool json) {
    if (n_seeds < 1) throw ConfigError("--seeds must be >= 1");
    const RunConfig config = resolve_config(f, extras);
    std::vector<std::uint64_t> seeds(static_cast<std::size_t>(n_seeds));
    std::iota(seeds.begin(), seeds.end(), config.system.seed);
    const auto results = run_seeds(config, seeds);

    double min_service = 1.0;
    double min_coverage = 1.0;
    int violations = 0;
    for (const auto& r : results) {
        min_service = std::min(min_service, r.summary.service_level);
        min_coverage = std::min(min_coverage, r.summary.coverage);
        if (!r.summary.certified()) ++violations;
        if (!json) print_summary(r);
    }
    if (json) {
        nlohmann::ordered_json j;
        j["scenario"] = to_string(config.scenario);
        j["seeds"] = n_seeds;
        j["min_service_level"] = min_service;
        j["min_coverage"] = min_coverage;
        j["violations"] = violations;
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "min service level " << min_service << " (required " << 1.0 - config.system.alpha << ")\n"
                  << "min coverage " << min_coverage << " (required " << 1.0 - config.system.beta << ")\n"
                  << (violations == 0 ? "CERTIFIED" : "VIOLATED") << " over " << n_seeds << " seeds\n";
    }
    return violations == 0 ? kOk : kViolation;
}

int cmd_list(bool json) {
    const Scenario all[] = {Scenario::periodic, Scenario::sir, Scenario::feedback, Scenario::adversarial,
                            Scenario::elec2};
    if (json) {
        nlohmann::ordered_json j = nlohmann::ordered_json::array();
        for (auto s : all) {
            nlohmann::ordered_json entry;
            entry["name"] = to_string(s);
            entry["requires_data"] = s == Scenario::elec2;
            nlohmann::ordered_json defaults;
            for (const auto& [k, v] : config_values(default_config(s))) defaults[k] = v;
            entry["defaults"] = defaults;
            j.push_back(entry);
        }
        std::cout << j.dump(2) << '\n';
        return kOk;
    }
    for (auto s : all) {
        const RunConfig c = default_config(s);
        std::cout << to_string(s) << (s == Scenario::elec2 ? " (requires --data)" : "") << "\n"
                  << "  T=" << c.system.T << " H=" << c.system.H << " T_hist=" << c.system.T_hist
                  << " w_max=" << c.system.w_max << " alpha=" << c.system.alpha << " beta=" << c.system.beta
                  << " demand_lambda=" << c.demand_model.lambda << " cost_lambda=" << c.cost_model.lambda
                  << " inference_t_star=" << c.inference_t_star << '\n';
    }
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Certified inventory control: order policy with a service-level guarantee and "
                 "cost prediction intervals with a coverage guarantee"};
    app.require_subcommand(1);

    CommonFlags run_flags;
    auto* run_cmd = app.add_subcommand("run", "run one scenario and write trajectory.csv + metrics.json");
    add_common(run_cmd, run_flags);

    CommonFlags cert_flags;
    int n_seeds = 20;
    bool cert_json = false;
    auto* cert_cmd = app.add_subcommand("certify", "run many seeds; exit 0 iff every run meets both guarantees");
    add_common(cert_cmd, cert_flags);
    cert_cmd->add_option("--seeds", n_seeds, "number of seeds")->capture_default_str();
    cert_cmd->add_flag("--json", cert_json, "machine-readable summary");

    bool list_json = false;
    auto* list_cmd = app.add_subcommand("list-scenarios", "list scenarios and their defaults");
    list_cmd->add_flag("--json", list_json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*run_cmd) return cmd_run(run_flags, run_cmd->remaining());
        if (*cert_cmd) return cmd_certify(cert_flags, cert_cmd->remaining(), n_seeds, cert_json);
        if (*list_cmd) return cmd_list(list_json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
