#include "certinv/config.hpp"
#include "certinv/report.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace certinv {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

template <typename T>
T parse_number(const std::string& key, const std::string& text) {
    T v{};
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw ConfigError("invalid value '" + text + "' for key '" + key + "'");
    return v;
}

std::vector<double> parse_list(const std::string& key, const std::string& text) {
    std::vector<double> out;
    std::string body = trim(text);
    if (!body.empty() && body.front() == '[' && body.back() == ']') body = body.substr(1, body.size() - 2);
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(parse_number<double>(key, item));
    }
    return out;
}

std::string list_text(const std::vector<double>& values) {
    std::string s = "[";
    for (std::size_t i = 0; i < values.size(); ++i) s += (i ? ", " : "") + format_number(values[i]);
    return s + "]";
}

struct Field {
    std::function<void(RunConfig&, const std::string& key, const std::string& value)> set;
    std::function<std::string(const RunConfig&)> get;
};

#define CERTINV_NUM(member)                                                                                      \
    Field {                                                                                                      \
        [](RunConfig& c, const std::string& k, const std::string& v) {                                           \
            c.member = parse_number<std::remove_cvref_t<decltype(c.member)>>(k, v);                              \
        },                                                                                                       \
            [](const RunConfig& c) {                                                                             \
                if constexpr (std::is_floating_point_v<std::remove_cvref_t<decltype(c.member)>>)                 \
                    return format_number(c.member);                                                              \
                else                                                                                             \
                    return std::to_string(c.member);                                                             \
            }                                                                                                    \
    }

const std::vector<std::pair<std::string, Field>>& fields() {
    static const std::vector<std::pair<std::string, Field>> table{
        {"scenario",
         {[](RunConfig& c, const std::string& k, const std::string& v) {
              const auto s = parse_scenario(v);
              if (!s) throw ConfigError("invalid value '" + v + "' for key '" + k + "'");
              c.scenario = *s;
          },
          [](const RunConfig& c) { return std::string(to_string(c.scenario)); }}},
        {"policy",
         {[](RunConfig& c, const std::string& k, const std::string& v) {
              const auto p = parse_policy(v);
              if (!p) throw ConfigError("invalid value '" + v + "' for key '" + k + "'");
              c.policy = *p;
          },
          [](const RunConfig& c) { return std::string(to_string(c.policy)); }}},
        {"T", CERTINV_NUM(system.T)},
        {"H", CERTINV_NUM(system.H)},
        {"alpha", CERTINV_NUM(system.alpha)},
        {"beta", CERTINV_NUM(system.beta)},
        {"w_max", CERTINV_NUM(system.w_max)},
        {"x_c", CERTINV_NUM(system.x_c)},
        {"h", CERTINV_NUM(system.h)},
        {"T_hist", CERTINV_NUM(system.T_hist)},
        {"x0", CERTINV_NUM(system.x0)},
        {"seed", CERTINV_NUM(system.seed)},
        {"demand_lambda", CERTINV_NUM(demand_model.lambda)},
        {"demand_p0", CERTINV_NUM(demand_model.p0)},
        {"demand_dw", CERTINV_NUM(demand_model.features.d_w)},
        {"demand_dx", CERTINV_NUM(demand_model.features.d_x)},
        {"cost_lambda", CERTINV_NUM(cost_model.lambda)},
        {"cost_p0", CERTINV_NUM(cost_model.p0)},
        {"cost_ar_order", CERTINV_NUM(cost_model.features.ar_order)},
        {"cost_fourier_periods",
         {[](RunConfig& c, const std::string& k, const std::string& v) {
              c.cost_model.features.fourier_periods = parse_list(k, v);
          },
          [](const RunConfig& c) { return list_text(c.cost_model.features.fourier_periods); }}},
        {"inference_t_star", CERTINV_NUM(inference_t_star)},
        {"inference_b_star", CERTINV_NUM(inference_b_star)},
        {"sir_s0", CERTINV_NUM(sir_initial.S)},
        {"sir_i0", CERTINV_NUM(sir_initial.I)},
        {"sir_r0", CERTINV_NUM(sir_initial.R)},
        {"adversary_eps", CERTINV_NUM(adversary_eps)},
        {"data", {[](RunConfig& c, const std::string&, const std::string& v) { c.data_path = v; },
                  [](const RunConfig& c) { return c.data_path; }}},
        {"column", {[](RunConfig& c, const std::string&, const std::string& v) { c.column = v; },
                    [](const RunConfig& c) { return c.column; }}},
        {"out", {[](RunConfig& c, const std::string&, const std::string& v) { c.out_dir = v; },
                 [](const RunConfig& c) { return c.out_dir; }}},
    };
    return table;
}

#undef CERTINV_NUM

const Field* find_field(const std::string& key) {
    for (const auto& [name, field] : fields())
        if (name == key) return &field;
    return nullptr;
}

} // namespace

std::vector<Setting> parse_settings(const std::string& text) {
    std::vector<Setting> out;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(lineno) + ": expected 'key = value'");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw ConfigError("line " + std::to_string(lineno) + ": empty key");
        if (value.size() >= 2 && value.front() == '"' && value.back() == '"') value = value.substr(1, value.size() - 2);
        out.emplace_back(std::move(key), std::move(value));
    }
    return out;
}

std::vector<Setting> read_settings(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw DataFileError("cannot open config file: " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_settings(ss.str());
}

void apply_setting(RunConfig& config, const std::string& key, const std::string& value) {
    const Field* f = find_field(key);
    if (!f) throw ConfigError("unknown config key '" + key + "'");
    f->set(config, key, value);
}

const std::vector<std::string>& config_keys() {
    static const std::vector<std::string> keys = [] {
        std::vector<std::string> k;
        for (const auto& [name, field] : fields()) k.push_back(name);
        return k;
    }();
    return keys;
}

RunConfig build_config(const std::vector<Setting>& settings) {
    Scenario scenario = Scenario::periodic;
    for (const auto& [k, v] : settings) {
        if (k != "scenario") continue;
        const auto s = parse_scenario(v);
        if (!s) throw ConfigError("invalid value '" + v + "' for key 'scenario'");
        scenario = *s;
    }
    RunConfig config = default_config(scenario);
    for (const auto& [k, v] : settings) apply_setting(config, k, v);
    return config;
}

std::vector<Setting> config_values(const RunConfig& config) {
    std::vector<Setting> out;
    for (const auto& [name, field] : fields()) out.emplace_back(name, field.get(config));
    return out;
}

std::string dump_config(const RunConfig& config) {
    std::string text;
    for (const auto& [k, v] : config_values(config)) {
        const bool quote = k == "scenario" || k == "policy" || k == "data" || k == "column" || k == "out";
        text += k + " = " + (quote ? "\"" + v + "\"" : v) + "\n";
    }
    return text;
}

} // namespace certinv
