#include "arbc/config.hpp"

#include <algorithm>
#include <fstream>
#include <initializer_list>
#include <utility>

namespace arbc {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& message) { throw ConfigError(message); }

std::string joined_path(const std::string& prefix, const std::string& key) {
    return prefix.empty() ? key : prefix + "." + key;
}

void check_keys(const json& node, const std::string& prefix,
                std::initializer_list<const char*> allowed) {
    for (auto it = node.begin(); it != node.end(); ++it) {
        const bool known = std::any_of(allowed.begin(), allowed.end(),
                                       [&](const char* k) { return it.key() == k; });
        if (!known) fail("unknown config key \"" + joined_path(prefix, it.key()) + "\"");
    }
}

const json* section(const json& doc, const char* name) {
    if (!doc.contains(name)) return nullptr;
    const json& node = doc.at(name);
    if (!node.is_object()) fail(std::string(name) + " must be an object");
    return &node;
}

double number_or(const json& node, const std::string& prefix, const char* key,
                 double fallback) {
    if (!node.contains(key)) return fallback;
    const json& value = node.at(key);
    if (!value.is_number()) fail(joined_path(prefix, key) + " must be a number");
    return value.get<double>();
}

std::uint64_t count_or(const json& node, const std::string& prefix, const char* key,
                       std::uint64_t fallback) {
    if (!node.contains(key)) return fallback;
    const json& value = node.at(key);
    if (!value.is_number_integer() ||
        (!value.is_number_unsigned() && value.get<std::int64_t>() < 0))
        fail(joined_path(prefix, key) + " must be a nonnegative integer");
    return value.get<std::uint64_t>();
}

void apply_link(const json& node, LinkParams& link) {
    check_keys(node, "link", {"m", "n", "f", "r_mm", "lambda_nm", "l_mm"});
    link.power_offset_w = number_or(node, "link", "m", link.power_offset_w);
    link.conversion_coeff = number_or(node, "link", "n", link.conversion_coeff);
    link.reflectivity = number_or(node, "link", "f", link.reflectivity);
    // Scaled keys are converted only when present, so defaults are not
    // perturbed by a unit round trip.
    if (node.contains("r_mm"))
        link.reflector_radius_m = number_or(node, "link", "r_mm", 0.0) * 1e-3;
    if (node.contains("lambda_nm"))
        link.wavelength_m = number_or(node, "link", "lambda_nm", 0.0) * 1e-9;
    if (node.contains("l_mm"))
        link.cavity_gap_m = number_or(node, "link", "l_mm", 0.0) * 1e-3;
}

void apply_battery(const json& node, ChargeProfileParams& battery) {
    check_keys(node, "battery",
               {"a_i", "b_i", "c_i", "d_i", "a_v", "b_v", "c_v", "d_v", "t_cc", "t_end",
                "i_cc", "v_cv"});
    battery.current_fit.amp1 = number_or(node, "battery", "a_i", battery.current_fit.amp1);
    battery.current_fit.rate1 = number_or(node, "battery", "b_i", battery.current_fit.rate1);
    battery.current_fit.amp2 = number_or(node, "battery", "c_i", battery.current_fit.amp2);
    battery.current_fit.rate2 = number_or(node, "battery", "d_i", battery.current_fit.rate2);
    battery.voltage_fit.amp1 = number_or(node, "battery", "a_v", battery.voltage_fit.amp1);
    battery.voltage_fit.rate1 = number_or(node, "battery", "b_v", battery.voltage_fit.rate1);
    battery.voltage_fit.amp2 = number_or(node, "battery", "c_v", battery.voltage_fit.amp2);
    battery.voltage_fit.rate2 = number_or(node, "battery", "d_v", battery.voltage_fit.rate2);
    battery.cc_end_h = number_or(node, "battery", "t_cc", battery.cc_end_h);
    battery.full_charge_h = number_or(node, "battery", "t_end", battery.full_charge_h);
    battery.cc_current_a = number_or(node, "battery", "i_cc", battery.cc_current_a);
    battery.cv_voltage_v = number_or(node, "battery", "v_cv", battery.cv_voltage_v);
}

void apply_coverage(const json& node, ConeCoverage& coverage) {
    check_keys(node, "coverage", {"d_max", "h_max"});
    const double d_max = number_or(node, "coverage", "d_max", coverage.max_distance_m);
    const double h_max = number_or(node, "coverage", "h_max", coverage.max_height_m);
    try {
        coverage = ConeCoverage::make(d_max, h_max);
    } catch (const std::invalid_argument& e) {
        fail(e.what());
    }
}

void apply_mobility(const json& node, MobilityParams& mobility) {
    check_keys(node, "mobility", {"period_min", "period_max", "sampler"});
    mobility.period_min_h = number_or(node, "mobility", "period_min", mobility.period_min_h);
    mobility.period_max_h = number_or(node, "mobility", "period_max", mobility.period_max_h);
    if (node.contains("sampler")) {
        const json& value = node.at("sampler");
        if (!value.is_string()) fail("mobility.sampler must be a string");
        const std::string name = value.get<std::string>();
        if (name == "uniform_volume")
            mobility.sampler = SamplerKind::uniform_volume;
        else if (name == "uniform_distance")
            mobility.sampler = SamplerKind::uniform_distance;
        else
            fail("mobility.sampler must be \"uniform_volume\" or \"uniform_distance\"");
    }
}

void apply_sim(const json& node, SimConfig& config) {
    check_keys(node, "sim", {"dt", "runs", "seed", "schemes"});
    config.dt_h = number_or(node, "sim", "dt", config.dt_h);
    config.runs = count_or(node, "sim", "runs", config.runs);
    config.seed = count_or(node, "sim", "seed", config.seed);
    if (node.contains("schemes")) {
        const json& arr = node.at("schemes");
        if (!arr.is_array()) fail("sim.schemes must be an array of scheme names");
        std::vector<SchemeKind> picked;
        for (const json& item : arr) {
            if (!item.is_string()) fail("sim.schemes entries must be strings");
            const std::string text = item.get<std::string>();
            const std::optional<SchemeKind> kind = parse_scheme(text);
            if (!kind) fail("unknown scheme \"" + text + "\"");
            if (std::find(picked.begin(), picked.end(), *kind) != picked.end())
                fail("duplicate scheme \"" + text + "\"");
            picked.push_back(*kind);
        }
        config.schemes.clear();
        for (SchemeKind kind : kAllSchemes)
            if (std::find(picked.begin(), picked.end(), kind) != picked.end())
                config.schemes.push_back(kind);
    }
}

} // namespace

SimConfig config_from_json(const json& document) {
    if (!document.is_object()) fail("config root must be an object");
    check_keys(document, "", {"link", "battery", "coverage", "mobility", "sim"});

    SimConfig config;
    if (const json* node = section(document, "link")) apply_link(*node, config.link);
    if (const json* node = section(document, "battery")) apply_battery(*node, config.battery);
    if (const json* node = section(document, "coverage")) apply_coverage(*node, config.coverage);
    if (const json* node = section(document, "mobility")) apply_mobility(*node, config.mobility);
    if (const json* node = section(document, "sim")) apply_sim(*node, config);

    std::vector<std::string> problems = validate(config);
    if (!problems.empty()) {
        std::string joined;
        for (std::string& p : problems) {
            if (!joined.empty()) joined += "; ";
            joined += p;
        }
        fail(joined);
    }
    return config;
}

SimConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("cannot open config file: " + path);
    json document;
    try {
        document = json::parse(in);
    } catch (const json::parse_error& e) {
        fail("config parse error in " + path + ": " + e.what());
    }
    return config_from_json(document);
}

} // namespace arbc
