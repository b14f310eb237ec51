#include "arbc/cli_commands.hpp"
#include "arbc/config.hpp"

#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace arbc;
using nlohmann::json;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    return lines;
}

std::vector<std::string> fields_of(const std::string& line) {
    std::vector<std::string> fields;
    std::istringstream in(line);
    for (std::string field; std::getline(in, field, ',');) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.push_back("");
    return fields;
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

} // namespace

TEST_CASE("six significant digit rendering") {
    CHECK(format_sig6(0.0) == "0");
    CHECK(format_sig6(4.2) == "4.2");
    CHECK(format_sig6(299.7086123403) == "299.709");
    CHECK(format_sig6(1078.951004425) == "1078.95");
    CHECK(format_sig6(0.03604365023906) == "0.0360437");
}

TEST_CASE("empty config document reproduces the built-in defaults") {
    const SimConfig config = config_from_json(json::object());
    const SimConfig defaults;
    CHECK(config.dt_h == defaults.dt_h);
    CHECK(config.runs == defaults.runs);
    CHECK(config.seed == defaults.seed);
    CHECK(config.link.power_offset_w == defaults.link.power_offset_w);
    CHECK(config.link.reflector_radius_m == defaults.link.reflector_radius_m);
    CHECK(config.link.wavelength_m == defaults.link.wavelength_m);
    CHECK(config.battery.current_fit.amp2 == defaults.battery.current_fit.amp2);
    CHECK(config.battery.full_charge_h == defaults.battery.full_charge_h);
    CHECK(config.coverage.max_distance_m == defaults.coverage.max_distance_m);
    CHECK(config.coverage.base_radius_m == defaults.coverage.base_radius_m);
    CHECK(config.mobility.period_min_h == defaults.mobility.period_min_h);
    CHECK(config.mobility.sampler == SamplerKind::uniform_distance);
    CHECK(config.schemes == defaults.schemes);
}

TEST_CASE("config values map onto the model parameters") {
    const json doc = {
        {"link", {{"m", -3.0}, {"r_mm", 2.0}, {"lambda_nm", 900.0}}},
        {"battery", {{"t_end", 3.0}, {"b_v", -0.2904}}},
        {"coverage", {{"d_max", 8.0}, {"h_max", 2.0}}},
        {"mobility", {{"period_min", 0.1}, {"sampler", "uniform_volume"}}},
        {"sim", {{"dt", 0.002}, {"runs", 77}, {"seed", 12}, {"schemes", {"ARBC", "cpc"}}}},
    };
    const SimConfig config = config_from_json(doc);
    CHECK(config.link.power_offset_w == -3.0);
    CHECK(config.link.reflector_radius_m == 0.002);
    CHECK(config.link.wavelength_m == doctest::Approx(900e-9).epsilon(1e-15));
    CHECK(config.battery.full_charge_h == 3.0);
    CHECK(config.battery.voltage_fit.rate1 == -0.2904);
    CHECK(config.coverage.max_distance_m == 8.0);
    CHECK(config.coverage.max_height_m == 2.0);
    CHECK(config.mobility.period_min_h == 0.1);
    CHECK(config.mobility.sampler == SamplerKind::uniform_volume);
    CHECK(config.dt_h == 0.002);
    CHECK(config.runs == 77);
    CHECK(config.seed == 12);
    // scheme list normalized to canonical order
    REQUIRE(config.schemes.size() == 2);
    CHECK(config.schemes[0] == SchemeKind::cpc);
    CHECK(config.schemes[1] == SchemeKind::arbc);
}

TEST_CASE("unknown keys and malformed values are rejected") {
    const std::vector<json> rejected = {
        json::array(),
        {{"links", json::object()}},
        {{"link", {{"radius", 2.0}}}},
        {{"sim", {{"dt", "fast"}}}},
        {{"sim", {{"runs", -5}}}},
        {{"sim", {{"schemes", {"cpc", "cpc"}}}}},
        {{"sim", {{"schemes", {"rbc"}}}}},
        {{"mobility", {{"sampler", "grid"}}}},
        {{"coverage", {{"d_max", 1.0}, {"h_max", 5.0}}}},
    };
    for (const json& doc : rejected) {
        CAPTURE(doc.dump());
        CHECK_THROWS_AS(config_from_json(doc), ConfigError);
    }

    try {
        config_from_json(rejected[2]);
        FAIL("expected a config error");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("link.radius") != std::string::npos);
    }
}

TEST_CASE("invariant violations surface as config errors") {
    const std::vector<json> invalid = {
        {{"sim", {{"dt", 0.5}}}},
        {{"link", {{"f", 1.5}}}},
        {{"battery", {{"i_cc", -1.0}}}},
        {{"mobility", {{"period_max", 0.01}}}},
    };
    for (const json& doc : invalid) {
        CAPTURE(doc.dump());
        CHECK_THROWS_AS(config_from_json(doc), ConfigError);
    }
    try {
        config_from_json(invalid[0]);
        FAIL("expected a config error");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("dt") != std::string::npos);
    }
}

TEST_CASE("config files load, with parse failures reported") {
    const std::filesystem::path dir = "config_test_tmp";
    std::filesystem::create_directories(dir);

    {
        std::ofstream out(dir / "ok.json");
        out << R"({"sim": {"runs": 5}})";
    }
    CHECK(load_config_file((dir / "ok.json").string()).runs == 5);

    {
        std::ofstream out(dir / "bad.json");
        out << "{ not json";
    }
    CHECK_THROWS_AS(load_config_file((dir / "bad.json").string()), ConfigError);
    CHECK_THROWS_AS(load_config_file((dir / "missing.json").string()), ConfigError);

    std::filesystem::remove_all(dir);
}

TEST_CASE("link curve table shape and values") {
    const SimConfig config;
    std::ostringstream out;
    cmd_link_curve(config, {1.0, 3.0, 5.0}, 10.0, 0.1, out);
    const auto lines = lines_of(out.str());
    REQUIRE(lines.size() == 102);   // header + 101 sweep points
    CHECK(lines[0] == "d_m,ps_w_pout_1,ps_w_pout_3,ps_w_pout_5");
    CHECK(lines[61] == "6,106.308,153.538,200.768");
    CHECK(fields_of(lines[101])[0] == "10");

    CHECK_THROWS_AS(cmd_link_curve(config, {}, 10.0, 0.1, out), std::invalid_argument);
    CHECK_THROWS_AS(cmd_link_curve(config, {1.0}, 10.0, 0.0, out), std::invalid_argument);
}

TEST_CASE("source versus output table shape and values") {
    const SimConfig config;
    std::ostringstream out;
    cmd_source_vs_output(config, {1.0, 3.0, 5.0}, 6.0, 0.1, out);
    const auto lines = lines_of(out.str());
    REQUIRE(lines.size() == 62);
    CHECK(lines[0] == "pout_w,ps_w_d_1,ps_w_d_3,ps_w_d_5");
    CHECK(fields_of(lines[1])[0] == "0");
    CHECK(fields_of(lines[1])[1] == "44.1078");
    CHECK(fields_of(lines[61])[0] == "6");
}

TEST_CASE("profile table shape and values") {
    const SimConfig config;
    std::ostringstream out;
    cmd_profile(config, 0.01, out);
    const auto lines = lines_of(out.str());
    REQUIRE(lines.size() == 361);   // header + [0, 3.6) in 0.01 steps
    CHECK(lines[0] == "t_h,i_a,v_v,po_w");
    CHECK(lines[51] == "0.5,1,3.41225,3.41225");
    CHECK(lines[201] == "2,0.271926,4.2,1.14209");
}

TEST_CASE("trace table is deterministic with a constant baseline column") {
    const SimConfig config;
    std::ostringstream first;
    std::ostringstream second;
    cmd_trace(config, first);
    cmd_trace(config, second);
    CHECK(first.str() == second.str());

    const auto lines = lines_of(first.str());
    REQUIRE(lines.size() > 100);
    CHECK(lines[0] == "t_h,d_m,ps_cpc_w,ps_pac_w,ps_dac_w,ps_arbc_w");
    bool cpc_constant = true;
    bool dominance = true;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto fields = fields_of(lines[i]);
        REQUIRE(fields.size() == 6);
        if (fields[2] != "299.709") cpc_constant = false;
        const double cpc = std::stod(fields[2]);
        const double pac = std::stod(fields[3]);
        const double dac = std::stod(fields[4]);
        const double arbc = std::stod(fields[5]);
        if (!(arbc <= dac && arbc <= pac && pac <= cpc && dac <= cpc))
            dominance = false;
    }
    CHECK(cpc_constant);
    CHECK(dominance);
}

TEST_CASE("simulate writes the run and aggregate files") {
    SimConfig config;
    config.runs = 20;
    const std::filesystem::path dir = "cli_sim_tmp";
    std::filesystem::remove_all(dir);
    cmd_simulate(config, dir.string());

    const auto run_lines = lines_of(slurp(dir / "runs.csv"));
    REQUIRE(run_lines.size() == 1 + 20 * 4);
    CHECK(run_lines[0] == "run_id,scheme,start_time_h,period_count,energy_wh");
    CHECK(fields_of(run_lines[1])[0] == "0");
    CHECK(fields_of(run_lines[1])[1] == "cpc");
    CHECK(fields_of(run_lines[4])[1] == "arbc");
    for (std::size_t i = 1; i < run_lines.size(); ++i)
        CHECK(fields_of(run_lines[i]).size() == 5);

    const auto agg_lines = lines_of(slurp(dir / "aggregate.csv"));
    REQUIRE(agg_lines.size() == 5);
    CHECK(agg_lines[0] == "scheme,runs,mean_energy_wh,std_energy_wh,arbc_savings_pct");
    for (int i = 1; i <= 4; ++i) {
        const auto fields = fields_of(agg_lines[i]);
        REQUIRE(fields.size() == 5);
        CHECK(fields[1] == "20");
        if (fields[0] == "arbc")
            CHECK(fields[4].empty());
        else
            CHECK(!fields[4].empty());
    }

    // a second campaign with the same inputs produces identical bytes
    const std::filesystem::path dir2 = "cli_sim_tmp_2";
    std::filesystem::remove_all(dir2);
    cmd_simulate(config, dir2.string());
    CHECK(slurp(dir / "runs.csv") == slurp(dir2 / "runs.csv"));
    CHECK(slurp(dir / "aggregate.csv") == slurp(dir2 / "aggregate.csv"));
    std::filesystem::remove_all(dir);
    std::filesystem::remove_all(dir2);
}

TEST_CASE("unwritable output locations raise io errors") {
    SimConfig config;
    config.runs = 1;
    const std::filesystem::path blocker = "cli_blocker_tmp";
    std::filesystem::remove_all(blocker);
    {
        std::ofstream file(blocker);
        file << "in the way";
    }
    CHECK_THROWS_AS(cmd_simulate(config, (blocker / "sub").string()), IoError);
    std::filesystem::remove(blocker);
}
