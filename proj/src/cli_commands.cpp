#include "arbc/cli_commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <stdexcept>

namespace arbc {

namespace {

std::string format_shortest(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%g", value);
    return buffer;
}

void require_step(double step, const char* what) {
    if (!(step > 0.0) || !std::isfinite(step))
        throw std::invalid_argument(std::string(what) + " must be positive");
}

// i * step sweeps accumulate no error and make the row count
// predictable; the final point is clamped onto the sweep end.
std::vector<double> sweep(double end, double step) {
    std::vector<double> points;
    for (std::size_t i = 0;; ++i) {
        double value = static_cast<double>(i) * step;
        if (value > end + 1e-9 * std::max(1.0, std::abs(end))) break;
        points.push_back(std::min(value, end));
    }
    return points;
}

void finish(std::ostream& out, const char* what) {
    out.flush();
    if (!out) throw IoError(std::string("failed writing ") + what);
}

std::ofstream open_csv(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    return out;
}

} // namespace

std::string format_sig6(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.6g", value);
    return buffer;
}

void cmd_link_curve(const SimConfig& config, const std::vector<double>& pout_w,
                    double d_max_m, double d_step_m, std::ostream& out) {
    if (pout_w.empty()) throw std::invalid_argument("link-curve needs at least one pout");
    require_step(d_step_m, "d-step");
    if (!(d_max_m >= 0.0) || !std::isfinite(d_max_m))
        throw std::invalid_argument("d-max must be nonnegative");

    out << "d_m";
    for (double p : pout_w) out << ",ps_w_pout_" << format_shortest(p);
    out << '\n';
    for (double d : sweep(d_max_m, d_step_m)) {
        out << format_sig6(d);
        for (double p : pout_w) out << ',' << format_sig6(source_power(config.link, p, d));
        out << '\n';
    }
    finish(out, "link-curve table");
}

void cmd_source_vs_output(const SimConfig& config, const std::vector<double>& distances_m,
                          double pout_max_w, double pout_step_w, std::ostream& out) {
    if (distances_m.empty())
        throw std::invalid_argument("source-vs-output needs at least one distance");
    require_step(pout_step_w, "pout-step");
    if (!(pout_max_w >= 0.0) || !std::isfinite(pout_max_w))
        throw std::invalid_argument("pout-max must be nonnegative");

    out << "pout_w";
    for (double d : distances_m) out << ",ps_w_d_" << format_shortest(d);
    out << '\n';
    for (double p : sweep(pout_max_w, pout_step_w)) {
        out << format_sig6(p);
        for (double d : distances_m)
            out << ',' << format_sig6(source_power(config.link, p, d));
        out << '\n';
    }
    finish(out, "source-vs-output table");
}

void cmd_profile(const SimConfig& config, double t_step_h, std::ostream& out) {
    require_step(t_step_h, "t-step");
    const ChargeProfileParams& battery = config.battery;
    out << "t_h,i_a,v_v,po_w\n";
    for (std::size_t i = 0;; ++i) {
        const double t = static_cast<double>(i) * t_step_h;
        if (t >= battery.full_charge_h) break;
        out << format_sig6(t) << ',' << format_sig6(current_at(battery, t)) << ','
            << format_sig6(voltage_at(battery, t)) << ','
            << format_sig6(preferred_power(battery, t)) << '\n';
    }
    finish(out, "profile table");
}

void cmd_trace(const SimConfig& config, std::ostream& out) {
    const ProcedureDraw draw = draw_procedure(config, 0);
    const SimModels models = config.models();

    struct TraceRow {
        double t_h;
        double d_m;
        double ps_w[kAllSchemes.size()];
    };
    std::vector<TraceRow> rows;
    for (std::size_t si = 0; si < kAllSchemes.size(); ++si) {
        std::size_t row = 0;
        auto observer = [&](const ChargeState& state, double distance_m, double power_w) {
            if (si == 0) rows.push_back(TraceRow{state.time_h, distance_m, {}});
            if (row >= rows.size() || rows[row].t_h != state.time_h)
                throw std::logic_error("trace step grids diverged between schemes");
            rows[row].ps_w[si] = power_w;
            ++row;
        };
        run_procedure(models, kAllSchemes[si], draw.start_time_h, draw.trajectory,
                      config.dt_h, observer);
    }

    out << "t_h,d_m,ps_cpc_w,ps_pac_w,ps_dac_w,ps_arbc_w\n";
    for (const TraceRow& r : rows) {
        out << format_sig6(r.t_h) << ',' << format_sig6(r.d_m);
        for (double p : r.ps_w) out << ',' << format_sig6(p);
        out << '\n';
    }
    finish(out, "trace table");
}

void cmd_simulate(const SimConfig& config, const std::string& out_dir) {
    const McResult result = monte_carlo(config);

    std::error_code ec;
    const std::filesystem::path dir(out_dir.empty() ? "." : out_dir);
    std::filesystem::create_directories(dir, ec);
    if (ec) throw IoError("cannot create output directory " + dir.string());

    std::ofstream runs = open_csv(dir / "runs.csv");
    runs << "run_id,scheme,start_time_h,period_count,energy_wh\n";
    for (const RunRecord& r : result.records)
        runs << r.run_id << ',' << scheme_name(r.scheme) << ','
             << format_sig6(r.start_time_h) << ',' << r.period_count << ','
             << format_sig6(r.energy_wh) << '\n';
    finish(runs, "runs.csv");

    std::ofstream agg = open_csv(dir / "aggregate.csv");
    agg << "scheme,runs,mean_energy_wh,std_energy_wh,arbc_savings_pct\n";
    for (const SchemeAggregate& g : result.stats.per_scheme) {
        agg << scheme_name(g.scheme) << ',' << g.runs << ','
            << format_sig6(g.mean_energy_wh) << ',' << format_sig6(g.std_energy_wh) << ',';
        if (g.arbc_savings_pct) agg << format_sig6(*g.arbc_savings_pct);
        agg << '\n';
    }
    finish(agg, "aggregate.csv");
}

} // namespace arbc
