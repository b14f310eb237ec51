#include "arbc/simulator.hpp"

#include "arbc/rng.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>

namespace arbc {

namespace {

// Period boundaries landing within this of t_end are treated as t_end,
// absorbing accumulated rounding in trajectory sums. 1e-9 h is ~4 us;
// the energy in such a sliver is far below reporting precision.
constexpr double kTimeSnapH = 1e-9;

double commanded_source_power(const SimModels& models, SchemeKind scheme, double t_h,
                              double distance_m) {
    const double p_out = follows_profile(scheme)
                             ? preferred_power_closed(models.battery, t_h)
                             : peak_power(models.battery);
    const double d = assumed_distance(scheme, models.coverage, distance_m);
    return source_power(models.link, p_out, d);
}

// Integrates one step onto an exact target time, so callers can place
// successive steps on shared grid points (the CC/CV corner, period
// boundaries) without drift.
StepResult step_to(const ChargeState& state, SchemeKind scheme, double distance_m,
                   double t_target, const SimModels& models) {
    const double p_left = commanded_source_power(models, scheme, state.time_h, distance_m);
    const double p_right = commanded_source_power(models, scheme, t_target, distance_m);
    StepResult result;
    result.state = ChargeState{t_target, soc_at(models.battery, t_target)};
    result.source_power_w = p_left;
    result.source_energy_wh = 0.5 * (p_left + p_right) * (t_target - state.time_h);
    return result;
}

double savings_vs(double mean_other_wh, double mean_arbc_wh) {
    if (mean_other_wh == 0.0)
        throw std::invalid_argument("savings are undefined against a zero mean energy");
    return 100.0 * (mean_other_wh - mean_arbc_wh) / mean_other_wh;
}

std::string join_problems(const std::vector<std::string>& problems) {
    std::string joined;
    for (const std::string& p : problems) {
        if (!joined.empty()) joined += "; ";
        joined += p;
    }
    return joined;
}

} // namespace

std::vector<std::string> validate(const SimConfig& config) {
    std::vector<std::string> problems;
    if (!(config.dt_h > 0.0) || !std::isfinite(config.dt_h))
        problems.push_back("dt must be positive");
    else if (config.dt_h > 0.1)
        problems.push_back("dt must not exceed 0.1");
    if (config.runs == 0) problems.push_back("runs must be at least 1");
    if (config.schemes.empty()) problems.push_back("at least one scheme must be selected");
    for (std::size_t i = 0; i < config.schemes.size(); ++i)
        for (std::size_t j = i + 1; j < config.schemes.size(); ++j)
            if (config.schemes[i] == config.schemes[j]) {
                problems.push_back("schemes must not repeat");
                i = config.schemes.size();
                break;
            }
    if (!(config.coverage.max_height_m > 0.0) ||
        !(config.coverage.max_distance_m > config.coverage.max_height_m)) {
        problems.push_back("coverage requires 0 < h_max < d_max");
    } else {
        const double d2 = config.coverage.max_distance_m * config.coverage.max_distance_m;
        const double h2 = config.coverage.max_height_m * config.coverage.max_height_m;
        const double b2 = config.coverage.base_radius_m * config.coverage.base_radius_m;
        if (std::abs(b2 + h2 - d2) > 1e-9 * d2)
            problems.push_back("coverage base radius is inconsistent with d_max and h_max");
    }
    for (std::string& p : validate(config.link)) problems.push_back(std::move(p));
    for (std::string& p : validate(config.battery)) problems.push_back(std::move(p));
    for (std::string& p : validate(config.mobility)) problems.push_back(std::move(p));
    return problems;
}

StepResult met_step(const ChargeState& state, SchemeKind scheme, double distance_m,
                    double dt_h, const SimModels& models) {
    if (!(dt_h > 0.0) || !std::isfinite(dt_h))
        throw std::invalid_argument("step size must be positive");
    if (fully_charged(models.battery, state))
        throw std::invalid_argument("cannot step a fully charged receiver");
    const double t_end = models.battery.full_charge_h;
    double t_next = state.time_h + dt_h;
    if (t_next > t_end || t_end - t_next < kTimeSnapH) t_next = t_end;
    return step_to(state, scheme, distance_m, t_next, models);
}

RunRecord run_procedure(const SimModels& models, SchemeKind scheme, double start_time_h,
                        const Trajectory& trajectory, double dt_h,
                        const StepObserver& observer) {
    const ChargeProfileParams& battery = models.battery;
    const double t_end = battery.full_charge_h;
    if (!(dt_h > 0.0) || !std::isfinite(dt_h))
        throw std::invalid_argument("step size must be positive");
    if (!std::isfinite(start_time_h) || start_time_h < 0.0 || start_time_h > t_end)
        throw std::invalid_argument("start time outside the charge profile");

    RunRecord record;
    record.scheme = scheme;
    record.start_time_h = start_time_h;
    record.charge_duration_h = t_end - start_time_h;
    if (start_time_h == t_end) return record;

    ChargeState state = charge_state_at(battery, start_time_h);
    double boundary = start_time_h;
    for (const TrajectoryPeriod& period : trajectory) {
        if (!std::isfinite(period.duration_h) || period.duration_h < 0.0)
            throw std::invalid_argument("trajectory periods must have nonnegative duration");
        if (state.time_h >= t_end) break;
        if (period.duration_h == 0.0) continue;
        boundary += period.duration_h;
        double period_end = std::min(boundary, t_end);
        if (t_end - period_end < kTimeSnapH) period_end = t_end;
        if (period_end <= state.time_h) continue;
        ++record.period_count;
        while (state.time_h < period_end) {
            double target = std::min(state.time_h + dt_h, period_end);
            if (state.time_h < battery.cc_end_h && target > battery.cc_end_h)
                target = battery.cc_end_h;
            const StepResult step = step_to(state, scheme, period.distance_m, target, models);
            if (observer) observer(state, period.distance_m, step.source_power_w);
            record.energy_wh += step.source_energy_wh;
            state = step.state;
        }
    }
    if (state.time_h < t_end)
        throw std::invalid_argument("trajectory does not cover the remaining charge time");
    return record;
}

ProcedureDraw draw_procedure(const SimConfig& config, std::uint64_t run_index) {
    RandomStream stream = substream(config.seed, run_index);
    const double t_end = config.battery.full_charge_h;
    ProcedureDraw draw;
    draw.start_time_h = stream.uniform(0.0, t_end);
    draw.trajectory = generate_trajectory(config.coverage, config.mobility,
                                          t_end - draw.start_time_h, stream);
    return draw;
}

AggregateStats aggregate(std::span<const RunRecord> records) {
    AggregateStats stats;
    auto group_of = [&stats](SchemeKind scheme) -> SchemeAggregate& {
        for (SchemeAggregate& g : stats.per_scheme)
            if (g.scheme == scheme) return g;
        stats.per_scheme.push_back(SchemeAggregate{scheme, 0, 0.0, 0.0, std::nullopt});
        return stats.per_scheme.back();
    };
    for (const RunRecord& r : records) {
        SchemeAggregate& g = group_of(r.scheme);
        ++g.runs;
        g.mean_energy_wh += r.energy_wh;
    }
    for (SchemeAggregate& g : stats.per_scheme) g.mean_energy_wh /= static_cast<double>(g.runs);
    for (const RunRecord& r : records) {
        SchemeAggregate& g = group_of(r.scheme);
        const double dev = r.energy_wh - g.mean_energy_wh;
        g.std_energy_wh += dev * dev;
    }
    const SchemeAggregate* arbc = nullptr;
    for (SchemeAggregate& g : stats.per_scheme) {
        g.std_energy_wh = g.runs > 1
                              ? std::sqrt(g.std_energy_wh / static_cast<double>(g.runs - 1))
                              : 0.0;
        if (g.scheme == SchemeKind::arbc) arbc = &g;
    }
    if (arbc != nullptr)
        for (SchemeAggregate& g : stats.per_scheme)
            if (g.scheme != SchemeKind::arbc)
                g.arbc_savings_pct = savings_vs(g.mean_energy_wh, arbc->mean_energy_wh);
    return stats;
}

std::vector<std::pair<SchemeKind, double>> savings_report(const AggregateStats& stats) {
    const SchemeAggregate* arbc = nullptr;
    for (const SchemeAggregate& g : stats.per_scheme)
        if (g.scheme == SchemeKind::arbc) arbc = &g;
    if (arbc == nullptr)
        throw std::invalid_argument("savings require the arbc scheme");
    if (stats.per_scheme.size() < 2)
        throw std::invalid_argument("savings require a scheme to compare arbc against");
    std::vector<std::pair<SchemeKind, double>> report;
    for (const SchemeAggregate& g : stats.per_scheme)
        if (g.scheme != SchemeKind::arbc)
            report.emplace_back(g.scheme, savings_vs(g.mean_energy_wh, arbc->mean_energy_wh));
    return report;
}

namespace {

// The adaptive scheme never commands more power than the schemes it
// relaxes, so its integrated energy cannot exceed theirs on the same
// draw. A violation means the pairing or the integrator is broken.
void check_run_ordering(std::span<const RunRecord> records,
                        std::span<const SchemeKind> schemes, std::uint64_t run) {
    std::optional<double> energy[kAllSchemes.size()];
    for (std::size_t si = 0; si < schemes.size(); ++si)
        energy[static_cast<std::size_t>(schemes[si])] = records[si].energy_wh;
    auto expect_leq = [&](SchemeKind lo, SchemeKind hi) {
        const auto& e_lo = energy[static_cast<std::size_t>(lo)];
        const auto& e_hi = energy[static_cast<std::size_t>(hi)];
        if (e_lo && e_hi && !(*e_lo <= *e_hi))
            throw std::logic_error("scheme energy ordering violated in run " +
                                   std::to_string(run));
    };
    expect_leq(SchemeKind::arbc, SchemeKind::dac);
    expect_leq(SchemeKind::arbc, SchemeKind::pac);
    expect_leq(SchemeKind::arbc, SchemeKind::cpc);
    expect_leq(SchemeKind::dac, SchemeKind::cpc);
    expect_leq(SchemeKind::pac, SchemeKind::cpc);
}

} // namespace

McResult monte_carlo(const SimConfig& config) {
    const std::vector<std::string> problems = validate(config);
    if (!problems.empty()) throw std::invalid_argument(join_problems(problems));

    const SimModels models = config.models();
    const std::size_t n_schemes = config.schemes.size();
    McResult result;
    result.records.resize(config.runs * n_schemes);

    auto do_run = [&](std::uint64_t k) {
        const ProcedureDraw draw = draw_procedure(config, k);
        for (std::size_t si = 0; si < n_schemes; ++si) {
            RunRecord record = run_procedure(models, config.schemes[si], draw.start_time_h,
                                             draw.trajectory, config.dt_h);
            record.run_id = k;
            result.records[k * n_schemes + si] = record;
        }
    };

    const std::uint64_t workers =
        std::min<std::uint64_t>(std::max(config.threads, 1u), config.runs);
    if (workers <= 1) {
        for (std::uint64_t k = 0; k < config.runs; ++k) do_run(k);
    } else {
        std::atomic<std::uint64_t> next{0};
        std::mutex failure_mutex;
        std::exception_ptr failure;
        auto work = [&] {
            try {
                for (std::uint64_t k; (k = next.fetch_add(1)) < config.runs;) do_run(k);
            } catch (...) {
                const std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::uint64_t w = 0; w < workers; ++w) pool.emplace_back(work);
        for (std::thread& t : pool) t.join();
        if (failure) std::rethrow_exception(failure);
    }

    for (std::uint64_t k = 0; k < config.runs; ++k)
        check_run_ordering(std::span(result.records).subspan(k * n_schemes, n_schemes),
                           config.schemes, k);
    result.stats = aggregate(result.records);
    return result;
}

} // namespace arbc
