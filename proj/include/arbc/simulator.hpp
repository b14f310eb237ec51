// Discrete-time charging simulation and Monte Carlo harness.
//
// One charging procedure runs a receiver from a start point on the
// profile to full charge, integrating the source power a control scheme
// commands while the receiver hops along a trajectory. The Monte Carlo
// harness repeats the procedure over random start times and
// trajectories, evaluating every configured scheme on the same draws so
// per-run comparisons are paired.

#pragma once

#include "arbc/battery.hpp"
#include "arbc/coverage.hpp"
#include "arbc/link_model.hpp"
#include "arbc/schemes.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace arbc {

/// Non-owning bundle of the physical models a step evaluates.
struct SimModels {
    const LinkParams& link;
    const ChargeProfileParams& battery;
    const ConeCoverage& coverage;
};

struct SimConfig {
    double dt_h = 1e-3;          // integration step, hours
    std::uint64_t runs = 1000;
    std::uint64_t seed = 1;
    unsigned threads = 1;        // monte_carlo workers; results identical for any value
    MobilityParams mobility{};
    ConeCoverage coverage = ConeCoverage::make();
    LinkParams link{};
    ChargeProfileParams battery{};
    std::vector<SchemeKind> schemes{kAllSchemes.begin(), kAllSchemes.end()};

    SimModels models() const { return SimModels{link, battery, coverage}; }
};

std::vector<std::string> validate(const SimConfig& config);

struct StepResult {
    ChargeState state;         // after the step
    double source_power_w;     // commanded at the step start
    double source_energy_wh;   // trapezoid of the source power over the step
};

/// One pass of the control loop: read the state, command the scheme's
/// source power for the current distance, advance time by min(dt,
/// time-to-full) and update the state of charge. Stepping a completed
/// state is an error; the caller terminates instead.
StepResult met_step(const ChargeState& state, SchemeKind scheme, double distance_m,
                    double dt_h, const SimModels& models);

struct RunRecord {
    std::uint64_t run_id = 0;
    SchemeKind scheme = SchemeKind::cpc;
    double start_time_h = 0.0;
    std::size_t period_count = 0;
    double energy_wh = 0.0;            // total source energy
    double charge_duration_h = 0.0;    // t_end - start_time
};

/// Observer invoked once per integration step with the pre-step state,
/// the period distance, and the commanded source power.
using StepObserver = std::function<void(const ChargeState&, double, double)>;

/// Simulates one uninterrupted procedure from `start_time_h` to full
/// charge. The distance is constant within each trajectory period;
/// period boundaries and the CC/CV corner are snapped onto step
/// boundaries by splitting the straddling step, so the integrand is
/// smooth inside every step. Throws if the trajectory does not cover
/// the remaining charge time.
RunRecord run_procedure(const SimModels& models, SchemeKind scheme, double start_time_h,
                        const Trajectory& trajectory, double dt_h,
                        const StepObserver& observer = {});

/// Start time and trajectory for run `run_index`, drawn from the
/// substream derived from (config.seed, run_index). The start time is
/// uniform over [0, t_end).
struct ProcedureDraw {
    double start_time_h;
    Trajectory trajectory;
};

ProcedureDraw draw_procedure(const SimConfig& config, std::uint64_t run_index);

struct SchemeAggregate {
    SchemeKind scheme;
    std::uint64_t runs = 0;
    double mean_energy_wh = 0.0;
    double std_energy_wh = 0.0;               // sample standard deviation
    std::optional<double> arbc_savings_pct;   // 100 (mean - mean_arbc) / mean; empty on the arbc row
};

struct AggregateStats {
    std::vector<SchemeAggregate> per_scheme;
};

/// Groups records by scheme (first-appearance order) and computes means,
/// sample standard deviations, and savings of arbc versus each other
/// scheme when arbc is present.
AggregateStats aggregate(std::span<const RunRecord> records);

/// Savings of arbc versus every other aggregated scheme, in percent.
/// Requires arbc plus at least one other scheme; a zero mean elsewhere
/// is a configuration error.
std::vector<std::pair<SchemeKind, double>> savings_report(const AggregateStats& stats);

struct McResult {
    std::vector<RunRecord> records;   // grouped by run, schemes in config order
    AggregateStats stats;
};

/// Runs `config.runs` paired procedures. Records are bit-identical for
/// identical (config, seed) regardless of thread count, and the per-run
/// scheme energy ordering (arbc <= dac/pac <= cpc) is checked on every
/// run when those schemes are configured.
McResult monte_carlo(const SimConfig& config);

} // namespace arbc
