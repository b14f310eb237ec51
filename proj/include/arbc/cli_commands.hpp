// CSV-producing command implementations behind the arbcsim CLI.
//
// Numeric cells are printed with six significant digits; table shape
// and header names are part of the tool's contract, so downstream
// plotting scripts can rely on them.

#pragma once

#include "arbc/simulator.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace arbc {

class IoError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// %.6g rendering used for every numeric CSV cell.
std::string format_sig6(double value);

/// Source power versus distance, one column per requested output power.
/// Header: d_m,ps_w_pout_<value>,... Rows sweep d = 0..d_max_m in
/// d_step_m increments (inclusive when the step divides the range).
void cmd_link_curve(const SimConfig& config, const std::vector<double>& pout_w,
                    double d_max_m, double d_step_m, std::ostream& out);

/// Source power versus output power, one column per requested distance.
/// Header: pout_w,ps_w_d_<value>,... Rows sweep pout = 0..pout_max_w.
void cmd_source_vs_output(const SimConfig& config, const std::vector<double>& distances_m,
                          double pout_max_w, double pout_step_w, std::ostream& out);

/// Charging profile table: t_h,i_a,v_v,po_w with t in [0, t_end).
void cmd_profile(const SimConfig& config, double t_step_h, std::ostream& out);

/// Commanded source power of every scheme along the run-0 draw.
/// Header: t_h,d_m,ps_cpc_w,ps_pac_w,ps_dac_w,ps_arbc_w; one row per
/// integration step, sampled at the step start.
void cmd_trace(const SimConfig& config, std::ostream& out);

/// Monte Carlo campaign; writes runs.csv and aggregate.csv into
/// out_dir (created if missing).
void cmd_simulate(const SimConfig& config, const std::string& out_dir);

} // namespace arbc
