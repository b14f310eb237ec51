// Two-stage Li-ion charging profile.
//
// The profile is a constant-current (CC) stage followed by a
// constant-voltage (CV) stage. The non-constant half of each stage is a
// fitted sum of two exponentials in the charging time. Time is in hours
// throughout; the fit rates are per-hour and only make sense that way.

#pragma once

#include <string>
#include <vector>

namespace arbc {

/// a1 e^{r1 t} + a2 e^{r2 t}
struct DoubleExp {
    double amp1;
    double rate1;
    double amp2;
    double rate2;

    double operator()(double t) const;
};

/// Fit coefficients and stage boundaries of the charging profile.
struct ChargeProfileParams {
    DoubleExp current_fit{3.4, -1.263, 1.873e13, -26.61};     // CV-stage current, amperes
    DoubleExp voltage_fit{168.4, -0.2903, -165.9, -0.3078};   // CC-stage voltage, volts
    double cc_end_h = 1.2;        // CC/CV boundary (t_cc)
    double full_charge_h = 3.6;   // end of charge (t_end)
    double cc_current_a = 1.0;    // i_cc
    double cv_voltage_v = 4.2;    // v_cv
};

/// All invariant violations of `params`, empty when valid. Includes the
/// stage-boundary continuity check (0.01 A / 0.05 V fit tolerance).
std::vector<std::string> validate(const ChargeProfileParams& params);

/// Charging current at time t in [0, t_end). The CC branch covers
/// [0, t_cc] including the boundary sample, so the profile's peak-power
/// corner is exactly i_cc * v_cv.
double current_at(const ChargeProfileParams& params, double t_h);

/// Charging voltage at time t in [0, t_end); v_cv from t_cc onward.
double voltage_at(const ChargeProfileParams& params, double t_h);

/// Battery preferred charging power I(t) * V(t) on [0, t_end).
double preferred_power(const ChargeProfileParams& params, double t_h);

/// preferred_power extended to the closed interval [0, t_end]; the
/// t = t_end sample takes the CV-branch limit. Integrators that evaluate
/// step endpoints use this.
double preferred_power_closed(const ChargeProfileParams& params, double t_h);

/// Maximum of the preferred power, attained at the CC/CV corner:
/// i_cc * v_cv.
double peak_power(const ChargeProfileParams& params);

/// Charge delivered up to time t in [0, t_end], ampere-hours;
/// closed-form integral of the current profile.
double cumulative_charge(const ChargeProfileParams& params, double t_h);

/// cumulative_charge at end of charge.
double total_charge(const ChargeProfileParams& params);

/// State of charge as the delivered-charge fraction Q(t) / Q(t_end).
double soc_at(const ChargeProfileParams& params, double t_h);

/// Inverse of soc_at by bisection, |dt| <= 1e-9 h.
double time_from_soc(const ChargeProfileParams& params, double soc);

/// Elapsed profile time and the matching state of charge. The two fields
/// are kept consistent: soc == soc_at(time_h).
struct ChargeState {
    double time_h;
    double soc;
};

ChargeState charge_state_at(const ChargeProfileParams& params, double t_h);

bool fully_charged(const ChargeProfileParams& params, const ChargeState& state);

} // namespace arbc
