#include "arbc/battery.hpp"

#include <cmath>
#include <stdexcept>

namespace arbc {

namespace {

void require_in_profile(const ChargeProfileParams& p, double t_h, bool closed) {
    if (!std::isfinite(t_h) || t_h < 0.0 || (closed ? t_h > p.full_charge_h : t_h >= p.full_charge_h)) {
        throw std::invalid_argument("charging time outside the profile domain");
    }
}

// Antiderivative of the double exponential, zero at t0.
double double_exp_integral(const DoubleExp& f, double t0, double t1) {
    auto term = [&](double amp, double rate) {
        if (rate == 0.0) return amp * (t1 - t0);
        return amp / rate * (std::exp(rate * t1) - std::exp(rate * t0));
    };
    return term(f.amp1, f.rate1) + term(f.amp2, f.rate2);
}

} // namespace

double DoubleExp::operator()(double t) const {
    return amp1 * std::exp(rate1 * t) + amp2 * std::exp(rate2 * t);
}

std::vector<std::string> validate(const ChargeProfileParams& p) {
    std::vector<std::string> violations;
    if (!(p.cc_end_h > 0.0 && p.cc_end_h < p.full_charge_h)) {
        violations.emplace_back("t_cc must lie in (0, t_end)");
    }
    if (!(p.cc_current_a > 0.0)) {
        violations.emplace_back("i_cc must be positive");
    }
    if (!(p.cv_voltage_v > 0.0)) {
        violations.emplace_back("v_cv must be positive");
    }
    if (!violations.empty()) return violations;

    if (std::abs(p.current_fit(p.cc_end_h) - p.cc_current_a) > 0.01) {
        violations.emplace_back("current fit discontinuity at t_cc exceeds 0.01 A");
    }
    if (std::abs(p.voltage_fit(p.cc_end_h) - p.cv_voltage_v) > 0.05) {
        violations.emplace_back("voltage fit discontinuity at t_cc exceeds 0.05 V");
    }
    if (!(p.current_fit(p.full_charge_h) > 0.0)) {
        violations.emplace_back("current fit must stay positive up to t_end");
    }
    if (!(p.voltage_fit(0.0) > 0.0)) {
        violations.emplace_back("voltage fit must be positive at t = 0");
    }
    return violations;
}

double current_at(const ChargeProfileParams& p, double t_h) {
    require_in_profile(p, t_h, /*closed=*/false);
    return t_h <= p.cc_end_h ? p.cc_current_a : p.current_fit(t_h);
}

double voltage_at(const ChargeProfileParams& p, double t_h) {
    require_in_profile(p, t_h, /*closed=*/false);
    return t_h < p.cc_end_h ? p.voltage_fit(t_h) : p.cv_voltage_v;
}

double preferred_power(const ChargeProfileParams& p, double t_h) {
    require_in_profile(p, t_h, /*closed=*/false);
    return preferred_power_closed(p, t_h);
}

double preferred_power_closed(const ChargeProfileParams& p, double t_h) {
    require_in_profile(p, t_h, /*closed=*/true);
    if (t_h <= p.cc_end_h) {
        // CC stage; the corner sample pairs i_cc with v_cv, making the
        // peak i_cc * v_cv exact.
        const double v = t_h < p.cc_end_h ? p.voltage_fit(t_h) : p.cv_voltage_v;
        return p.cc_current_a * v;
    }
    return p.cv_voltage_v * p.current_fit(t_h);
}

double peak_power(const ChargeProfileParams& p) {
    return p.cc_current_a * p.cv_voltage_v;
}

double cumulative_charge(const ChargeProfileParams& p, double t_h) {
    require_in_profile(p, t_h, /*closed=*/true);
    if (t_h <= p.cc_end_h) {
        return p.cc_current_a * t_h;
    }
    return p.cc_current_a * p.cc_end_h + double_exp_integral(p.current_fit, p.cc_end_h, t_h);
}

double total_charge(const ChargeProfileParams& p) {
    return cumulative_charge(p, p.full_charge_h);
}

double soc_at(const ChargeProfileParams& p, double t_h) {
    return cumulative_charge(p, t_h) / total_charge(p);
}

double time_from_soc(const ChargeProfileParams& p, double soc) {
    if (!std::isfinite(soc) || soc < 0.0 || soc > 1.0) {
        throw std::invalid_argument("soc must lie in [0, 1]");
    }
    double lo = 0.0;
    double hi = p.full_charge_h;
    // Q is strictly increasing, so plain bisection converges monotonically.
    while (hi - lo > 1e-9) {
        const double mid = 0.5 * (lo + hi);
        if (soc_at(p, mid) < soc) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

ChargeState charge_state_at(const ChargeProfileParams& p, double t_h) {
    return ChargeState{t_h, soc_at(p, t_h)};
}

bool fully_charged(const ChargeProfileParams& p, const ChargeState& state) {
    return state.time_h >= p.full_charge_h;
}

} // namespace arbc
