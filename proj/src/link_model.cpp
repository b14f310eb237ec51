#include "arbc/link_model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace arbc {

namespace {

void require_distance(double distance_m) {
    if (!std::isfinite(distance_m)) {
        throw std::invalid_argument("distance must be finite");
    }
    if (distance_m < 0.0) {
        throw std::invalid_argument("distance must be non-negative");
    }
}

// (1+f) / (2 n (1-f)), the distance-independent part of the slope.
double slope_factor(const LinkParams& p) {
    return (1.0 + p.reflectivity) / (2.0 * p.conversion_coeff * (1.0 - p.reflectivity));
}

} // namespace

std::vector<std::string> validate(const LinkParams& p) {
    std::vector<std::string> violations;
    if (!std::isfinite(p.power_offset_w)) {
        violations.emplace_back("m must be finite");
    }
    if (!(p.conversion_coeff > 0.0) || !std::isfinite(p.conversion_coeff)) {
        violations.emplace_back("n must be positive");
    }
    if (!(p.reflectivity > 0.0 && p.reflectivity < 1.0)) {
        violations.emplace_back("f must lie in (0,1)");
    }
    if (!(p.reflector_radius_m > 0.0) || !std::isfinite(p.reflector_radius_m)) {
        violations.emplace_back("r must be positive");
    }
    if (!(p.wavelength_m > 0.0) || !std::isfinite(p.wavelength_m)) {
        violations.emplace_back("lambda must be positive");
    }
    if (!(p.cavity_gap_m > 0.0) || !std::isfinite(p.cavity_gap_m)) {
        violations.emplace_back("l must be positive");
    }
    return violations;
}

double link_gain(const LinkParams& p, double distance_m) {
    require_distance(distance_m);
    const double r2 = p.reflector_radius_m * p.reflector_radius_m;
    const double exponent = -2.0 * std::numbers::pi * r2 / (p.wavelength_m * (p.cavity_gap_m + distance_m));
    // At d = 0 the exponent is around -204 for the default optics; the
    // exponential term is then vanishingly small and g(0) = -ln f.
    return std::exp(exponent) - std::log(p.reflectivity);
}

double source_power(const LinkParams& p, double output_power_w, double distance_m) {
    if (!std::isfinite(output_power_w)) {
        throw std::invalid_argument("output power must be finite");
    }
    if (output_power_w < p.power_offset_w) {
        throw std::invalid_argument("output power below the link offset m has no admissible source power");
    }
    return (output_power_w - p.power_offset_w) * slope_factor(p) * link_gain(p, distance_m);
}

double output_power(const LinkParams& p, double source_power_w, double distance_m) {
    if (!std::isfinite(source_power_w) || source_power_w < 0.0) {
        throw std::invalid_argument("source power must be non-negative");
    }
    return p.power_offset_w + source_power_w / (slope_factor(p) * link_gain(p, distance_m));
}

} // namespace arbc
