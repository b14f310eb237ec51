// End-to-end power relationship of the resonant beam link.
//
// Source electric power and received output power are related affinely,
// with a distance-dependent gain factor coming from single-pass beam
// attenuation over the cavity. All quantities are SI (watts, meters).

#pragma once

#include <string>
#include <vector>

namespace arbc {

/// Fitted constants of the transmitter-receiver power conversion chain.
struct LinkParams {
    double power_offset_w = -3.5017;      // m: additive offset of the affine relation
    double conversion_coeff = 0.0795;     // n: electro-optical conversion coefficient
    double reflectivity = 0.88;           // f: output reflector reflectivity, in (0,1)
    double reflector_radius_m = 1.5e-3;   // r: cavity reflector radius
    double wavelength_m = 1064e-9;        // lambda: resonant beam wavelength
    double cavity_gap_m = 65e-3;          // l: gain medium to transmitter reflector
};

/// All invariant violations of `params`, empty when valid.
std::vector<std::string> validate(const LinkParams& params);

/// Distance-dependent gain factor
///   g(d) = exp(-2 pi r^2 / (lambda (l + d))) - ln f.
/// Strictly positive, strictly increasing in d, bounded by 1 - ln f.
double link_gain(const LinkParams& params, double distance_m);

/// Source power required to deliver `output_power_w` at `distance_m`:
///   P_s = (P_o - m) (1+f) / (2 n (1-f)) * g(d).
/// Affine and increasing in P_o, increasing in d. Requires P_o >= m.
double source_power(const LinkParams& params, double output_power_w, double distance_m);

/// Inverse of source_power in the power argument:
///   P_o = m + P_s * 2 n (1-f) / ((1+f) g(d)).
/// A result below zero means the source power is under the lasing threshold.
double output_power(const LinkParams& params, double source_power_w, double distance_m);

} // namespace arbc
