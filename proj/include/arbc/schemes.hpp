// Source power control schemes.
//
// Each scheme is a pair of independent assumptions: which output power
// to provision for (the profile peak, or the instantaneous preferred
// power) and which distance to provision for (the coverage maximum, or
// the receiver's actual distance). The four combinations:
//
//           max distance     actual distance
//   peak    cpc              dac
//   profile pac              arbc

#pragma once

#include "arbc/battery.hpp"
#include "arbc/coverage.hpp"
#include "arbc/link_model.hpp"

#include <array>
#include <optional>
#include <string_view>

namespace arbc {

enum class SchemeKind { cpc, pac, dac, arbc };

inline constexpr std::array<SchemeKind, 4> kAllSchemes{
    SchemeKind::cpc, SchemeKind::pac, SchemeKind::dac, SchemeKind::arbc};

std::string_view scheme_name(SchemeKind kind);

/// Case-insensitive parse of "cpc" / "pac" / "dac" / "arbc".
std::optional<SchemeKind> parse_scheme(std::string_view text);

/// True for schemes that follow the charging profile (pac, arbc);
/// the others provision for the peak.
bool follows_profile(SchemeKind kind);

/// True for schemes that use the receiver's actual distance (dac, arbc);
/// the others provision for the coverage maximum.
bool tracks_distance(SchemeKind kind);

/// Output power the scheme provisions for at profile time t.
double assumed_output_power(SchemeKind kind, const ChargeProfileParams& battery, double t_h);

/// Distance the scheme provisions for. Requires 0 < actual <= d_max.
double assumed_distance(SchemeKind kind, const ConeCoverage& cov, double actual_distance_m);

/// Source power the scheme commands for (t, actual distance).
double scheme_source_power(SchemeKind kind, const LinkParams& link,
                           const ChargeProfileParams& battery, const ConeCoverage& cov,
                           double t_h, double actual_distance_m);

} // namespace arbc
