#include "arbc/schemes.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace arbc {

std::string_view scheme_name(SchemeKind kind) {
    switch (kind) {
        case SchemeKind::cpc: return "cpc";
        case SchemeKind::pac: return "pac";
        case SchemeKind::dac: return "dac";
        case SchemeKind::arbc: return "arbc";
    }
    throw std::logic_error("unreachable scheme kind");
}

std::optional<SchemeKind> parse_scheme(std::string_view text) {
    std::string lower;
    lower.reserve(text.size());
    for (char c : text) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    for (SchemeKind kind : kAllSchemes) {
        if (lower == scheme_name(kind)) return kind;
    }
    return std::nullopt;
}

bool follows_profile(SchemeKind kind) {
    return kind == SchemeKind::pac || kind == SchemeKind::arbc;
}

bool tracks_distance(SchemeKind kind) {
    return kind == SchemeKind::dac || kind == SchemeKind::arbc;
}

double assumed_output_power(SchemeKind kind, const ChargeProfileParams& battery, double t_h) {
    return follows_profile(kind) ? preferred_power(battery, t_h) : peak_power(battery);
}

double assumed_distance(SchemeKind kind, const ConeCoverage& cov, double actual_distance_m) {
    if (!(actual_distance_m > 0.0) || !(actual_distance_m <= cov.max_distance_m)) {
        throw std::invalid_argument("actual distance must lie in (0, d_max]");
    }
    return tracks_distance(kind) ? actual_distance_m : cov.max_distance_m;
}

double scheme_source_power(SchemeKind kind, const LinkParams& link,
                           const ChargeProfileParams& battery, const ConeCoverage& cov,
                           double t_h, double actual_distance_m) {
    return source_power(link, assumed_output_power(kind, battery, t_h),
                        assumed_distance(kind, cov, actual_distance_m));
}

} // namespace arbc
