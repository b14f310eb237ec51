#include "arbc/coverage.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace arbc {

ConeCoverage ConeCoverage::make(double max_distance_m, double max_height_m) {
    if (!std::isfinite(max_distance_m) || !std::isfinite(max_height_m) ||
        !(max_height_m > 0.0) || !(max_height_m < max_distance_m)) {
        throw std::invalid_argument("coverage requires 0 < h_max < d_max");
    }
    const double base = std::sqrt(max_distance_m * max_distance_m - max_height_m * max_height_m);
    return ConeCoverage{max_distance_m, max_height_m, base};
}

std::vector<std::string> validate(const MobilityParams& p) {
    std::vector<std::string> violations;
    if (!(p.period_min_h > 0.0) || !std::isfinite(p.period_min_h)) {
        violations.emplace_back("period_min must be positive");
    }
    if (!(p.period_max_h >= p.period_min_h) || !std::isfinite(p.period_max_h)) {
        violations.emplace_back("period_max must be at least period_min");
    }
    return violations;
}

double max_radial_at(const ConeCoverage& cov, double depth_m) {
    return depth_m / cov.max_height_m * cov.base_radius_m;
}

bool contains(const ConeCoverage& cov, const Position& p) {
    if (p.depth_m < 0.0 || p.depth_m > cov.max_height_m || p.radial_m < 0.0) {
        return false;
    }
    return p.radial_m <= max_radial_at(cov, p.depth_m);
}

double distance(const Position& p) {
    return std::sqrt(p.depth_m * p.depth_m + p.radial_m * p.radial_m);
}

Position position_from_uniforms(const ConeCoverage& cov, SamplerKind sampler,
                                double u, double v, double w) {
    if (sampler == SamplerKind::uniform_distance) {
        const double d = cov.max_distance_m * u;
        if (d <= cov.max_height_m) {
            return Position{d, 0.0, 0.0};
        }
        // Too far for the axis; the nearest-to-axis point at this distance
        // sits on the base plane.
        const double radial = std::sqrt(d * d - cov.max_height_m * cov.max_height_m);
        return Position{cov.max_height_m, radial, 0.0};
    }
    // Uniform over the cone volume: depth by the cube-root law, then
    // uniform over the disc at that depth.
    const double depth = cov.max_height_m * std::cbrt(u);
    const double radial = max_radial_at(cov, depth) * std::sqrt(v);
    const double azimuth = 2.0 * std::numbers::pi * w;
    return Position{depth, radial, azimuth};
}

Position sample_position(const ConeCoverage& cov, const MobilityParams& mobility,
                         RandomStream& stream) {
    const double u = stream.uniform01_pos();
    if (mobility.sampler == SamplerKind::uniform_distance) {
        return position_from_uniforms(cov, mobility.sampler, u, 0.0, 0.0);
    }
    const double v = stream.uniform01();
    const double w = stream.uniform01();
    return position_from_uniforms(cov, mobility.sampler, u, v, w);
}

Trajectory generate_trajectory(const ConeCoverage& cov, const MobilityParams& mobility,
                               double horizon_h, RandomStream& stream) {
    if (!(horizon_h > 0.0) || !std::isfinite(horizon_h)) {
        throw std::invalid_argument("trajectory horizon must be positive");
    }
    Trajectory trajectory;
    double covered = 0.0;
    while (covered < horizon_h) {
        double duration = stream.uniform(mobility.period_min_h, mobility.period_max_h);
        const Position pos = sample_position(cov, mobility, stream);
        const double dist = std::min(distance(pos), cov.max_distance_m);
        if (covered + duration >= horizon_h) {
            duration = horizon_h - covered;  // truncate the final period
            covered = horizon_h;
        } else {
            covered += duration;
        }
        trajectory.push_back(TrajectoryPeriod{duration, dist});
    }
    return trajectory;
}

} // namespace arbc
