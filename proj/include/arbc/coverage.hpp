// Cone-shaped transmitter coverage and receiver mobility.
//
// The service region is a cone with its apex at the transmitter: depth
// h below the apex, and at depth h a disc of radius h * base_radius /
// max_height. The farthest admissible point sits on the base rim at the
// maximum charging distance. Receivers move in piecewise-constant hops:
// a trajectory is a list of (duration, distance) charging periods.

#pragma once

#include "arbc/rng.hpp"

#include <string>
#include <vector>

namespace arbc {

struct ConeCoverage {
    double max_distance_m;   // d_max, apex to base rim
    double max_height_m;     // h_max, apex to base plane
    double base_radius_m;    // sqrt(d_max^2 - h_max^2)

    /// Builds the cone and derives the base radius.
    /// Throws std::invalid_argument unless 0 < max_height < max_distance.
    static ConeCoverage make(double max_distance_m = 10.0, double max_height_m = 3.0);
};

/// Receiver location in cone coordinates.
struct Position {
    double depth_m;      // below the apex, in [0, h_max]
    double radial_m;     // offset from the cone axis
    double azimuth_rad;  // in [0, 2 pi)
};

enum class SamplerKind {
    uniform_volume,    // uniform over the cone volume
    uniform_distance,  // link distance uniform over (0, d_max]
};

struct MobilityParams {
    double period_min_h = 0.2;
    double period_max_h = 0.6;
    SamplerKind sampler = SamplerKind::uniform_distance;
};

std::vector<std::string> validate(const MobilityParams& params);

/// One charging period: the receiver holds a fixed link distance for the
/// given duration; moves between periods are instantaneous.
struct TrajectoryPeriod {
    double duration_h;
    double distance_m;
};

using Trajectory = std::vector<TrajectoryPeriod>;

/// Admissible radial offset at the given depth, h * base_radius / h_max.
double max_radial_at(const ConeCoverage& cov, double depth_m);

/// True iff the position lies inside the cone (azimuth is irrelevant).
bool contains(const ConeCoverage& cov, const Position& p);

/// Link distance of a position, sqrt(h^2 + rho^2).
double distance(const Position& p);

/// Deterministic sampler core mapping unit uniforms (u, v, w) to a position.
///   uniform_volume:   h = h_max u^{1/3}, rho = max_radial(h) sqrt(v), phi = 2 pi w
///   uniform_distance: the in-cone point at link distance d_max * u closest
///                     to the axis (on-axis when the distance allows, else on
///                     the base plane); v and w are ignored.
Position position_from_uniforms(const ConeCoverage& cov, SamplerKind sampler,
                                double u, double v, double w);

/// Draws a position from the stream. The distance draw u comes from (0, 1]
/// so sampled link distances are strictly positive.
Position sample_position(const ConeCoverage& cov, const MobilityParams& mobility,
                         RandomStream& stream);

/// Draws (duration, position) periods until they cover `horizon_h`, then
/// truncates the final period so durations sum exactly to the horizon.
/// Per period the stream is consumed as: duration draw, then position draws.
Trajectory generate_trajectory(const ConeCoverage& cov, const MobilityParams& mobility,
                               double horizon_h, RandomStream& stream);

} // namespace arbc
