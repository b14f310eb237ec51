#include "arbc/link_model.hpp"

#include "doctest.h"

#include <cmath>
#include <stdexcept>

using namespace arbc;

namespace {

// High-precision reference values, frozen from an independent
// 40-digit evaluation of the link formulas at the default parameters.
constexpr double kGain0 = 0.1278333715099;
constexpr double kGain2 = 0.1294389180482;
constexpr double kGain6 = 0.239667831429;
constexpr double kGain10 = 0.3949418409319;
constexpr double kSlopeFactor = 98.5324947589;   // (1+f) / (2 n (1-f))

} // namespace

TEST_CASE("link gain matches frozen references") {
    const LinkParams link;
    CHECK(link_gain(link, 0.0) == doctest::Approx(kGain0).epsilon(1e-12));
    CHECK(link_gain(link, 2.0) == doctest::Approx(kGain2).epsilon(1e-12));
    CHECK(link_gain(link, 6.0) == doctest::Approx(kGain6).epsilon(1e-12));
    CHECK(link_gain(link, 10.0) == doctest::Approx(kGain10).epsilon(1e-12));
}

TEST_CASE("link gain grows with distance and saturates below 1 - ln f") {
    const LinkParams link;
    // At short range the exponential term is sub-ulp, so growth is only
    // guaranteed non-strict pointwise; over wider gaps it is strict.
    double previous = link_gain(link, 0.0);
    for (double d = 0.25; d <= 25.0; d += 0.25) {
        const double gain = link_gain(link, d);
        CHECK(gain >= previous);
        previous = gain;
    }
    CHECK(link_gain(link, 2.0) > link_gain(link, 0.0));
    CHECK(link_gain(link, 25.0) > link_gain(link, 10.0));
    CHECK(previous < 1.0 - std::log(link.reflectivity));
}

TEST_CASE("source power matches frozen references") {
    const LinkParams link;
    CHECK(source_power(link, 3.0, 2.0) == doctest::Approx(82.92228853934).epsilon(1e-12));
    CHECK(source_power(link, 3.0, 6.0) == doctest::Approx(153.5380963549).epsilon(1e-12));
    CHECK(source_power(link, 1.0, 6.0) == doctest::Approx(106.3079576666).epsilon(1e-12));
    CHECK(source_power(link, 5.0, 6.0) == doctest::Approx(200.7682350432).epsilon(1e-12));
    CHECK(source_power(link, 4.2, 10.0) == doctest::Approx(299.7086123403).epsilon(1e-12));
    CHECK(source_power(link, 2.5, 10.0) == doctest::Approx(233.5537840584).epsilon(1e-12));
    CHECK(source_power(link, 0.0, 1.0) == doctest::Approx(44.10782349283).epsilon(1e-12));
}

TEST_CASE("source power is affine in output power") {
    const LinkParams link;
    for (double d : {0.0, 1.0, 4.0, 10.0}) {
        const double p0 = source_power(link, 0.0, d);
        const double p1 = source_power(link, 1.0, d);
        const double slope = p1 - p0;
        CHECK(slope == doctest::Approx(kSlopeFactor * link_gain(link, d)).epsilon(1e-10));
        for (double pout = 0.0; pout <= 6.0; pout += 0.5)
            CHECK(source_power(link, pout, d) ==
                  doctest::Approx(p0 + slope * pout).epsilon(1e-10));
    }
}

TEST_CASE("round trip between source and output power") {
    const LinkParams link;
    for (double d = 0.0; d <= 10.0; d += 0.5)
        for (double pout = 0.0; pout <= 6.0; pout += 0.3) {
            const double ps = source_power(link, pout, d);
            CHECK(output_power(link, ps, d) == doctest::Approx(pout).epsilon(1e-11));
        }
}

TEST_CASE("validation flags each broken parameter") {
    LinkParams link;
    CHECK(validate(link).empty());

    link.conversion_coeff = 0.0;
    CHECK(validate(link).size() == 1);

    link = LinkParams{};
    link.reflectivity = 1.0;
    CHECK(validate(link).size() == 1);
    link.reflectivity = 0.0;
    CHECK(validate(link).size() == 1);

    link = LinkParams{};
    link.reflector_radius_m = -1.0;
    link.wavelength_m = 0.0;
    link.cavity_gap_m = 0.0;
    CHECK(validate(link).size() == 3);
}

TEST_CASE("domain errors throw") {
    const LinkParams link;
    CHECK_THROWS_AS(link_gain(link, -0.1), std::invalid_argument);
    CHECK_THROWS_AS(source_power(link, 1.0, -1.0), std::invalid_argument);
    // Below the affine offset no nonnegative source power can reach the target.
    CHECK_THROWS_AS(source_power(link, link.power_offset_w - 1.0, 1.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(output_power(link, -1.0, 1.0), std::invalid_argument);
}
