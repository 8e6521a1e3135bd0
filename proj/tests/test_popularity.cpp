// Licensed under the Apache License, Version 2.0. See LICENSE in the project root.
#include <doctest.h>

#include <stdexcept>

#include "zapsim/popularity.hpp"

using namespace zapsim;

TEST_CASE("zipf weights for four sessions at unit shape") {
    const PopularityModel m = build_zipf(4, 1.0);
    REQUIRE(m.watch_prob.size() == 4);
    CHECK(m.watch_prob[0] == doctest::Approx(0.48).epsilon(1e-12));
    CHECK(m.watch_prob[1] == doctest::Approx(0.24).epsilon(1e-12));
    CHECK(m.watch_prob[2] == doctest::Approx(0.16).epsilon(1e-12));
    CHECK(m.watch_prob[3] == doctest::Approx(0.12).epsilon(1e-12));
    CHECK(m.watch_cdf.back() == 1.0); // forced exact so sampling cannot fall off the end
}

TEST_CASE("zipf degenerate and error cases") {
    const PopularityModel one = build_zipf(1, 1.0);
    CHECK(one.watch_prob[0] == doctest::Approx(1.0));

    const PopularityModel flat = build_zipf(5, 0.0);
    for (double p : flat.watch_prob)
        CHECK(p == doctest::Approx(0.2).epsilon(1e-12));

    CHECK_THROWS_AS(build_zipf(0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(build_zipf(-3, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(build_zipf(10, -0.5), std::invalid_argument);
}

TEST_CASE("zipf probabilities are a non-increasing distribution") {
    const PopularityModel m = build_zipf(250, 1.2);
    double sum = 0.0;
    for (std::size_t k = 0; k < m.watch_prob.size(); ++k) {
        sum += m.watch_prob[k];
        if (k > 0)
            CHECK(m.watch_prob[k] <= m.watch_prob[k - 1]);
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("watch sampling maps uniforms through the cdf") {
    const PopularityModel m = build_zipf(4, 1.0); // cdf 0.48, 0.72, 0.88, 1.0
    CHECK(sample_watch(m, 0.0) == 1);
    CHECK(sample_watch(m, 0.4799) == 1);
    CHECK(sample_watch(m, 0.4801) == 2);
    CHECK(sample_watch(m, 0.71) == 2);
    CHECK(sample_watch(m, 0.8799) == 3);
    CHECK(sample_watch(m, 0.8801) == 4);
    CHECK(sample_watch(m, 0.9999999) == 4);
}

TEST_CASE("switch probabilities renormalize over the destinations") {
    const SwitchingModel sw3 = make_switching_model(build_zipf(3, 1.0));
    CHECK(switch_prob(sw3, 1, 2) == doctest::Approx(0.6).epsilon(1e-12));
    CHECK(switch_prob(sw3, 1, 3) == doctest::Approx(0.4).epsilon(1e-12));

    const SwitchingModel sw2 = make_switching_model(build_zipf(2, 1.0));
    CHECK(switch_prob(sw2, 2, 1) == doctest::Approx(1.0).epsilon(1e-12));

    CHECK_THROWS_AS(switch_prob(sw3, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(switch_prob(sw3, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(switch_prob(sw3, 1, 4), std::invalid_argument);
}

TEST_CASE("switch probabilities from any source sum to one") {
    const SwitchingModel sw = make_switching_model(build_zipf(40, 0.8));
    for (int i = 1; i <= 40; ++i) {
        double sum = 0.0;
        for (int j = 1; j <= 40; ++j)
            if (j != i)
                sum += switch_prob(sw, i, j);
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-10));
    }
}
