#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "osfib/core.hpp"
#include "osfib/rng.hpp"

using namespace osfib;

TEST_CASE("best arm is the smallest index of the maximum mean") {
    CHECK(best_arm({0.5, 0.6, 0.5}) == 2);
    CHECK(best_arm({0.6, 0.6}) == 1);

    std::vector<double> means(20, 0.6);
    means[16] = 0.7;
    CHECK(best_arm(means) == 17);

    CHECK_THROWS_AS(best_arm({}), InvalidInstanceError);
    CHECK_THROWS_AS(best_arm({0.5, 1.2}), InvalidInstanceError);
    CHECK_THROWS_AS(best_arm({-0.1}), InvalidInstanceError);
}

TEST_CASE("gap profile") {
    SUBCASE("best at index 1 leaves a singleton prefix") {
        const auto inst = make_custom_instance({0.6, 0.5, 0.4});
        const GapProfile profile = gap_profile(inst);
        CHECK(inst.best == 1);
        CHECK(profile.gaps[0] == 0.0);
        CHECK(profile.gaps[1] == doctest::Approx(0.1));
        CHECK(profile.gaps[2] == doctest::Approx(0.2));
        CHECK(profile.sorted_prefix == std::vector<double>{0.0});
    }
    SUBCASE("prefix is the descending sort of the gaps up to the best arm") {
        const auto inst = make_custom_instance({0.5, 0.25, 0.75});
        const GapProfile profile = gap_profile(inst);
        CHECK(inst.best == 3);
        CHECK(profile.sorted_prefix.size() == 3);
        CHECK(profile.sorted_prefix[0] == doctest::Approx(0.5));
        CHECK(profile.sorted_prefix[1] == doctest::Approx(0.25));
        CHECK(profile.sorted_prefix[2] == 0.0);
    }
    SUBCASE("uniform suboptimal means give equal gaps") {
        std::vector<double> means(20, 0.6);
        means[16] = 0.7;
        const GapProfile profile = gap_profile(make_custom_instance(means));
        for (int arm = 1; arm <= 20; ++arm) {
            if (arm == 17) {
                CHECK(profile.gaps[arm - 1] == 0.0);
            } else {
                CHECK(profile.gaps[arm - 1] == doctest::Approx(0.1));
            }
        }
    }
    SUBCASE("prefix multiset matches the raw gaps up to the best arm") {
        RngStream stream(7);
        for (int trial = 0; trial < 200; ++trial) {
            const int k = 1 + static_cast<int>(stream.next() % 12);
            std::vector<double> means;
            for (int i = 0; i < k; ++i) means.push_back(stream.uniform());
            const auto inst = make_custom_instance(means);
            const GapProfile profile = gap_profile(inst);
            std::vector<double> expected(profile.gaps.begin(),
                                         profile.gaps.begin() + inst.best);
            std::sort(expected.begin(), expected.end());
            std::vector<double> got = profile.sorted_prefix;
            std::sort(got.begin(), got.end());
            CHECK(got == expected);
            CHECK(profile.sorted_prefix.back() == 0.0);
            // exactly one zero when the maximum is unique (smallest-index ties
            // make earlier duplicates impossible)
            CHECK(std::count(expected.begin(), expected.end(), 0.0) == 1);
        }
    }
}

TEST_CASE("observation slice covers exactly the arms from the played one up") {
    const std::vector<double> rewards{0.1, 0.2, 0.3, 0.4, 0.5};
    SUBCASE("middle") {
        const ObservationSlice slice = observation_slice(5, 3, rewards);
        CHECK(slice.first == 3);
        CHECK(slice.values == std::vector<double>{0.3, 0.4, 0.5});
        CHECK(slice.value_for(4) == 0.4);
    }
    SUBCASE("playing arm 1 reveals everything") {
        CHECK(observation_slice(5, 1, rewards).values == rewards);
    }
    SUBCASE("playing the last arm is plain bandit feedback") {
        CHECK(observation_slice(5, 5, rewards).values == std::vector<double>{0.5});
    }
    SUBCASE("out-of-range arm") {
        CHECK_THROWS_AS(observation_slice(5, 0, rewards), InvalidArmError);
        CHECK_THROWS_AS(observation_slice(5, 6, rewards), InvalidArmError);
    }
    SUBCASE("length is K - played + 1") {
        RngStream stream(11);
        for (int trial = 0; trial < 200; ++trial) {
            const int k = 1 + static_cast<int>(stream.next() % 10);
            std::vector<double> values(static_cast<std::size_t>(k), 0.5);
            const int played = 1 + static_cast<int>(stream.next() % k);
            CHECK(observation_slice(k, played, values).values.size() ==
                  static_cast<std::size_t>(k - played + 1));
        }
    }
}

TEST_CASE("regret accounting uses true-mean gaps") {
    const auto inst = make_custom_instance({0.5, 0.6});
    const GapProfile gaps = gap_profile(inst); // {0.1, 0}
    SUBCASE("playing the best arm costs nothing") {
        RegretTrace trace;
        for (long t = 1; t <= 10; ++t) accumulate_regret(trace, gaps, t, 2);
        CHECK(trace.total() == 0.0);
    }
    SUBCASE("ten plays of a 0.1-gap arm accumulate to one") {
        RegretTrace trace;
        for (long t = 1; t <= 10; ++t) accumulate_regret(trace, gaps, t, 1);
        CHECK(trace.total() == doctest::Approx(1.0));
    }
    SUBCASE("mixed plays") {
        RegretTrace trace;
        accumulate_regret(trace, gaps, 1, 1);
        accumulate_regret(trace, gaps, 2, 1);
        accumulate_regret(trace, gaps, 3, 2);
        CHECK(trace.rows[0].cumulative == doctest::Approx(0.1));
        CHECK(trace.rows[1].cumulative == doctest::Approx(0.2));
        CHECK(trace.rows[2].cumulative == doctest::Approx(0.2));
    }
    SUBCASE("cumulative is nondecreasing and increments match the gap vector") {
        RngStream stream(3);
        for (int trial = 0; trial < 100; ++trial) {
            const int k = 2 + static_cast<int>(stream.next() % 8);
            std::vector<double> means;
            for (int i = 0; i < k; ++i) means.push_back(stream.uniform());
            const auto random_inst = make_custom_instance(means);
            const GapProfile profile = gap_profile(random_inst);
            RegretTrace trace;
            double prev = 0.0;
            for (long t = 1; t <= 100; ++t) {
                const int arm = 1 + static_cast<int>(stream.next() % k);
                accumulate_regret(trace, profile, t, arm);
                CHECK(trace.rows.back().increment == profile.gaps[arm - 1]);
                CHECK(trace.rows.back().cumulative >= prev);
                prev = trace.rows.back().cumulative;
            }
        }
    }
    SUBCASE("invalid arm") {
        RegretTrace trace;
        CHECK_THROWS_AS(accumulate_regret(trace, gaps, 1, 3), InvalidArmError);
    }
}
