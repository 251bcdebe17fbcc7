#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "osfib/environments.hpp"
#include "osfib/policies.hpp"

using namespace osfib;

TEST_CASE("confidence radius") {
    CHECK(confidence_radius(1, 20, 100000) == std::numeric_limits<double>::infinity());
    CHECK(confidence_radius(1, 1, 1) == std::numeric_limits<double>::infinity());
    // sqrt(ln(2e11) / 2) and sqrt(ln(2e11) / 2e5), frozen from independent evaluation
    CHECK(confidence_radius(2, 20, 100000) ==
          doctest::Approx(3.60704749091930087).epsilon(1e-12));
    CHECK(confidence_radius(100001, 20, 100000) ==
          doctest::Approx(0.01140648569970051).epsilon(1e-12));
}

TEST_CASE("elimination selection plays the smallest surviving index") {
    ElimState state = make_elim_state(10, 100);
    CHECK(state.active.size() == 10);
    CHECK(elim_select(state) == 1); // round 1 on a fresh state

    state.active = {3, 7, 9};
    CHECK(elim_select(state) == 3);
    state.active = {5};
    CHECK(elim_select(state) == 5);
    state.active.clear();
    CHECK_THROWS_AS(elim_select(state), Error);
}

TEST_CASE("elimination update") {
    SUBCASE("identical rewards never eliminate anyone") {
        ElimState state = make_elim_state(4, 50);
        const std::vector<double> rewards{0.5, 0.5, 0.5, 0.5};
        for (long t = 1; t <= 50; ++t) {
            elim_update(state, t, observation_slice(4, elim_select(state), rewards));
            CHECK(state.active.size() == 4);
        }
    }
    SUBCASE("arms whose means trail the leader by more than the threshold drop out") {
        // At round 93 with K=3, T=10 the next-round threshold is
        // 2 sqrt(ln(300)/186) = 0.3502: the 0.4 laggard goes, the 0.1 one stays.
        ElimState state = make_elim_state(3, 10);
        state.round = 93;
        state.emp_means = {0.9, 0.5, 0.8};
        elim_update(state, 93, observation_slice(3, 1, {0.9, 0.5, 0.8}));
        CHECK(state.active == std::vector<int>{1, 3});
        CHECK(state.round == 94);
    }
    SUBCASE("the first selection works on the full set") {
        // The round-1 radius is infinite, so the fresh state's set is both
        // the initial set and the one played at round 1.
        ElimState state = make_elim_state(5, 100);
        CHECK(elim_select(state) == 1);
        elim_update(state, 1, observation_slice(5, 1, {0.0, 1.0, 0.0, 0.0, 0.0}));
        // even a 1.0-vs-0.0 split survives round 1's wide threshold
        CHECK(state.active.size() == 5);
        CHECK(state.emp_means[1] == 1.0);
    }
    SUBCASE("a slice that misses surviving arms is rejected") {
        ElimState state = make_elim_state(4, 50);
        CHECK_THROWS_AS(elim_update(state, 1, observation_slice(4, 2, {0, 0, 0, 0})),
                        FeedbackContractError);
    }
    SUBCASE("round bookkeeping is enforced") {
        ElimState state = make_elim_state(2, 50);
        CHECK_THROWS_AS(elim_update(state, 5, observation_slice(2, 1, {0, 0})), Error);
    }
}

TEST_CASE("elimination invariants on random runs") {
    RngStream gen(17);
    for (int trial = 0; trial < 200; ++trial) {
        const int k = 2 + static_cast<int>(gen.next() % 7);
        std::vector<double> means;
        for (int i = 0; i < k; ++i) means.push_back(gen.uniform());
        const auto inst = make_custom_instance(means);
        const long horizon = 150;

        RngStream env(99, static_cast<std::uint64_t>(trial), StreamLane::environment);
        ElimState state = make_elim_state(k, horizon);
        std::vector<int> previous_active = state.active;
        std::vector<std::vector<double>> observed(static_cast<std::size_t>(k));
        int previous_played = 1;
        for (long t = 1; t <= horizon; ++t) {
            const int played = elim_select(state);
            CHECK(played >= previous_played); // the played index never moves left
            if (std::binary_search(state.active.begin(), state.active.end(), inst.best)) {
                CHECK(played <= inst.best);
            }
            previous_played = played;

            const RoundSample sample = sample_round(inst, env);
            for (int arm = 1; arm <= k; ++arm) {
                observed[arm - 1].push_back(sample.rewards[arm - 1]);
            }
            elim_update(state, t, observation_slice(k, played, sample.rewards));

            CHECK(std::includes(previous_active.begin(), previous_active.end(),
                                state.active.begin(), state.active.end())); // nested sets
            CHECK(!state.active.empty());
            previous_active = state.active;

            // running average equals the plain average of everything observed
            for (int arm : state.active) {
                const auto& values = observed[arm - 1];
                const double direct =
                    std::accumulate(values.begin(), values.end(), 0.0) /
                    static_cast<double>(values.size());
                CHECK(state.emp_means[arm - 1] == doctest::Approx(direct).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("doubling segments") {
    CHECK(doubling_segment(1).segment == 0);
    CHECK(doubling_segment(1).horizon == 1);
    CHECK(doubling_segment(1).inner_round == 1);
    CHECK(doubling_segment(5).segment == 2);
    CHECK(doubling_segment(5).horizon == 4);
    CHECK(doubling_segment(5).inner_round == 2);
    CHECK(doubling_segment(7).segment == 2);
    CHECK(doubling_segment(7).inner_round == 4); // last round of the segment
    CHECK(doubling_segment(8).segment == 3);
    CHECK(doubling_segment(8).inner_round == 1);
    CHECK_THROWS_AS(doubling_segment(0), Error);

    // a fresh inner run starts at every power of two
    ElimDoublingPolicy policy(3);
    const std::vector<double> rewards{1.0, 0.0, 0.0};
    for (long t = 1; t <= 64; ++t) {
        const int played = policy.select(t);
        if ((t & (t - 1)) == 0) CHECK(played == 1); // segment start: everything active again
        policy.observe(t, observation_slice(3, played, rewards));
    }
}

TEST_CASE("ucb-n") {
    UcbNPolicy policy(2);
    CHECK(policy.select(1) == 1);
    policy.observe(1, observation_slice(2, 1, {0.0, 1.0}));
    CHECK(policy.counts() == std::vector<long>{1, 1}); // one play observed everything
    // indices {0 + sqrt(2 ln 2), 1 + sqrt(2 ln 2)}
    CHECK(policy.select(2) == 2);

    UcbNPolicy tied(3);
    tied.observe(1, observation_slice(3, 1, {0.4, 0.4, 0.4}));
    CHECK(tied.select(2) == 1); // equal means, equal counts: smallest index

    SUBCASE("all arms have a count after round 1 on larger K") {
        UcbNPolicy wide(6);
        CHECK(wide.select(1) == 1);
        wide.observe(1, observation_slice(6, 1, {0, 0, 1, 0, 1, 0}));
        for (long c : wide.counts()) CHECK(c == 1);
    }
    SUBCASE("partial slices update only the observed suffix") {
        UcbNPolicy partial(3);
        partial.observe(1, observation_slice(3, 1, {0.1, 0.2, 0.3}));
        partial.observe(2, observation_slice(3, 3, {0.0, 0.0, 0.9}));
        CHECK(partial.counts() == std::vector<long>{1, 1, 2});
        CHECK(partial.emp_means()[2] == doctest::Approx(0.6));
    }
}

TEST_CASE("ucb1") {
    Ucb1Policy policy(3);
    // round-robin initialization
    for (long t = 1; t <= 3; ++t) {
        CHECK(policy.select(t) == static_cast<int>(t));
        std::vector<double> rewards{0.0, 0.0, 0.0};
        rewards[static_cast<std::size_t>(t - 1)] = t == 1 ? 1.0 : 0.0;
        policy.observe(t, observation_slice(3, static_cast<int>(t), rewards));
    }
    CHECK(policy.select(4) == 1); // 1 + bonus beats 0 + bonus at equal counts

    Ucb1Policy two(2);
    two.select(1);
    two.observe(1, observation_slice(2, 1, {1.0, 0.7})); // only the played arm counts
    two.select(2);
    two.observe(2, observation_slice(2, 2, {0.3, 0.0}));
    CHECK(two.select(3) == 1); // means {1, 0}: 1 + sqrt(2 ln 3) wins

    Ucb1Policy zeros(2);
    zeros.select(1);
    zeros.observe(1, observation_slice(2, 1, {0.0, 0.0}));
    zeros.select(2);
    zeros.observe(2, observation_slice(2, 2, {0.0, 0.0}));
    CHECK(zeros.select(3) == 1); // full tie: smallest index
}

TEST_CASE("exponential-weights baseline") {
    SUBCASE("uniform weights with no exploration give the uniform mix") {
        const auto probs = exp3rtb_probs({1.0, 1.0, 1.0, 1.0}, 0.0);
        for (double p : probs) CHECK(p == doctest::Approx(0.25).epsilon(1e-15));
    }
    SUBCASE("probabilities normalize and the observation ladder tops out at one") {
        RngStream gen(5);
        for (int trial = 0; trial < 300; ++trial) {
            const int k = 2 + static_cast<int>(gen.next() % 10);
            std::vector<double> weights;
            for (int i = 0; i < k; ++i) weights.push_back(std::exp(gen.uniform(-3.0, 3.0)));
            const double gamma = gen.uniform(0.0, 1.0);
            const auto probs = exp3rtb_probs(weights, gamma);
            double total = 0.0;
            double ladder = 0.0;
            for (int i = 0; i < k; ++i) {
                CHECK(probs[i] >= gamma / k - 1e-15);
                total += probs[i];
                const double next_ladder = ladder + probs[i];
                CHECK(next_ladder >= ladder); // observation probability grows with the index
                ladder = next_ladder;
            }
            CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
            CHECK(ladder == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
    SUBCASE("importance estimates are unbiased under exact enumeration") {
        RngStream gen(6);
        for (int trial = 0; trial < 300; ++trial) {
            const int k = 2 + static_cast<int>(gen.next() % 8);
            std::vector<double> weights;
            for (int i = 0; i < k; ++i) weights.push_back(std::exp(gen.uniform(-2.0, 2.0)));
            const auto probs = exp3rtb_probs(weights, gen.uniform(0.0, 0.5));
            std::vector<double> rewards;
            for (int i = 0; i < k; ++i) rewards.push_back(gen.uniform());

            std::vector<double> expectation(static_cast<std::size_t>(k), 0.0);
            for (int played = 1; played <= k; ++played) {
                const std::vector<double> seen(rewards.begin() + (played - 1), rewards.end());
                const auto estimates = exp3rtb_estimates(probs, played, seen);
                for (int i = 0; i < k; ++i) {
                    expectation[i] += probs[played - 1] * estimates[i];
                }
            }
            for (int i = 0; i < k; ++i) {
                CHECK(expectation[i] == doctest::Approx(rewards[i]).epsilon(1e-9));
            }
        }
    }
    SUBCASE("all-zero rewards leave the distribution uniform") {
        RngStream rng(1, 0, StreamLane::policy);
        Exp3RtbPolicy policy(4, 1000, &rng);
        for (long t = 1; t <= 20; ++t) {
            const int played = policy.select(t);
            const std::vector<double> zeros(static_cast<std::size_t>(4 - played + 1), 0.0);
            ObservationSlice slice;
            slice.first = played;
            slice.values = zeros;
            policy.observe(t, slice);
            for (double p : policy.last_probs()) {
                CHECK(p == doctest::Approx(0.25).epsilon(1e-12));
            }
        }
    }
    SUBCASE("selection consumes exactly one stream draw per round") {
        RngStream rng(42, 0, StreamLane::policy);
        RngStream shadow = rng;
        Exp3RtbPolicy policy(5, 100, &rng);
        policy.select(1);
        shadow.uniform();
        CHECK(rng.uniform() == shadow.uniform());
    }
    SUBCASE("default rates") {
        RngStream rng(1, 0, StreamLane::policy);
        Exp3RtbPolicy policy(20, 100000, &rng);
        const double rate = std::sqrt(std::log(20.0) / 100000.0);
        CHECK(policy.eta() == doctest::Approx(rate).epsilon(1e-12));
        CHECK(policy.gamma() == doctest::Approx(rate).epsilon(1e-12));
    }
}

TEST_CASE("follow-the-leader") {
    CHECK(ftl_predict({3.0, 5.0, 4.0}) == 2);
    CHECK(ftl_predict({1.0, 1.0}) == 1);
    CHECK_THROWS_AS(ftl_predict({}), InvalidInstanceError);
}

TEST_CASE("policy factory") {
    RngStream rng(1, 0, StreamLane::policy);
    for (const char* name : kPolicyNames) {
        const auto policy = make_policy(name, 5, 100, &rng);
        CHECK(policy->name() == name);
        CHECK(policy->select(1) >= 1);
    }
    CHECK_THROWS_AS(make_policy("nope", 5, 100, &rng), Error);
}
