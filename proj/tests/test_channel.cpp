#include <doctest.h>

#include <cmath>
#include <set>

#include "lwc/channel.hpp"

using namespace lwc;

TEST_CASE("apply follows the per-cell rule") {
    auto x = BitVector::from_string("101");
    CHECK(apply(x, ChannelState::from_string("***")) == x);
    CHECK(apply(x, ChannelState::from_string("*1*")) == BitVector::from_string("111"));
    CHECK(apply(BitVector::from_string("000"), ChannelState::from_string("111")) ==
          BitVector::from_string("111"));
    CHECK_THROWS_AS(apply(x, ChannelState::from_string("****")), std::invalid_argument);
}

TEST_CASE("apply is idempotent on the stuck positions") {
    SplitMix64 rng(41);
    for (int iter = 0; iter < 100; ++iter) {
        int n = 1 + static_cast<int>(rng.next_below(24));
        BitVector x(n);
        for (int i = 0; i < n; ++i) x.set(i, rng.next_bit());
        ChannelState s = sample(DefectModel{0.3, rng.next()}, n);
        BitVector y = apply(x, s);
        CHECK(apply(y, s) == y);
    }
}

TEST_CASE("state text form round-trips") {
    for (const char* text : {"*1**0", "***", "01", "*"}) {
        ChannelState s = ChannelState::from_string(text);
        CHECK(s.to_string() == text);
    }
    ChannelState s = ChannelState::from_string("*1*0");
    CHECK(s.defect_count() == 2);
    CHECK(s.nonzero_defect_count() == 1);
    CHECK(s.defect_positions() == std::vector<int>{1, 3});
    CHECK_THROWS_AS(ChannelState::from_string("*2*"), std::invalid_argument);
}

TEST_CASE("sampling at the boundaries") {
    ChannelState none = sample(DefectModel{0.0, 7}, 500);
    CHECK(none.defect_count() == 0);

    ChannelState all = sample(DefectModel{1.0, 7}, 20000);
    CHECK(all.defect_count() == 20000);
    // Stuck values split evenly: 3 sigma around 1/2.
    double ones = all.nonzero_defect_count() / 20000.0;
    CHECK(std::abs(ones - 0.5) < 3 * std::sqrt(0.25 / 20000.0));

    CHECK_THROWS_AS(sample(DefectModel{1.5, 7}, 4), std::invalid_argument);
}

TEST_CASE("defect fraction lands in the 3-sigma binomial interval") {
    const int n = 100000;
    const double beta = 0.1;
    ChannelState s = sample(DefectModel{beta, 12345}, n);
    double frac = static_cast<double>(s.defect_count()) / n;
    CHECK(std::abs(frac - beta) < 3 * std::sqrt(beta * (1 - beta) / n));
}

TEST_CASE("sampling is deterministic per seed") {
    CHECK(sample(DefectModel{0.25, 99}, 64) == sample(DefectModel{0.25, 99}, 64));
    CHECK(!(sample(DefectModel{0.25, 99}, 64) == sample(DefectModel{0.25, 100}, 64)));
}

TEST_CASE("enumerate_states yields each state exactly once") {
    StateEnumerator e21(2, 1);
    REQUIRE(e21.count() == 4);
    std::set<std::string> got;
    for (auto s : e21) got.insert(s.to_string());
    CHECK(got == std::set<std::string>{"0*", "1*", "*0", "*1"});

    CHECK(StateEnumerator(3, 3).count() == 8);

    StateEnumerator e42(4, 2);
    CHECK(e42.count() == 24);  // choose(4,2) * 4, counted against the closed form
    std::set<std::string> distinct;
    for (auto s : e42) {
        CHECK(s.defect_count() == 2);
        distinct.insert(s.to_string());
    }
    CHECK(distinct.size() == 24);
}

TEST_CASE("enumerate_states respects the cap") {
    CHECK_THROWS_AS(StateEnumerator(64, 32), CapacityError);
    CHECK_THROWS_AS(StateEnumerator(8, 2, 4), CapacityError);  // 112 > 2^4
}

TEST_CASE("sample_exact places exactly t defects") {
    SplitMix64 rng(51);
    for (int iter = 0; iter < 50; ++iter) {
        int n = 2 + static_cast<int>(rng.next_below(20));
        int t = static_cast<int>(rng.next_below(n + 1));
        ChannelState s = sample_exact(rng, n, t);
        CHECK(s.defect_count() == t);
    }
}

TEST_CASE("binomial coefficients are exact") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(7, 3) == 35);
    CHECK(binomial(10, 2) == 45);
    CHECK(binomial(64, 32) == 1832624140942590534ULL);
    CHECK(binomial(5, 7) == 0);
}
