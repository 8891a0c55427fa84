#include "hurwitz/errors.hpp"
#include "hurwitz/real.hpp"
#include "hurwitz/zigzag.hpp"

#include "support.hpp"

#include <algorithm>

using namespace hurwitz;
using test_support::cover_with_encoding;
using test_support::for_each_type;

namespace {

int brute_force_bends(long k, const Partition& plus, const Partition& minus) {
    std::vector<long> steps;
    for (int p : plus) steps.push_back(p);
    for (int p : minus) steps.push_back(-p);
    std::sort(steps.begin(), steps.end());
    int best = 0;
    do {
        long value = k;
        int changes = 0;
        for (long s : steps) {
            const long next = value + s;
            if ((next > 0) != (value > 0)) ++changes;
            value = next;
        }
        best = std::max(best, changes);
    } while (std::next_permutation(steps.begin(), steps.end()));
    return best;
}

}  // namespace

TEST_CASE("is_zigzag examples") {
    CHECK(is_zigzag(cover_with_encoding(0, {3}, {1, 1, 1}, "g0|r2|-:0:3,0:1:2,0:+:1,1:+:1,1:+:1")));
    CHECK(is_zigzag(cover_with_encoding(0, {2, 1}, {2, 1}, "g0|r2|-:0:1,-:0:2,0:1:3,1:+:1,1:+:2")));
}

TEST_CASE("covers with an even symmetric cycle are not zigzag") {
    int seen = 0;
    for_each_type(5, 6, [&](int g, const Partition& l, const Partition& m) {
        if (excluded_configuration(l, m, g)) return;
        for (const auto& c : enumerate_covers(g, l, m)) {
            const auto cycles = sc(c);
            if (std::any_of(cycles.begin(), cycles.end(), [](const SymmetricFeature& s) { return !s.odd(); })) {
                ++seen;
                CHECK_FALSE(is_zigzag(c));
                CHECK_FALSE(is_zigzag_structural(c));
            }
        }
    });
    CHECK(seen > 0);
}

TEST_CASE("zigzag characterizations agree") {
    for_each_type(5, 6, [](int g, const Partition& l, const Partition& m) {
        if (excluded_configuration(l, m, g)) return;
        for (const auto& c : enumerate_covers(g, l, m)) {
            CAPTURE(c.encoding());
            const bool z = is_zigzag(c);
            CHECK(z == is_zigzag_structural(c));
            CHECK(z == mult_complex(c).is_odd_integer());
        }
    });
}

TEST_CASE("zigzag_number examples") {
    CHECK(zigzag_number(0, {3}, {1, 1, 1}) == 1);
    CHECK(zigzag_number(0, {2, 1}, {2, 1}) == 2);
    CHECK(zigzag_number(0, {5, 3, 1}, {5, 3, 1}) == 0);
    CHECK_THROWS_AS(zigzag_number(0, {2}, {1, 1}), ExcludedConfiguration);
}

TEST_CASE("zigzag sweep equals filtered enumeration") {
    for_each_type(5, 6, [](int g, const Partition& l, const Partition& m) {
        if (excluded_configuration(l, m, g)) return;
        CAPTURE(g);
        CAPTURE(l.str());
        CAPTURE(m.str());
        const BigInt z = zigzag_number(g, l, m);
        CHECK(z == zigzag_number_by_enumeration(g, l, m));
        CHECK(z == static_cast<long>(enumerate_zigzag_covers(g, l, m).size()));
    });
}

TEST_CASE("existence predicate examples") {
    CHECK(sufficient_condition({3}, {1, 1, 1}));
    CHECK(zigzag_exists(0, {3}, {1, 1, 1}));
    CHECK_FALSE(zigzag_exists(0, {5, 3, 1}, {5, 3, 1}));
    CHECK_FALSE(zigzag_exists(2, {4, 4}, {8}));
}

TEST_CASE("existence predicate matches the zigzag count") {
    for_each_type(6, 100, [](int g, const Partition& l, const Partition& m) {
        if (excluded_configuration(l, m, g)) return;
        CAPTURE(g);
        CAPTURE(l.str());
        CAPTURE(m.str());
        CHECK(zigzag_exists(g, l, m) == (zigzag_number(g, l, m) > 0));
    }, 2);
}

TEST_CASE("bends examples") {
    CHECK(bends(5, {}, {}) == 0);
    CHECK(bends(1, {2}, {2}) == 2);
    CHECK(bends(1, {2, 2}, {2, 2}) == 4);
    CHECK_THROWS_AS(bends(2, {2}, {2}), HypothesisViolated);
    CHECK_THROWS_AS(bends(1, {3}, {2}), HypothesisViolated);
}

TEST_CASE("bends against brute force") {
    for (int n = 0; n <= 8; n += 2) {
        for (const auto& a : partitions_of(n / 2)) {
            for (int m = 0; m <= 8; m += 2) {
                for (const auto& b : partitions_of(m / 2)) {
                    for (long k : {1L, 3L, 5L, -1L}) {
                        CHECK(bends(k, doubled(a), doubled(b)) == brute_force_bends(k, doubled(a), doubled(b)));
                    }
                }
            }
        }
    }
}

TEST_CASE("lower bound examples") {
    const auto one = lower_bound_detail(0, {3}, {1, 1, 1});
    CHECK(one.value == 1);
    const auto two = lower_bound_detail(0, {2, 1}, {2, 1});
    CHECK(two.value == 1);
    CHECK(two.which == 1);
    CHECK(two.k == 1);
    CHECK(two.bends == 2);
    CHECK_THROWS_AS(lower_bound(0, {5, 3, 1}, {5, 3, 1}), HypothesisViolated);
}

TEST_CASE("lower bound never exceeds the zigzag count") {
    for_each_type(6, 100, [](int g, const Partition& l, const Partition& m) {
        if (excluded_configuration(l, m, g) || !lower_bound_applies(g, l, m)) return;
        CAPTURE(g);
        CAPTURE(l.str());
        CAPTURE(m.str());
        CHECK(lower_bound(g, l, m) <= zigzag_number(g, l, m));
    }, 2);
}

TEST_CASE("unmixed ordering count") {
    CHECK(unmixed_ordering_count({}) == 1);
    ZigzagStats s;
    s.a_l = 2;
    s.a_r = 1;
    s.b_l = 1;
    s.b_r = 1;
    CHECK(unmixed_ordering_count(s) == 2);
}

TEST_CASE("stats of the (3) -> (1,1,1) cover") {
    const auto c = cover_with_encoding(0, {3}, {1, 1, 1}, "g0|r2|-:0:3,0:1:2,0:+:1,1:+:1,1:+:1");
    ZigzagStats expected;
    expected.a_r = 1;
    expected.c = 1;
    CHECK(zigzag_stats(c) == expected);
}

TEST_CASE("zigzag_stats rejects other covers") {
    for (const auto& c : enumerate_covers(0, {4}, {2, 1, 1})) {
        if (!is_zigzag(c)) CHECK_THROWS_AS(zigzag_stats(c), HypothesisViolated);
    }
}

TEST_CASE("witness examples") {
    const auto w = construct_zigzag_witness(0, {3}, {1, 1, 1});
    CHECK(w == enumerate_covers(0, {3}, {1, 1, 1}).front());
    const auto loop = construct_zigzag_witness(1, {2, 2}, {1, 1, 1, 1});
    CHECK(loop.genus() == 1);
    CHECK(cover_violations(loop, {2, 2}, {1, 1, 1, 1}, 1).empty());
    CHECK(is_zigzag(loop));
    CHECK_THROWS_AS(construct_zigzag_witness(0, {5, 3, 1}, {5, 3, 1}), HypothesisViolated);
}

TEST_CASE("witnesses are enumerated zigzag covers") {
    for_each_type(6, 7, [](int g, const Partition& l, const Partition& m) {
        if (excluded_configuration(l, m, g) || !sufficient_condition(l, m)) return;
        CAPTURE(g);
        CAPTURE(l.str());
        CAPTURE(m.str());
        const auto w = construct_zigzag_witness(g, l, m);
        CHECK(cover_violations(w, l, m, g).empty());
        CHECK(is_zigzag(w));
        const auto covers = enumerate_zigzag_covers(g, l, m);
        CHECK(std::binary_search(covers.begin(), covers.end(), w));
        CHECK(unmixed_ordering_count(zigzag_stats(w)) <= zigzag_number(g, l, m));
    }, 2);
}
