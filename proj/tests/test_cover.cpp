#include "hurwitz/cover.hpp"
#include "hurwitz/enumerate.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/oracle.hpp"

#include "support.hpp"

using namespace hurwitz;
using test_support::cover_with_encoding;
using test_support::for_each_type;

namespace {

const char* const kTripleSplit = "g0|r2|-:0:3,0:1:2,0:+:1,1:+:1,1:+:1";
const char* const kJoinSplit = "g0|r2|-:0:1,-:0:2,0:1:3,1:+:1,1:+:2";
const char* const kSplitJoin = "g0|r2|-:0:2,-:1:1,0:1:1,0:+:1,1:+:2";

}  // namespace

TEST_CASE("(3) -> (1,1,1) has exactly one cover") {
    const auto covers = enumerate_covers(0, {3}, {1, 1, 1});
    REQUIRE(covers.size() == 1);
    const auto& c = covers.front();
    CHECK(c.encoding() == kTripleSplit);
    CHECK(scf(c).size() == 1);
    CHECK(sc(c).empty());
    CHECK(scf(c).front().kind == FeatureKind::Fork);
    CHECK(scf(c).front().weight == 1);
    CHECK(automorphism_count(c) == 2);
    CHECK(mult_complex(c) == Rational(1));
    CHECK(even_inner_edges(c).size() == 1);
}

TEST_CASE("(2,1) -> (2,1) has the join-split and split-join covers") {
    const auto covers = enumerate_covers(0, {2, 1}, {2, 1});
    REQUIRE(covers.size() == 2);
    CHECK(covers[0].encoding() == kJoinSplit);
    CHECK(covers[1].encoding() == kSplitJoin);
    CHECK(mult_complex(covers[0]) == Rational(3));
    CHECK(mult_complex(covers[1]) == Rational(1));
    for (const auto& c : covers) {
        CHECK(symmetric_features(c).empty());
        CHECK(automorphism_count(c) == 1);
    }
}

TEST_CASE("a split pair rejoining in genus 1 is an odd symmetric cycle") {
    bool found = false;
    for (const auto& c : enumerate_covers(1, {1, 1}, {1, 1})) {
        const auto cycles = sc(c);
        if (cycles.size() == 1 && cycles.front().weight == 1) found = true;
    }
    CHECK(found);
}

TEST_CASE("automorphisms of a cycle plus an even fork") {
    const TropicalCover c(1, 3,
                          {{kMinusInfinity, 0, 4}, {0, 1, 2}, {0, 1, 2}, {1, 2, 4}, {2, kPlusInfinity, 2},
                           {2, kPlusInfinity, 2}});
    CHECK(cover_violations(c, {4}, {2, 2}, 1).empty());
    CHECK(symmetric_features(c).size() == 2);
    CHECK(scf(c).size() == 1);
    CHECK(automorphism_count(c) == 4);
    CHECK(mult_complex(c) == Rational(4));
}

TEST_CASE("a tripod has no inner edges") {
    const auto covers = enumerate_covers(0, {2}, {1, 1});
    REQUIRE(covers.size() == 1);
    CHECK(mult_complex(covers.front()) == Rational(1, 2));
    CHECK(automorphism_count(covers.front()) == 2);
}

TEST_CASE("cover_violations reports malformed graphs") {
    const TropicalCover unbalanced(0, 1, {{kMinusInfinity, 0, 2}, {0, kPlusInfinity, 1}, {0, kPlusInfinity, 2}});
    CHECK_FALSE(cover_violations(unbalanced).empty());
    const TropicalCover two_valent(0, 1, {{kMinusInfinity, 0, 2}, {0, kPlusInfinity, 2}});
    CHECK_FALSE(cover_violations(two_valent).empty());
    const TropicalCover good(0, 1, {{kMinusInfinity, 0, 2}, {0, kPlusInfinity, 1}, {0, kPlusInfinity, 1}});
    CHECK(cover_violations(good).empty());
    CHECK_FALSE(cover_violations(good, {2}, {1, 1}, 1).empty());
}

TEST_CASE("reduce: collapsing the odd fork of (3) -> (1,1,1)") {
    const auto c = cover_with_encoding(0, {3}, {1, 1, 1}, kTripleSplit);
    const auto red = reduce(c, Reduction::Red);
    CHECK(red.encoding() == "g0|r1|-:0:3,0:+:1,0:+:2");
    CHECK(scf(red).empty());
    CHECK(even_inner_edges(red).size() == even_inner_edges(c).size() - scf(c).size());
}

TEST_CASE("reduce leaves covers without symmetric features unchanged") {
    const auto c = cover_with_encoding(0, {2, 1}, {2, 1}, kJoinSplit);
    CHECK(reduce(c, Reduction::Red) == c);
    CHECK(reduce(c, Reduction::RedPrime) == c);
    CHECK(reduce(c, Reduction::RedDoublePrime) == c);
}

TEST_CASE("a single reduction pass can leave a new even symmetric cycle") {
    // Collapsing the weight-1 cycle between vertices 1 and 2 smooths both, so
    // 0 -> 3 becomes a pair of parallel weight-2 edges.
    const std::string code = "g2|r5|-:0:4,0:1:2,0:3:2,1:2:1,1:2:1,2:3:2,3:4:4,4:+:1,4:+:3";
    const auto c = cover_with_encoding(2, {4}, {3, 1}, code);
    const auto red = reduce(c, Reduction::Red);
    CHECK(even_inner_edges(c).size() - scf(c).size() == 3);
    CHECK_FALSE(sc(red).empty());
    CHECK(even_inner_edges(red).size() == 1);
}

TEST_CASE("enumeration properties for small types") {
    for_each_type(4, 6, [](int g, const Partition& l, const Partition& m) {
        CAPTURE(g);
        CAPTURE(l.str());
        CAPTURE(m.str());
        const auto covers = enumerate_covers(g, l, m);
        CHECK(std::is_sorted(covers.begin(), covers.end()));
        CHECK(std::adjacent_find(covers.begin(), covers.end()) == covers.end());
        Rational sum;
        for (const auto& c : covers) {
            CHECK(cover_violations(c, l, m, g).empty());
            CHECK(c.vertex_count() == simple_branch_count(l, m, g));
            sum += mult_complex(c);
        }
        CHECK(hurwitz_complex(g, l, m) == sum);
        CHECK(hurwitz_complex(g, l, m) == hurwitz_complex(g, m, l));
    });
}

TEST_CASE("hurwitz_complex examples") {
    CHECK(hurwitz_complex(0, {2, 1}, {2, 1}) == Rational(4));
    CHECK(hurwitz_complex(0, {3}, {1, 1, 1}) == Rational(1));
    CHECK(hurwitz_complex(0, {1, 1}, {1, 1}) == Rational(1, 2));
}

TEST_CASE("(5,3,1) -> (5,3,1) in genus 0 against the oracle") {
    const Partition l{5, 3, 1};
    const auto covers = enumerate_covers(0, l, l);
    CHECK_FALSE(covers.empty());
    for (const auto& c : covers) CHECK(cover_violations(c, l, l, 0).empty());
    CHECK(hurwitz_complex(0, l, l) == oracle::monodromy_count(0, l, l, {9, 4}));
}

TEST_CASE("search caps") {
    CHECK_THROWS_AS(enumerate_covers(0, {2, 1}, {2, 1}, {2, 16}), CapExceeded);
    CHECK_THROWS_AS(hurwitz_complex(3, {2, 1}, {2, 1}, {12, 6}), CapExceeded);
    CHECK_THROWS_AS(enumerate_covers(0, {2, 1}, {2}, {}), WeightMismatch);
}
