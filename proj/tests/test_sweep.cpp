#include "hurwitz/errors.hpp"
#include "hurwitz/format.hpp"
#include "hurwitz/sweep.hpp"
#include "hurwitz/zigzag.hpp"

#include "support.hpp"

#include <sstream>

using namespace hurwitz;

TEST_CASE("variants") {
    CHECK(parse_variant("ones") == SweepVariant::Ones);
    CHECK(parse_variant("mixed") == SweepVariant::Mixed);
    CHECK(parse_variant("twos") == SweepVariant::Twos);
    CHECK_THROWS_AS(parse_variant("threes"), ParseError);
    CHECK(variant_exponent(SweepVariant::Ones) == 4);
    CHECK(variant_exponent(SweepVariant::Mixed) == 3);
    CHECK(variant_exponent(SweepVariant::Twos) == 2);
    CHECK(padded({2, 1}, {2, 1}, 1, SweepVariant::Mixed) ==
          std::pair<Partition, Partition>{{2, 2, 1}, {2, 1, 1, 1}});
}

TEST_CASE("single row sweep of (3) -> (1,1,1)") {
    const auto result = sweep(0, {3}, {1, 1, 1}, 0, SweepVariant::Ones);
    REQUIRE(result.rows.size() == 1);
    CHECK(result.rows[0].m == 0);
    CHECK(result.rows[0].z == 1);
    CHECK(result.rows[0].h_complex == Rational(1));
    CHECK_FALSE(result.truncated);
}

TEST_CASE("sweep rows agree with direct evaluation") {
    const auto result = sweep(0, {2, 1}, {2, 1}, 2, SweepVariant::Ones);
    REQUIRE(result.rows.size() == 3);
    for (const auto& row : result.rows) {
        const auto [l, m] = padded({2, 1}, {2, 1}, row.m, SweepVariant::Ones);
        CHECK(row.z == zigzag_number(0, l, m));
        CHECK(row.h_complex == hurwitz_complex(0, l, m));
        const auto [l2, m2] = padded({2, 1}, {2, 1}, row.m, SweepVariant::Twos);
        CHECK(row.z_dblprime == zigzag_number(0, l2, m2));
    }
    CHECK(result.rows[1].z >= result.rows[0].z);
    CHECK(sweep_violations(result).empty());
}

TEST_CASE("sweep rows satisfy z <= h and parity") {
    for (auto v : {SweepVariant::Ones, SweepVariant::Mixed, SweepVariant::Twos}) {
        const auto result = sweep(0, {3}, {1, 1, 1}, 2, v);
        for (const auto& row : result.rows) {
            CHECK(Rational(result.z_of(row)) <= result.h_of(row));
            CHECK(same_parity(result.z_of(row), result.h_of(row).numerator()));
        }
        CHECK(sweep_violations(result).empty());
    }
}

TEST_CASE("a cap truncates the sweep") {
    const auto result = sweep(0, {2, 1}, {2, 1}, 3, SweepVariant::Ones, {5, 16});
    CHECK(result.truncated);
    CHECK(result.rows.size() == 2);
}

TEST_CASE("discover_m0") {
    CHECK(discover_m0({1, 1, 1}, 4) == 1);
    CHECK(discover_m0({1, 1, 16}, 4) == 0);
    CHECK(discover_m0({1, 0, 16}, 4) == 1);
    CHECK(discover_m0({0, 0, 0, 0}, 2) == 3);
}

TEST_CASE("csv output") {
    const auto result = sweep(0, {3}, {1, 1, 1}, 0, SweepVariant::Ones);
    const std::string csv = sweep_csv(result);
    CHECK(csv == "m,z,z_prime,z_dblprime,h_complex,h_prime,h_dblprime,lower_bound,runtime_ms\n"
                 "0,1,1,1,1/1,1/1,1/1,1,\n");
    CHECK(sweep_csv(result) == sweep_csv(sweep(0, {3}, {1, 1, 1}, 0, SweepVariant::Ones)));
}

TEST_CASE("cover record") {
    const auto c = enumerate_covers(0, {3}, {1, 1, 1}).front();
    CHECK(cover_record(c) ==
          "cover\ngenus 0\nvertices 0 1\nedge 3 -inf 0\nedge 2 0 1\nedge 1 0 +inf\nedge 1 1 +inf\n"
          "edge 1 1 +inf\naut 2\nmult_complex 1/1\nend\n");
    const auto j = cover_json(c);
    CHECK(j["aut"] == "2");
    CHECK(j["edges"].size() == 5);
    CHECK(cover_dot(c).find("digraph cover") == 0);
}

TEST_CASE("colouring record") {
    const auto c = enumerate_covers(0, {3}, {1, 1, 1}).front();
    const auto rhos = enumerate_colourings(c, SignSplitting::parse("+-"));
    REQUIRE(rhos.size() == 1);
    const std::string text = colouring_record(c, rhos[0]);
    CHECK(text.find("colouring\nt 0 ") == 0);
    CHECK(text.find("mult_real 1\nend\n") != std::string::npos);
    CHECK(colouring_json(c, rhos[0]).contains("mult_real"));
}
