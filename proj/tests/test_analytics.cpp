#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "rebal/analytics.hpp"

using namespace rebal;

namespace {

Rational frac(oracle::Frac f) { return Rational(f.num, f.den); }

}  // namespace

TEST_CASE("closed-form loads at known points")
{
    CHECK(load_scheme1(6, 3) == Rational(7, 5));
    CHECK(load_scheme1(8, 6) == Rational(26, 7));
    CHECK(load_scheme1(15, 3) == Rational(8, 7));
    CHECK(load_scheme2(8, 6) == Rational(22, 7));
    CHECK(corner_load(8, 6) + load_scheme2(8, 6) == Rational(24, 7));
    CHECK(load_scheme2(6, 3) == Rational(3));
    CHECK(load_scheme2(15, 14) == Rational(27, 14));
    CHECK(removal_load(6, 3) == Rational(2));
    CHECK(addition_load(6, 3) == Rational(18, 7));
    CHECK(addition_load(8, 6) == Rational(16, 3));
    CHECK(uncoded_removal_load(10) == Rational(10));
    CHECK(removal_lower_bound(15, 3) == Rational(3, 2));
}

TEST_CASE("closed forms agree with the term-by-term sums")
{
    for (int K = 4; K <= 60; ++K)
        for (int r = 3; r < K; ++r) {
            CHECK(load_scheme1(K, r) == frac(oracle::scheme1_coded(K, r)));
            CHECK(load_scheme1_by_parity(K, r) == load_scheme1(K, r));
            CHECK(load_scheme2(K, r) == frac(oracle::scheme2_coded(K, r)));
        }
    for (int K = 4; K <= 30; ++K) {
        CHECK(load_scheme2(K, K - 1) == Rational(2 * K - 3, K - 1));
        CHECK(removal_lower_bound(K, K - 1) == Rational(K - 1, K - 2));
    }
}

TEST_CASE("threshold values")
{
    CHECK(threshold(15) == 11);
    CHECK(threshold(6) == 5);
    CHECK(threshold(8) == 6);
    CHECK_THROWS_AS(threshold(3), ParamError);
    for (int K = 4; K <= 300; ++K) CHECK(threshold(K) == static_cast<int>(std::ceil((2.0 * K + 2) / 3 - 1e-12)));
    CHECK(load_scheme1(15, 10) < load_scheme2(15, 10));
    CHECK(load_scheme2(15, 11) < load_scheme1(15, 11));
}

TEST_CASE("scheme selection")
{
    CHECK(select_scheme(6, 3) == SchemeChoice::scheme1);
    CHECK(select_scheme(8, 6) == SchemeChoice::scheme2);
    // Exact tie: Scheme 1 is kept.
    CHECK(load_scheme1(4, 3) == load_scheme2(4, 3));
    CHECK(select_scheme(4, 3) == SchemeChoice::scheme1);
}

TEST_CASE("threshold check")
{
    const auto small = verify_claim1(4);
    CHECK(small.pairs_checked == 1);
    CHECK(small.ok());
    const auto big = verify_claim1(200);
    CHECK(big.pairs_checked == 19503);
    CHECK(big.ok());
    // Ties sit at r = (2K+1)/3 for K = 1 mod 3.
    CHECK(big.ties.size() == 66);
    for (const auto& t : big.ties) {
        CHECK(t.K % 3 == 1);
        CHECK(3 * t.r == 2 * t.K + 1);
        CHECK(t.r == threshold(t.K) - 1);
    }
    CHECK_THROWS_AS(verify_claim1(3), ParamError);
}

TEST_CASE("minimum coded load is strictly below the uncoded load")
{
    for (int K = 4; K <= 100; ++K)
        for (int r = 3; r < K; ++r) {
            CHECK(removal_load(K, r) < uncoded_removal_load(r));
            CHECK(removal_lower_bound(K, r) < removal_load(K, r));
        }
}

TEST_CASE("scheme names round-trip")
{
    for (auto c : {SchemeChoice::automatic, SchemeChoice::scheme1, SchemeChoice::scheme2, SchemeChoice::uncoded})
        CHECK(parse_scheme_choice(to_string(c)) == c);
    CHECK_THROWS_AS(parse_scheme_choice("scheme3"), ParamError);
}
