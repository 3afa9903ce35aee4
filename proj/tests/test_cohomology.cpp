#include "dyndeg/cohomology.hpp"
#include "dyndeg/error.hpp"

#include <doctest.h>

using namespace dyndeg;

TEST_SUITE("cohomology") {

TEST_CASE("space validation") {
    CHECK_THROWS_AS(Space({}), InvalidArgument);
    CHECK_THROWS_AS(Space({1, 0}), InvalidArgument);
    CHECK_THROWS_AS(Space({1, 1}, 0), FibrationError);
    CHECK_THROWS_AS(Space({1, 1}, 2), FibrationError);
    const Space s({2, 1, 3}, 2);
    CHECK(s.dim() == 6);
    CHECK(s.base_dim() == 3);
    CHECK(s.fiber_dim() == 3);
    CHECK(s.base_space() == Space({2, 1}));
    CHECK_THROWS_AS(Space({1, 1}).base_dim(), FibrationError);
    CHECK(Space::lines(4, 1).factors() == std::vector<int>{1, 1, 1, 1});
}

TEST_CASE("truncation relations h_i^(n_i+1) = 0") {
    const Space s({1, 2});
    const CohClass h0 = CohClass::generator(s, 0);
    const CohClass h1 = CohClass::generator(s, 1);
    CHECK(mul(h0, h0).is_zero());
    CHECK_FALSE(mul(h1, h1).is_zero());
    CHECK(mul(mul(h1, h1), h1).is_zero());
    CHECK_THROWS_AS(CohClass(s, 1).add_term({2, 0}, 1), InvalidArgument);
    CHECK_THROWS_AS(CohClass(s, 1).add_term({0, 2}, 1), InvalidArgument); // wrong degree
}

TEST_CASE("kaehler powers and masses") {
    // omega^k = k! h_1...h_k on (P^1)^k
    for (int k = 1; k <= 6; ++k) {
        const Space s = Space::lines(k);
        const CohClass top = kaehler_power(s, k);
        CHECK(top.coefficient(Exponent(static_cast<std::size_t>(k), 1)) == factorial(k));
        CHECK(mass(CohClass::unit(s)) == factorial(k));
    }
    // P^2: omega^2 = h^2, volume 1; P^1 x P^2: omega^3 = 3 h1 h2^2
    CHECK(mass(CohClass::unit(Space({2}))) == 1);
    CHECK(kaehler_power(Space({1, 2}), 3).coefficient({1, 2}) == 3);
    CHECK_THROWS_AS(kaehler_power(Space({1, 1}), 3), InvalidArgument);
}

TEST_CASE("pairing uses complementary exponents") {
    const Space s({1, 1});
    const CohClass h0 = CohClass::generator(s, 0);
    const CohClass h1 = CohClass::generator(s, 1);
    CHECK(pair(h0, h1) == 1);
    CHECK(pair(h0, h0) == 0);
    CHECK(pair(kaehler_power(s, 1), kaehler_power(s, 1)) == 2);
    CHECK_THROWS_AS(pair(h0, CohClass::unit(s)), InvalidArgument);
    CHECK_THROWS_AS(pair(h0, CohClass::generator(Space({2}), 0)), InvalidArgument);
}

TEST_CASE("class arithmetic") {
    const Space s({1, 1, 1});
    CohClass a = CohClass::generator(s, 0) + CohClass::generator(s, 2) * Integer(3);
    CHECK(a.coefficient({0, 0, 1}) == 3);
    CHECK(a.is_effective());
    CohClass b = a * Integer(-1);
    CHECK_FALSE(b.is_effective());
    b += a;
    CHECK(b.is_zero());
    CHECK(kaehler_power(s, 1) == CohClass::generator(s, 0) + CohClass::generator(s, 1) +
                                     CohClass::generator(s, 2));
}

TEST_CASE("base pullback powers") {
    const Space s({1, 2, 1}, 2);
    CHECK(base_pullback_power(s, 0) == CohClass::unit(s));
    // omega_Y^3 = 3 h1 h2^2
    CHECK(base_pullback_power(s, 3).coefficient({1, 2, 0}) == 3);
    CHECK_THROWS_AS(base_pullback_power(s, 4), InvalidArgument);
    CHECK_THROWS_AS(base_pullback_power(Space({1, 1}), 1), FibrationError);
}

TEST_CASE("alpha on the Kaehler class of P1 x P1") {
    const Space s({1, 1}, 1);
    const CohClass w = kaehler_power(s, 1);
    const auto [lo, hi] = alpha_range(s, 1);
    CHECK(lo == 0);
    CHECK(hi == 1);
    CHECK(alpha(w, 0) == 1);
    CHECK(alpha(w, 1) == 2);
    CHECK_THROWS_AS(alpha(w, 2), InvalidArgument);
}

TEST_CASE("alpha window bounds") {
    const Space s = Space::lines(5, 2);
    for (int p = 0; p <= 5; ++p) {
        const auto [lo, hi] = alpha_range(s, p);
        CHECK(lo == std::max(0, p - 3));
        CHECK(hi == std::min(p, 2));
    }
}

TEST_CASE("basis sizes") {
    CHECK(basis(Space::lines(4), 2).size() == 6);
    CHECK(basis(Space({2, 2}), 2).size() == 3);
    CHECK(basis(Space({3}), 4).empty());
}

}

TEST_CASE("zero classes compare equal across degrees" * doctest::test_suite("cohomology")) {
    const Space s({1, 1});
    CHECK(CohClass(s, 0) == CohClass(s, 2));
    CHECK_FALSE(CohClass::unit(s) == CohClass::unit(s) * Integer(2));
    CHECK_FALSE(CohClass::unit(s) == kaehler_power(s, 2));
}
