#include "dyndeg/error.hpp"
#include "dyndeg/monomial.hpp"
#include "dyndeg/oracle.hpp"

#include <doctest.h>

#include <cmath>

using namespace dyndeg;

TEST_SUITE("oracle") {

TEST_CASE("characteristic polynomial") {
    // t^2 - 3t + 1, ascending coefficients
    CHECK(characteristic_polynomial(IntMatrix{{2, 1}, {1, 1}}) == std::vector<Integer>{1, -3, 1});
    const auto c = characteristic_polynomial(IntMatrix{{2, 0, 0}, {1, 3, 0}, {4, 1, -1}});
    CHECK(c == std::vector<Integer>{6, 1, -4, 1}); // (t-2)(t-3)(t+1)
}

TEST_CASE("square-free factorization") {
    // (t-1)^2 (t-2) = t^3 - 4t^2 + 5t - 2
    const auto f = squarefree_factors({-2, 5, -4, 1});
    REQUIRE(f.size() == 2);
    CHECK(f[0].second == 1);
    CHECK(f[0].first == std::vector<Integer>{-2, 1});
    CHECK(f[1].second == 2);
    CHECK(f[1].first == std::vector<Integer>{-1, 1});
}

TEST_CASE("roots") {
    const auto r = polynomial_roots({1, -3, 1});
    REQUIRE(r.size() == 2);
    std::vector<double> m{std::abs(static_cast<std::complex<double>>(r[0])),
                          std::abs(static_cast<std::complex<double>>(r[1]))};
    std::sort(m.begin(), m.end());
    CHECK(m[1] == doctest::Approx((3 + std::sqrt(5.0)) / 2).epsilon(1e-12));
    CHECK(m[0] == doctest::Approx((3 - std::sqrt(5.0)) / 2).epsilon(1e-12));
    // t^2 + 1 has complex roots of modulus one; repeated roots survive
    CHECK(polynomial_roots({1, 0, 1}).size() == 2);
    CHECK(polynomial_roots({1, -2, 1}).size() == 2);
}

TEST_CASE("eigen degrees") {
    const EigenDegrees e = eigen_degrees(IntMatrix{{2, 1}, {1, 1}});
    REQUIRE(e.degrees.size() == 3);
    CHECK(e.degrees[0] == 1.0);
    CHECK(e.degrees[1] == doctest::Approx(2.6180339887).epsilon(1e-10));
    CHECK(e.degrees[2] == doctest::Approx(1.0).epsilon(1e-10));
    const EigenDegrees id = eigen_degrees(IntMatrix::identity(4));
    for (double d : id.degrees)
        CHECK(d == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(eigen_degrees(IntMatrix{{1, 2}, {2, 4}}), InvalidArgument);
    // rotation-like matrices: complex eigenvalues of modulus sqrt(5)
    const EigenDegrees rot = eigen_degrees(IntMatrix{{1, -2}, {2, 1}});
    CHECK(rot.degrees[1] == doctest::Approx(std::sqrt(5.0)).epsilon(1e-10));
    CHECK(rot.degrees[2] == doctest::Approx(5.0).epsilon(1e-10));
}

TEST_CASE("eigen product formula on block-triangular matrices") {
    FiberedSampler sampler(99);
    for (int draw = 0; draw < 30; ++draw) {
        const auto s = sampler.next(2, 6);
        const MonomialMap f(s.a, s.l);
        const auto df = eigen_degrees(s.a).degrees;
        const auto dg = eigen_degrees(f.base_block()).degrees;
        const auto dc = eigen_degrees(f.fiber_block()).degrees;
        const int k = f.dim();
        for (int p = 0; p <= k; ++p) {
            double best = 0;
            for (int j = std::max(0, p - (k - s.l)); j <= std::min(p, s.l); ++j)
                best = std::max(best, dg[static_cast<std::size_t>(j)] * dc[static_cast<std::size_t>(p - j)]);
            CHECK(df[static_cast<std::size_t>(p)] == doctest::Approx(best).epsilon(1e-9));
        }
        CHECK(df.back() ==
              doctest::Approx(std::abs(determinant(s.a).get_d())).epsilon(1e-8));
    }
}

TEST_CASE("ring expansion oracle") {
    for (const auto &factors : std::vector<std::vector<int>>{{1, 1, 1}, {2, 1}, {3}, {1, 2, 2}}) {
        const Space s(factors);
        for (int p = 0; p <= s.dim(); ++p)
            CHECK(ring_expand_oracle(s, std::vector<GeneratorSum>(static_cast<std::size_t>(p),
                                                                  omega_terms(s))) ==
                  kaehler_power(s, p));
    }
    const Space s({1, 2});
    const CohClass a = CohClass::generator(s, 0) * Integer(2) + CohClass::generator(s, 1);
    CHECK(ring_expand_oracle(s, {terms_of(a), terms_of(a)}) == mul(a, a));
    CHECK_THROWS_AS(ring_expand_oracle(Space::lines(6), std::vector<GeneratorSum>(6, omega_terms(Space::lines(6))), 100),
                    ComputationError);
}

TEST_CASE("compound entries are minors") {
    const IntMatrix a{{1, 2, -1, 0}, {0, 3, 1, 1}, {2, -1, 0, 4}, {1, 1, 1, 1}};
    for (int p = 0; p <= 4; ++p)
        CHECK(compound_vs_minors(a, p, 3));
}

TEST_CASE("sampler is deterministic and fibered") {
    FiberedSampler a(123), b(123);
    for (int i = 0; i < 50; ++i) {
        const auto x = a.next(2, 6);
        const auto y = b.next(2, 6);
        CHECK(x.a == y.a);
        CHECK(x.l == y.l);
        CHECK(validate_fibration(x.a, x.l));
        CHECK(determinant(x.a) != 0);
        for (std::size_t r = 0; r < x.a.rows(); ++r)
            for (std::size_t c = 0; c < x.a.cols(); ++c)
                CHECK(abs(x.a(r, c)) <= 5);
    }
    CHECK(a.skipped() == b.skipped());
    CHECK(a.log() == b.log());
}

}
