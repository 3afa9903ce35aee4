#include "dyndeg/error.hpp"
#include "dyndeg/rational.hpp"

#include <doctest.h>

using namespace dyndeg;

namespace {
RationalMap cremona() { return RationalMap::parse(Space({2}), {{"x1*x2", "x0*x2", "x0*x1"}}); }
RationalMap skew() {
    return RationalMap::parse(Space({1, 1}, 1),
                              {{"x0^3", "x1^3"}, {"x0*y0^2", "x0*y1^2 + x1*y0^2"}});
}
} // namespace

TEST_SUITE("rational") {

TEST_CASE("variable names") {
    CHECK(variable_names(Space({1, 2})) == std::vector<std::string>{"x0", "x1", "y0", "y1", "y2"});
    CHECK(variable_offsets(Space({1, 2})) == std::vector<int>{0, 2, 5});
}

TEST_CASE("construction validates shape and homogeneity") {
    const Space p2({2});
    CHECK_THROWS_AS(RationalMap::parse(p2, {{"x0", "x1"}}), InvalidArgument);
    CHECK_THROWS_AS(RationalMap::parse(p2, {{"x0^2", "x1", "x2"}}), InvalidArgument);
    CHECK_THROWS_AS(RationalMap::parse(p2, {{"x0^2+x1", "x1^2", "x2^2"}}), InvalidArgument);
    CHECK_THROWS_AS(RationalMap::parse(p2, {{"0", "0", "0"}}), DegenerateComposition);
    CHECK_THROWS_AS(RationalMap::parse(Space({1, 1}), {{"x0", "x1"}}), InvalidArgument);
}

TEST_CASE("common factors are removed") {
    const RationalMap f = RationalMap::parse(Space({2}), {{"x0^2", "x0*x1", "x0*x2"}});
    CHECK(f == RationalMap::identity(Space({2})));
    CHECK(f.multidegrees() == DegreeMatrix{{1}});
}

TEST_CASE("Cremona involution") {
    const RationalMap s = cremona();
    CHECK(compose(s, s) == RationalMap::identity(Space({2})));
    const IterateResult it = iterate_multidegrees(s, 6);
    REQUIRE(it.reached == 6);
    for (int n = 1; n <= 6; ++n)
        CHECK(it.lambda1[static_cast<std::size_t>(n)] == (n % 2 ? 2 : 1));
    CHECK(check_dominance(s).full_rank);
}

TEST_CASE("degree multiplicativity on P^1") {
    for (const auto &comps : std::vector<std::vector<std::string>>{
             {"x0^2 - x1^2", "x0*x1"}, {"x0^3 + x1^3", "x0*x1^2"}, {"x0^2", "x1^2 + x0*x1"}}) {
        const RationalMap g = RationalMap::parse(Space({1}), {comps});
        const int d = g.multidegrees()[0][0];
        const IterateResult it = iterate_multidegrees(g, 5);
        REQUIRE(it.reached == 5);
        for (int n = 1; n <= 5; ++n)
            CHECK(it.degrees[static_cast<std::size_t>(n)][0][0] ==
                  static_cast<int>(ipow(d, static_cast<unsigned>(n)).get_si()));
    }
}

TEST_CASE("skew product (x^3, y^2 + x)") {
    const RationalMap f = skew();
    CHECK(validate_skew(f));
    CHECK(f.base_map() == RationalMap::parse(Space({1}), {{"x0^3", "x1^3"}}));
    const IterateResult it = iterate_multidegrees(f, 4);
    CHECK(it.lambda1[1] == 6);
    CHECK(it.lambda1[2] == 16);
    for (int n = 1; n <= 4; ++n) {
        const Integer expect = ipow(3, n) + ipow(3, n - 1) + ipow(2, n);
        CHECK(it.lambda1[static_cast<std::size_t>(n)] == expect);
    }
    const auto fib = fiber_degree_sequence(f, it);
    for (int n = 0; n <= 4; ++n)
        CHECK(fib[static_cast<std::size_t>(n)] == ipow(2, static_cast<unsigned>(n)));
    CHECK(fiber_degree(f, 3) == 8);
}

TEST_CASE("non-skew maps are rejected") {
    const RationalMap f = RationalMap::parse(Space({1, 1}, 1), {{"x0*y0", "x1*y1"}, {"y0", "y1"}});
    CHECK_FALSE(validate_skew(f));
    CHECK_THROWS_AS(f.base_map(), FibrationError);
    CHECK_THROWS_AS(fiber_degree(f, 1), FibrationError);
    const RationalMap plain = RationalMap::parse(Space({1, 1}), {{"x0", "x1"}, {"y0", "y1"}});
    CHECK_THROWS_AS(validate_skew(plain), FibrationError);
}

TEST_CASE("degree cap truncates iteration") {
    const RationalMap g = RationalMap::parse(Space({1}), {{"x0^3", "x1^3 + x0^2*x1"}});
    const IterateResult it = iterate_multidegrees(g, 10, 100);
    CHECK(it.truncated);
    CHECK(it.reached == 4);
    CHECK_FALSE(it.truncation_reason.empty());
    CHECK_THROWS_AS(fiber_degree(skew(), 10, 50), ComputationError);
}

TEST_CASE("pullback of omega from a degree matrix") {
    // bidegree (a, b) in the two factors: class a h1 + b h2
    const CohClass c = pullback_omega(Space({1, 1}), {{3, 0}, {1, 2}});
    CHECK(c.coefficient({1, 0}) == 4);
    CHECK(c.coefficient({0, 1}) == 2);
    CHECK(mass(c) == 6);
}

TEST_CASE("dominance") {
    const RationalMap constant = RationalMap::parse(Space({1, 1}), {{"x0", "x1"}, {"x0", "x1"}});
    const DominanceCheck d = check_dominance(constant);
    CHECK_FALSE(d.full_rank);
    CHECK(check_dominance(skew()).full_rank);
}

TEST_CASE("composition order f o g") {
    const Space s({1});
    const RationalMap f = RationalMap::parse(s, {{"x0^2", "x1^2"}});
    const RationalMap g = RationalMap::parse(s, {{"x0 + x1", "x1"}});
    CHECK(compose(f, g) == RationalMap::parse(s, {{"x0^2 + 2*x0*x1 + x1^2", "x1^2"}}));
    CHECK(compose(g, f) == RationalMap::parse(s, {{"x0^2 + x1^2", "x1^2"}}));
}

}
