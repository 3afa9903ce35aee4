#include "dyndeg/error.hpp"
#include "dyndeg/polynomial.hpp"

#include <doctest.h>

using namespace dyndeg;

namespace {
const std::vector<std::string> xyz = {"x", "y", "z"};
Polynomial P(const std::string &s) { return parse_polynomial(s, xyz); }
} // namespace

TEST_SUITE("polynomial") {

TEST_CASE("parsing and printing") {
    const Polynomial p = P("x^2 + 2*x*y - 3*z^3 + 7");
    CHECK(p.size() == 4);
    CHECK(p.total_degree() == 3);
    CHECK(p.degree(0) == 2);
    CHECK(P(p.to_string(xyz)) == p);
    CHECK(P("(x+y)^2") == P("x^2+2*x*y+y^2"));
    CHECK(P("-x + x") .is_zero());
    CHECK(P("2*(x+1)") == P("2*x+2"));
    CHECK_THROWS_AS(P("2(x+1)"), InvalidArgument);
    CHECK_THROWS_AS(P("x +"), InvalidArgument);
    CHECK_THROWS_AS(P("w"), InvalidArgument);
    CHECK_THROWS_AS(P("x^-1"), InvalidArgument);
    CHECK_THROWS_AS(P("(x"), InvalidArgument);
}

TEST_CASE("arithmetic") {
    const Polynomial a = P("x + y");
    const Polynomial b = P("x - y");
    CHECK(a * b == P("x^2 - y^2"));
    CHECK(a.pow(3) == P("x^3 + 3*x^2*y + 3*x*y^2 + y^3"));
    CHECK(a + b == P("2*x"));
    CHECK(a - a == Polynomial(3));
    CHECK(-a == P("-x-y"));
    CHECK(P("x^3*y").derivative(0) == P("3*x^2*y"));
    CHECK(a * Integer(0) == Polynomial(3));
}

TEST_CASE("homogeneity and blocks") {
    const Polynomial p = P("x^2*z + y^2*z");
    CHECK(p.homogeneous_in(0, 2));
    CHECK(p.block_degree(0, 2) == 2);
    CHECK(p.block_degree(2, 3) == 1);
    CHECK_FALSE(P("x^2 + y").homogeneous_in(0, 2));
    CHECK(P("x^2*y + x^3*y^2").min_exponents() == Monomial{2, 1, 0});
    CHECK(P("6*x + 4*y").content() == 2);
}

TEST_CASE("substitution composes") {
    const Polynomial p = P("x^2 + y");
    const Polynomial q = p.substitute({P("y + z"), P("x*z"), P("z")});
    CHECK(q == P("y^2 + 2*y*z + z^2 + x*z"));
}

TEST_CASE("exact division") {
    const Polynomial a = P("x^3 - y^3");
    Polynomial q(3);
    CHECK(try_divide(a, P("x - y"), q));
    CHECK(q == P("x^2 + x*y + y^2"));
    CHECK_FALSE(try_divide(a, P("x + y"), q));
    CHECK_THROWS_AS(divide_exact(a, P("x + y")), ComputationError);
    CHECK_THROWS_AS(divide_exact(a, Polynomial(3)), InvalidArgument);
}

TEST_CASE("gcd") {
    const Polynomial f = P("x + y");
    const Polynomial g = P("x - 2*z");
    CHECK(gcd(f * g, f * f) == f);
    CHECK(gcd(f * g * Integer(6), f * Integer(4)) == f * Integer(2));
    CHECK(gcd(P("x^2*y"), P("x*y^3")) == P("x*y"));
    CHECK(gcd(f, g) == P("1"));
    CHECK(gcd(Polynomial(3), g) == g);
    CHECK(gcd(-f, -f) == f);
    // a common factor hidden inside larger products
    const Polynomial h = P("x*y + z^2 + 3");
    const Polynomial u = P("x^3 - y*z + 1") * h;
    const Polynomial v = P("y^2 + x*z - 5") * h * P("x - y");
    CHECK(gcd(u, v) == h);
}

TEST_CASE("modular evaluation") {
    const Polynomial p = P("3*x^2 - y + 5");
    CHECK(p.eval_mod({2, 4, 0}, 7) == (12 - 4 + 5) % 7);
}

TEST_CASE("coefficients in a variable") {
    const auto c = P("x^2*y + x*z + y").coefficients_in(0);
    REQUIRE(c.size() == 3);
    CHECK(c.at(2) == P("y"));
    CHECK(c.at(1) == P("z"));
    CHECK(c.at(0) == P("y"));
}

}
