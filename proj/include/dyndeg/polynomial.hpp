#pragma once

#include "dyndeg/integer.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace dyndeg {

using Monomial = std::vector<int>;

/// Sparse multivariate polynomial over Z. Terms are kept in lexicographically
/// descending order of exponent vectors, so begin() is the leading term.
class Polynomial {
  public:
    using TermMap = std::map<Monomial, Integer, std::greater<Monomial>>;

    explicit Polynomial(int nvars = 0) : nvars_(nvars) {}

    static Polynomial constant(int nvars, const Integer &c);
    static Polynomial variable(int nvars, int v);
    static Polynomial monomial(Monomial e, const Integer &c);

    int nvars() const { return nvars_; }
    const TermMap &terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;

    void add_term(const Monomial &e, const Integer &c);

    const Monomial &leading_monomial() const;
    const Integer &leading_coeff() const;

    int degree(int v) const;
    int total_degree() const;
    /// Degree in the variable block [lo, hi); -1 for the zero polynomial.
    int block_degree(int lo, int hi) const;
    /// True if every term has the same degree in [lo, hi).
    bool homogeneous_in(int lo, int hi) const;

    /// Componentwise minimum exponent (the largest monomial divisor).
    Monomial min_exponents() const;
    /// Nonnegative gcd of the coefficients.
    Integer content() const;

    Polynomial operator+(const Polynomial &o) const;
    Polynomial operator-(const Polynomial &o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial &o) const;
    Polynomial operator*(const Integer &c) const;
    Polynomial &operator+=(const Polynomial &o);
    Polynomial &operator-=(const Polynomial &o);
    bool operator==(const Polynomial &o) const = default;

    Polynomial pow(unsigned e) const;
    Polynomial derivative(int v) const;

    /// Value at `point` modulo `prime` (prime < 2^63).
    std::uint64_t eval_mod(const std::vector<std::uint64_t> &point, std::uint64_t prime) const;

    /// Replace variable v by images[v]; all images share one variable count.
    Polynomial substitute(const std::vector<Polynomial> &images) const;

    /// Divide every coefficient by c (must be exact).
    Polynomial divide_integer(const Integer &c) const;
    /// Divide by the monomial x^e (must be exact).
    Polynomial divide_monomial(const Monomial &e) const;

    /// Coefficients with respect to variable v: degree -> coefficient (with
    /// the v exponent cleared).
    std::map<int, Polynomial> coefficients_in(int v) const;

    std::string to_string(const std::vector<std::string> &names) const;

  private:
    void check_vars(const Polynomial &o) const;

    int nvars_;
    TermMap terms_;
};

/// Exact quotient a / b; throws ComputationError if b does not divide a.
Polynomial divide_exact(const Polynomial &a, const Polynomial &b);
/// a / b if b divides a exactly.
bool try_divide(const Polynomial &a, const Polynomial &b, Polynomial &quotient);

/// Greatest common divisor over Z[x], normalized to a positive leading
/// coefficient. gcd(0, 0) = 0.
Polynomial gcd(const Polynomial &a, const Polynomial &b);

/// Parses expressions such as "3*x0^2*y1 - (x1 + y0)^2" over the given
/// variable names. Throws InvalidArgument on malformed input.
Polynomial parse_polynomial(const std::string &text, const std::vector<std::string> &names);

} // namespace dyndeg
