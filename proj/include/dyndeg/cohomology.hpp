#pragma once

// Truncated multigraded intersection ring of a multiprojective space
//
//   H*(P^{n_1} x ... x P^{n_m}) = Z[h_1, ..., h_m] / (h_i^{n_i + 1}),
//
// with h_i the pullback of the hyperplane class of the i-th factor. Classes
// are stored in the monomial basis h^e = h_1^{e_1} ... h_m^{e_m}; the top
// monomial h_1^{n_1} ... h_m^{n_m} integrates to 1.

#include "dyndeg/integer.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dyndeg {

/// P^{n_1} x ... x P^{n_m}, optionally fibered over the product of its first
/// `base_factors` factors by the coordinate projection.
class Space {
  public:
    explicit Space(std::vector<int> factors, std::optional<int> base_factors = std::nullopt);

    /// (P^1)^k, optionally fibered over (P^1)^l.
    static Space lines(int k, std::optional<int> l = std::nullopt);

    const std::vector<int> &factors() const { return factors_; }
    int num_factors() const { return static_cast<int>(factors_.size()); }
    /// Total dimension k.
    int dim() const { return dim_; }

    bool fibered() const { return base_factors_.has_value(); }
    /// Number of leading factors forming the base; throws FibrationError if unset.
    int base_factors() const;
    /// Dimension of the base Y (sum of the base factor dimensions).
    int base_dim() const;
    int fiber_dim() const { return dim() - base_dim(); }

    Space without_fibration() const { return Space(factors_); }
    Space with_fibration(int l) const { return Space(factors_, l); }
    /// The base Y itself as an unfibered space.
    Space base_space() const;

    /// Same underlying product (fibration metadata ignored).
    bool same_product(const Space &other) const { return factors_ == other.factors_; }
    bool operator==(const Space &other) const = default;

    std::string describe() const;

  private:
    std::vector<int> factors_;
    std::optional<int> base_factors_;
    int dim_ = 0;
};

using Exponent = std::vector<int>;

/// A class of degree p (an element of H^{p,p}) with exact integer coefficients.
class CohClass {
  public:
    CohClass(Space space, int degree);

    static CohClass unit(const Space &space);
    /// The generator h_i (0-based factor index).
    static CohClass generator(const Space &space, int factor);

    const Space &space() const { return space_; }
    int degree() const { return degree_; }
    const std::map<Exponent, Integer> &coefficients() const { return coeffs_; }

    Integer coefficient(const Exponent &e) const;
    /// Adds c * h^e; e must be a valid exponent of this degree.
    void add_term(const Exponent &e, const Integer &c);

    bool is_zero() const { return coeffs_.empty(); }
    /// All coefficients nonnegative.
    bool is_effective() const;

    CohClass &operator+=(const CohClass &other);
    CohClass operator+(const CohClass &other) const;
    CohClass operator*(const Integer &scalar) const;
    /// Same space and coefficients; zero classes compare equal across degrees.
    bool operator==(const CohClass &other) const;

    std::string to_string() const;

  private:
    void check_exponent(const Exponent &e) const;

    Space space_;
    int degree_;
    std::map<Exponent, Integer> coeffs_;
};

/// Cup product with truncation h_i^{n_i+1} = 0.
CohClass mul(const CohClass &a, const CohClass &b);

/// omega_X^p with omega_X = h_1 + ... + h_m.
CohClass kaehler_power(const Space &space, int p);

/// Top-degree intersection pairing; degrees must sum to dim.
Integer pair(const CohClass &a, const CohClass &b);

/// <c, omega_X^{k-p}>.
Integer mass(const CohClass &c);

/// pi^*(omega_Y^j) where omega_Y is the sum of the base generators.
/// Rejects j > dim Y instead of returning the zero class.
CohClass base_pullback_power(const Space &space, int j);

/// alpha_j(c) = <c, pi^*(omega_Y^{l-j}) omega_X^{k-l-p+j}>, admissible for
/// max(0, p-k+l) <= j <= min(p, l) with l = dim Y.
Integer alpha(const CohClass &c, int j);

/// Admissible range [lo, hi] of j for alpha on a class of degree p.
std::pair<int, int> alpha_range(const Space &space, int p);

/// All exponent vectors of total degree p within the factor bounds, in
/// lexicographic order.
std::vector<Exponent> basis(const Space &space, int p);

} // namespace dyndeg
