#pragma once

// Rational self-maps of P^{n_1} x ... x P^{n_m} given by multihomogeneous
// integer polynomials. Factor i has homogeneous variables x_{i,0..n_i};
// variables are laid out block after block. Component i is a tuple of n_i + 1
// polynomials of one common multidegree, kept free of common factors.

#include "dyndeg/cohomology.hpp"
#include "dyndeg/integer.hpp"
#include "dyndeg/polynomial.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace dyndeg {

using DegreeMatrix = std::vector<std::vector<int>>;

class RationalMap {
  public:
    /// Validates shape and homogeneity, then reduces every component tuple.
    RationalMap(Space space, std::vector<std::vector<Polynomial>> components);

    static RationalMap identity(const Space &space);

    /// Builds a map from expression strings over variable_names(space).
    static RationalMap parse(const Space &space,
                             const std::vector<std::vector<std::string>> &components);

    const Space &space() const { return space_; }
    const std::vector<std::vector<Polynomial>> &components() const { return components_; }
    int nvars() const;

    /// D[i][j]: degree of component i in the variables of factor j.
    DegreeMatrix multidegrees() const;

    /// The induced map on the base (first l components, base variables only).
    RationalMap base_map() const;

    std::string to_string() const;
    bool operator==(const RationalMap &o) const {
        return space_.same_product(o.space_) && components_ == o.components_;
    }

  private:
    Space space_;
    std::vector<std::vector<Polynomial>> components_;
};

/// Default names: factor blocks use x, y, z, u, v, w, ... with a numeric index
/// per homogeneous coordinate (x0, x1, y0, y1, ...).
std::vector<std::string> variable_names(const Space &space);
/// Index of the first variable of each factor, plus the total at the end.
std::vector<int> variable_offsets(const Space &space);

/// Divides the tuple by the gcd of its entries. Throws DegenerateComposition
/// if every entry is zero.
std::vector<Polynomial> reduce_tuple(std::vector<Polynomial> tuple);

/// f o g, reduced.
RationalMap compose(const RationalMap &f, const RationalMap &g);

/// (f^n)^*(omega_X) for a map whose iterate has multidegree matrix D.
CohClass pullback_omega(const Space &space, const DegreeMatrix &d);

struct IterateResult {
    /// degrees[n] for n = 0..reached; degrees[0] is the identity.
    std::vector<DegreeMatrix> degrees;
    /// lambda_1(f^n) for n = 0..reached.
    std::vector<Integer> lambda1;
    int reached = 0;
    bool truncated = false;
    std::string truncation_reason;
};

constexpr int kDefaultDegreeCap = 400;
constexpr int kDefaultIterations = 8;

/// Iterates f^{n+1} = f o f^n for n up to n_max. Stops early, with the
/// truncation flag set, once the predicted (pre-cancellation) total degree of
/// some component would exceed degree_cap.
IterateResult iterate_multidegrees(const RationalMap &f, int n_max,
                                   int degree_cap = kDefaultDegreeCap);

/// True iff the base components avoid every fiber variable. Throws
/// FibrationError when the space has no fibration.
bool validate_skew(const RationalMap &f);

/// lambda_1(f^n | pi) computed from a multidegree matrix of f^n.
Integer fiber_degree_from(const Space &space, const DegreeMatrix &d);

/// Degree of f^n along a generic fiber; requires a valid skew product.
Integer fiber_degree(const RationalMap &f, int n, int degree_cap = kDefaultDegreeCap);

/// Fiber degrees for n = 0..reached of an iterate result.
std::vector<Integer> fiber_degree_sequence(const RationalMap &f, const IterateResult &it);

struct DominanceCheck {
    bool full_rank = false;
    int points_tried = 0;
    int degenerate_draws = 0;
};

/// Jacobian rank test mod a large prime at random integer points. Full rank
/// at one point proves dominance; failure is only evidence against it.
DominanceCheck check_dominance(const RationalMap &f, std::uint64_t seed = 1);

} // namespace dyndeg
