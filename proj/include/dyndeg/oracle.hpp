#pragma once

// Ground truth that shares no code path with the engines it checks:
// eigenvalue-product degrees for monomial maps, and brute-force expansion for
// the cohomology ring.

#include "dyndeg/cohomology.hpp"
#include "dyndeg/integer.hpp"
#include "dyndeg/matrix.hpp"

#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace dyndeg {

/// Coefficients c_0..c_k of det(tI - A) (monic), exact.
std::vector<Integer> characteristic_polynomial(const IntMatrix &a);

/// Square-free decomposition: (factor, multiplicity) with primitive factors.
std::vector<std::pair<std::vector<Integer>, int>> squarefree_factors(const std::vector<Integer> &coeffs);

/// All complex roots with multiplicity (Aberth iteration on the square-free
/// parts). Throws ComputationError if the iteration does not converge.
std::vector<std::complex<long double>> polynomial_roots(const std::vector<Integer> &coeffs);

struct EigenDegrees {
    /// Eigenvalue moduli, descending.
    std::vector<double> moduli;
    /// d_p = product of the p largest moduli, p = 0..k.
    std::vector<double> degrees;
};

/// Throws InvalidArgument if det A = 0.
EigenDegrees eigen_degrees(const IntMatrix &a);

/// A sum of monomials in the generators h_i, as (coefficient, exponent) terms.
using GeneratorSum = std::vector<std::pair<Integer, Exponent>>;

GeneratorSum omega_terms(const Space &space);
GeneratorSum terms_of(const CohClass &c);

/// Expands the product of the given sums term by term, dropping any term with
/// an exponent above its factor bound. Requires dim <= 8 and at most
/// `max_terms` raw products.
CohClass ring_expand_oracle(const Space &space, const std::vector<GeneratorSum> &factors,
                            std::uint64_t max_terms = 20'000'000);

/// compound(A^n, p) == compound(A, p)^n, the left side from the minors of the
/// explicit power A^n.
bool compound_vs_minors(const IntMatrix &a, int p, int n);

struct FiberedSample {
    IntMatrix a;
    int l = 0;
};

/// Seeded sampler of block lower-triangular integer matrices with nonzero
/// determinant. Singular draws are skipped and counted.
class FiberedSampler {
  public:
    explicit FiberedSampler(std::uint64_t seed, int entry_bound = 5);

    /// k uniform in [k_min, k_max], l uniform in [1, k-1].
    FiberedSample next(int k_min, int k_max);
    /// Square matrix with entries in [-bound, bound] and det != 0.
    IntMatrix next_matrix(int k);

    int skipped() const { return skipped_; }
    const std::vector<std::string> &log() const { return log_; }

  private:
    IntMatrix draw(int k, int l);

    std::mt19937_64 rng_;
    int bound_;
    int skipped_ = 0;
    std::vector<std::string> log_;
};

} // namespace dyndeg
