#pragma once

// Monomial self-maps of (P^1)^k. The map with exponent matrix A sends
// x = (x_1, ..., x_k) to (x^{A_1}, ..., x^{A_k}) where A_i is the i-th row;
// composition corresponds to the matrix product, so f^n has matrix A^n.
//
// The pullback of the hyperplane monomial h_S (S a p-subset) is modelled by
// sum_T |det A[S, T]| h_T, i.e. the entrywise absolute value of the p-th
// compound matrix.

#include "dyndeg/cohomology.hpp"
#include "dyndeg/integer.hpp"
#include "dyndeg/matrix.hpp"

#include <optional>
#include <vector>

namespace dyndeg {

/// All p-subsets of {0, ..., k-1} in lexicographic order.
std::vector<std::vector<int>> subsets(int k, int p);

/// p-th compound matrix: entry (S, T) is the minor of A with rows S and
/// columns T, with subsets in lexicographic order.
struct CompoundOperator {
    int p = 0;
    std::vector<std::vector<int>> index;
    IntMatrix matrix;
};

CompoundOperator compound(const IntMatrix &a, int p);

class MonomialMap {
  public:
    /// Throws InvalidArgument if A is not square or det A = 0, and
    /// FibrationError if a fibration is declared but A is not block
    /// lower-triangular for it.
    explicit MonomialMap(IntMatrix a, std::optional<int> fibration_dim = std::nullopt);

    const IntMatrix &matrix() const { return a_; }
    int dim() const { return static_cast<int>(a_.rows()); }
    const Space &space() const { return space_; }
    std::optional<int> fibration_dim() const { return fibration_; }

    /// Diagonal block acting on the base (the induced map g).
    IntMatrix base_block() const;
    /// Diagonal block acting on the fiber variables.
    IntMatrix fiber_block() const;

  private:
    IntMatrix a_;
    std::optional<int> fibration_;
    Space space_;
};

/// True iff A_{ij} = 0 for every i < l <= j (0-based), i.e. the first l
/// components only involve the first l variables.
bool validate_fibration(const IntMatrix &a, int l);

/// |det A|.
Integer topological_degree(const MonomialMap &f);

/// (f^n)^*(omega^p) in the compound model.
CohClass pullback_class(const MonomialMap &f, int p, int n);

/// lambda_p(f^n) = mass of (f^n)^*(omega^p).
Integer lambda_p(const MonomialMap &f, int p, int n);

/// lambda_p(f^n | pi), defined for 0 <= p <= k - l.
Integer lambda_relative(const MonomialMap &f, int p, int n);

/// a_{q,p}(n) for max(0, p-l) <= q <= min(p, k-l).
Integer a_qp(const MonomialMap &f, int q, int p, int n);

/// Admissible q-window [lo, hi] of a_{q,p}.
std::pair<int, int> a_window(const MonomialMap &f, int p);

/// b_p(n): sum of a_{q,p}(n) over the admissible window.
Integer b_p(const MonomialMap &f, int p, int n);

/// c_p(n) = lambda_p(g^n) for the monomial map with matrix g_block.
Integer c_p(const IntMatrix &g_block, int p, int n);

// Whole sequences for n = 0..n_max. Compound powers are accumulated
// incrementally, so these cost one matrix product per step.

std::vector<CohClass> pullback_sequence(const MonomialMap &f, int p, int n_max);
std::vector<Integer> lambda_sequence(const MonomialMap &f, int p, int n_max);
std::vector<Integer> relative_sequence(const MonomialMap &f, int p, int n_max);
std::vector<Integer> a_sequence(const MonomialMap &f, int q, int p, int n_max);
std::vector<Integer> b_sequence(const MonomialMap &f, int p, int n_max);
std::vector<Integer> c_sequence(const IntMatrix &g_block, int p, int n_max);

// Quantities read off a pullback class of degree p on a fibered (P^1)^k.
Integer relative_from_class(const CohClass &c);
Integer a_from_class(const CohClass &c, int q);
Integer b_from_class(const CohClass &c);

/// Sum of |entries| of compound(A, p)^n.
Integer compound_abs_sum(const IntMatrix &a, int p, int n);

} // namespace dyndeg
