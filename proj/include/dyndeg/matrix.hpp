#pragma once

#include "dyndeg/integer.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace dyndeg {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);
    explicit IntMatrix(const std::vector<std::vector<long>> &rows);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Integer &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Integer &operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntMatrix operator*(const IntMatrix &rhs) const;
    bool operator==(const IntMatrix &rhs) const;

    /// Entrywise absolute value.
    IntMatrix abs() const;
    /// Sum of all entries.
    Integer sum() const;
    /// Submatrix with the given (sorted) row and column indices.
    IntMatrix select(const std::vector<int> &rows, const std::vector<int> &cols) const;
    /// Contiguous block [r0, r0+nr) x [c0, c0+nc).
    IntMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

    std::vector<std::vector<Integer>> to_rows() const;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

/// Exact determinant by fraction-free (Bareiss) elimination.
Integer determinant(const IntMatrix &a);

/// a^n by repeated multiplication, a^0 = I.
IntMatrix power(const IntMatrix &a, unsigned n);

} // namespace dyndeg
