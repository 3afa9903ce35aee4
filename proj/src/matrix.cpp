#include "dyndeg/matrix.hpp"

#include "dyndeg/error.hpp"

#include <utility>

namespace dyndeg {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto &row : rows) {
        if (row.size() != cols_)
            throw InvalidArgument("IntMatrix: ragged rows");
        for (long v : row)
            data_.emplace_back(v);
    }
}

IntMatrix::IntMatrix(const std::vector<std::vector<long>> &rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.front().size();
    data_.reserve(rows_ * cols_);
    for (const auto &row : rows) {
        if (row.size() != cols_)
            throw InvalidArgument("IntMatrix: ragged rows");
        for (long v : row)
            data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix &rhs) const {
    if (cols_ != rhs.rows_)
        throw InvalidArgument("IntMatrix: dimension mismatch in product");
    IntMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t t = 0; t < cols_; ++t) {
            const Integer &a = (*this)(i, t);
            if (a == 0)
                continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                out(i, j) += a * rhs(t, j);
        }
    return out;
}

bool IntMatrix::operator==(const IntMatrix &rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

IntMatrix IntMatrix::abs() const {
    IntMatrix out = *this;
    for (auto &v : out.data_)
        v = ::abs(v);
    return out;
}

Integer IntMatrix::sum() const {
    Integer s = 0;
    for (const auto &v : data_)
        s += v;
    return s;
}

IntMatrix IntMatrix::select(const std::vector<int> &rows, const std::vector<int> &cols) const {
    IntMatrix out(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            out(i, j) = (*this)(rows[i], cols[j]);
    return out;
}

IntMatrix IntMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    IntMatrix out(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j)
            out(i, j) = (*this)(r0 + i, c0 + j);
    return out;
}

std::vector<std::vector<Integer>> IntMatrix::to_rows() const {
    std::vector<std::vector<Integer>> out(rows_, std::vector<Integer>(cols_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out[i][j] = (*this)(i, j);
    return out;
}

Integer determinant(const IntMatrix &a) {
    if (!a.square())
        throw InvalidArgument("determinant: matrix is not square");
    const std::size_t n = a.rows();
    if (n == 0)
        return 1;
    IntMatrix m = a;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t piv = k + 1;
            while (piv < n && m(piv, k) == 0)
                ++piv;
            if (piv == n)
                return 0;
            for (std::size_t j = 0; j < n; ++j)
                std::swap(m(k, j), m(piv, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m(i, j) = std::move(v);
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    Integer det = m(n - 1, n - 1);
    return sign < 0 ? Integer(-det) : det;
}

IntMatrix power(const IntMatrix &a, unsigned n) {
    if (!a.square())
        throw InvalidArgument("power: matrix is not square");
    IntMatrix r = IntMatrix::identity(a.rows());
    for (unsigned i = 0; i < n; ++i)
        r = a * r;
    return r;
}

} // namespace dyndeg
