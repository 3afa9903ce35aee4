#include "dyndeg/monomial.hpp"

#include "dyndeg/error.hpp"

#include <algorithm>
#include <string>

namespace dyndeg {

namespace {

void check_p(int p, int k, const char *what) {
    if (p < 0 || p > k)
        throw InvalidArgument(std::string(what) + ": p = " + std::to_string(p) +
                              " outside [0, " + std::to_string(k) + "]");
}

void check_n(int n, const char *what) {
    if (n < 0)
        throw InvalidArgument(std::string(what) + ": n must be nonnegative");
}

Exponent subset_exponent(const std::vector<int> &s, int k) {
    Exponent e(static_cast<std::size_t>(k), 0);
    for (int i : s)
        e[static_cast<std::size_t>(i)] = 1;
    return e;
}

// Coefficients of omega^p on the basis h_S, in compound index order.
std::vector<Integer> omega_weights(const Space &space, const CompoundOperator &c) {
    const CohClass omega_p = kaehler_power(space, c.p);
    std::vector<Integer> weight(c.index.size());
    for (std::size_t s = 0; s < c.index.size(); ++s)
        weight[s] = omega_p.coefficient(subset_exponent(c.index[s], space.dim()));
    return weight;
}

// Class sum_T (sum_S omega^p[S] |M[S, T]|) h_T.
CohClass class_from_compound(const Space &space, const CompoundOperator &c,
                             const std::vector<Integer> &weight, const IntMatrix &m) {
    const int k = space.dim();
    CohClass out(space, c.p);
    for (std::size_t t = 0; t < c.index.size(); ++t) {
        Integer coeff = 0;
        for (std::size_t s = 0; s < c.index.size(); ++s)
            coeff += weight[s] * ::abs(m(s, t));
        out.add_term(subset_exponent(c.index[t], k), coeff);
    }
    return out;
}

const Space &fibered_space(const MonomialMap &f, const char *what) {
    if (!f.fibration_dim())
        throw FibrationError(std::string(what) + ": map has no fibration");
    return f.space();
}

void check_relative_p(const MonomialMap &f, int p, const char *what) {
    const int k = f.dim();
    const int l = *f.fibration_dim();
    if (p < 0 || p > k - l)
        throw InvalidArgument(std::string(what) + ": p = " + std::to_string(p) +
                              " outside [0, k - l = " + std::to_string(k - l) + "]");
}

void check_q(const MonomialMap &f, int q, int p) {
    auto [lo, hi] = a_window(f, p);
    if (q < lo || q > hi)
        throw InvalidArgument("a_qp: q = " + std::to_string(q) + " outside admissible window [" +
                              std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

} // namespace

Integer relative_from_class(const CohClass &c) {
    const Space &space = c.space();
    const int k = space.dim();
    const int l = space.base_dim();
    if (c.degree() > k - l)
        throw InvalidArgument("relative degree: p = " + std::to_string(c.degree()) +
                              " exceeds k - l = " + std::to_string(k - l));
    return pair(mul(c, base_pullback_power(space, l)), kaehler_power(space, k - l - c.degree()));
}

Integer a_from_class(const CohClass &c, int q) {
    const Space &space = c.space();
    const int k = space.dim();
    const int l = space.base_dim();
    const int p = c.degree();
    if (q < std::max(0, p - l) || q > std::min(p, k - l))
        throw InvalidArgument("a_qp: q = " + std::to_string(q) + " outside admissible window");
    return pair(mul(c, base_pullback_power(space, l - p + q)), kaehler_power(space, k - l - q));
}

Integer b_from_class(const CohClass &c) {
    const Space &space = c.space();
    const int k = space.dim();
    const int l = space.base_dim();
    const int p = c.degree();
    Integer sum = 0;
    for (int q = std::max(0, p - l); q <= std::min(p, k - l); ++q)
        sum += a_from_class(c, q);
    return sum;
}

std::vector<std::vector<int>> subsets(int k, int p) {
    std::vector<std::vector<int>> out;
    if (p < 0 || p > k)
        return out;
    std::vector<int> s(static_cast<std::size_t>(p));
    for (int i = 0; i < p; ++i)
        s[static_cast<std::size_t>(i)] = i;
    while (true) {
        out.push_back(s);
        int i = p - 1;
        while (i >= 0 && s[static_cast<std::size_t>(i)] == k - p + i)
            --i;
        if (i < 0)
            break;
        ++s[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < p; ++j)
            s[static_cast<std::size_t>(j)] = s[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

CompoundOperator compound(const IntMatrix &a, int p) {
    if (!a.square())
        throw InvalidArgument("compound: matrix is not square");
    const int k = static_cast<int>(a.rows());
    check_p(p, k, "compound");
    CompoundOperator c;
    c.p = p;
    c.index = subsets(k, p);
    const std::size_t n = c.index.size();
    c.matrix = IntMatrix(n, n);
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = 0; t < n; ++t)
            c.matrix(s, t) = determinant(a.select(c.index[s], c.index[t]));
    return c;
}

bool validate_fibration(const IntMatrix &a, int l) {
    const int k = static_cast<int>(a.rows());
    for (int i = 0; i < l && i < k; ++i)
        for (int j = l; j < k; ++j)
            if (a(i, j) != 0)
                return false;
    return true;
}

MonomialMap::MonomialMap(IntMatrix a, std::optional<int> fibration_dim)
    : a_(std::move(a)), fibration_(fibration_dim),
      space_(Space::lines(a_.rows() == 0 ? 1 : static_cast<int>(a_.rows()))) {
    if (!a_.square() || a_.rows() == 0)
        throw InvalidArgument("MonomialMap: exponent matrix must be square and nonempty");
    if (determinant(a_) == 0)
        throw InvalidArgument("MonomialMap: det A = 0, map is not dominant");
    if (fibration_) {
        space_ = Space::lines(dim(), *fibration_);
        if (!validate_fibration(a_, *fibration_))
            throw FibrationError("MonomialMap: A is not block lower-triangular for l = " +
                                 std::to_string(*fibration_) +
                                 " (some base component involves a fiber variable)");
    }
}

IntMatrix MonomialMap::base_block() const {
    if (!fibration_)
        throw FibrationError("MonomialMap: no fibration declared");
    const auto l = static_cast<std::size_t>(*fibration_);
    return a_.block(0, 0, l, l);
}

IntMatrix MonomialMap::fiber_block() const {
    if (!fibration_)
        throw FibrationError("MonomialMap: no fibration declared");
    const auto l = static_cast<std::size_t>(*fibration_);
    const std::size_t r = a_.rows() - l;
    return a_.block(l, l, r, r);
}

Integer topological_degree(const MonomialMap &f) { return ::abs(determinant(f.matrix())); }

std::vector<CohClass> pullback_sequence(const MonomialMap &f, int p, int n_max) {
    check_p(p, f.dim(), "pullback_class");
    check_n(n_max, "pullback_class");
    const CompoundOperator c = compound(f.matrix(), p);
    std::vector<CohClass> out;
    out.reserve(static_cast<std::size_t>(n_max) + 1);
    const std::vector<Integer> weight = omega_weights(f.space(), c);
    IntMatrix m = IntMatrix::identity(c.matrix.rows());
    for (int n = 0; n <= n_max; ++n) {
        out.push_back(class_from_compound(f.space(), c, weight, m));
        if (n < n_max)
            m = m * c.matrix;
    }
    return out;
}

CohClass pullback_class(const MonomialMap &f, int p, int n) {
    return pullback_sequence(f, p, n).back();
}

Integer lambda_p(const MonomialMap &f, int p, int n) { return mass(pullback_class(f, p, n)); }

Integer lambda_relative(const MonomialMap &f, int p, int n) {
    fibered_space(f, "lambda_relative");
    check_relative_p(f, p, "lambda_relative");
    return relative_from_class(pullback_class(f, p, n));
}

std::pair<int, int> a_window(const MonomialMap &f, int p) {
    const Space &space = fibered_space(f, "a_qp");
    const int k = space.dim();
    const int l = space.base_dim();
    return {std::max(0, p - l), std::min(p, k - l)};
}

Integer a_qp(const MonomialMap &f, int q, int p, int n) {
    fibered_space(f, "a_qp");
    check_p(p, f.dim(), "a_qp");
    check_q(f, q, p);
    return a_from_class(pullback_class(f, p, n), q);
}

Integer b_p(const MonomialMap &f, int p, int n) {
    return b_sequence(f, p, n).back();
}

Integer c_p(const IntMatrix &g_block, int p, int n) {
    return lambda_p(MonomialMap(g_block), p, n);
}

std::vector<Integer> lambda_sequence(const MonomialMap &f, int p, int n_max) {
    std::vector<Integer> out;
    for (const auto &c : pullback_sequence(f, p, n_max))
        out.push_back(mass(c));
    return out;
}

std::vector<Integer> relative_sequence(const MonomialMap &f, int p, int n_max) {
    fibered_space(f, "lambda_relative");
    check_relative_p(f, p, "lambda_relative");
    std::vector<Integer> out;
    for (const auto &c : pullback_sequence(f, p, n_max))
        out.push_back(relative_from_class(c));
    return out;
}

std::vector<Integer> a_sequence(const MonomialMap &f, int q, int p, int n_max) {
    fibered_space(f, "a_qp");
    check_p(p, f.dim(), "a_qp");
    check_q(f, q, p);
    std::vector<Integer> out;
    for (const auto &c : pullback_sequence(f, p, n_max))
        out.push_back(a_from_class(c, q));
    return out;
}

std::vector<Integer> b_sequence(const MonomialMap &f, int p, int n_max) {
    fibered_space(f, "b_p");
    check_p(p, f.dim(), "b_p");
    std::vector<Integer> out;
    for (const auto &c : pullback_sequence(f, p, n_max))
        out.push_back(b_from_class(c));
    return out;
}

std::vector<Integer> c_sequence(const IntMatrix &g_block, int p, int n_max) {
    return lambda_sequence(MonomialMap(g_block), p, n_max);
}

Integer compound_abs_sum(const IntMatrix &a, int p, int n) {
    check_n(n, "compound_abs_sum");
    const CompoundOperator c = compound(a, p);
    IntMatrix m = IntMatrix::identity(c.matrix.rows());
    for (int i = 0; i < n; ++i)
        m = m * c.matrix;
    return m.abs().sum();
}

} // namespace dyndeg
