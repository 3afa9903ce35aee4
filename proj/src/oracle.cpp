#include "dyndeg/oracle.hpp"

#include "dyndeg/error.hpp"
#include "dyndeg/monomial.hpp"
#include "dyndeg/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>

namespace dyndeg {

namespace {

using Complex = std::complex<long double>;

Polynomial to_poly(const std::vector<Integer> &c) {
    Polynomial p(1);
    for (std::size_t i = 0; i < c.size(); ++i)
        p.add_term(Monomial{static_cast<int>(i)}, c[i]);
    return p;
}

std::vector<Integer> from_poly(const Polynomial &p) {
    std::vector<Integer> c(static_cast<std::size_t>(std::max(p.degree(0), 0)) + 1, 0);
    for (const auto &[e, v] : p.terms())
        c[static_cast<std::size_t>(e[0])] = v;
    return c;
}

// Aberth-Ehrlich iteration for a square-free polynomial of degree >= 1.
std::vector<Complex> aberth(const std::vector<Integer> &coeffs) {
    const std::size_t n = coeffs.size() - 1;
    std::vector<long double> c(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        c[i] = static_cast<long double>(coeffs[i].get_d());
    if (n == 1)
        return {Complex(-c[0] / c[1], 0.0L)};

    auto eval = [&](Complex z, Complex &dp) {
        Complex p = c[n];
        dp = 0.0L;
        for (std::size_t i = n; i-- > 0;) {
            dp = dp * z + p;
            p = p * z + c[i];
        }
        return p;
    };

    const long double radius =
        std::pow(std::abs(c[0] / c[n]), 1.0L / static_cast<long double>(n));
    std::vector<Complex> z(n);
    for (std::size_t j = 0; j < n; ++j) {
        const long double angle =
            2.0L * std::numbers::pi_v<long double> * static_cast<long double>(j) /
                static_cast<long double>(n) +
            0.4L;
        z[j] = std::polar(radius == 0.0L ? 1.0L : radius, angle);
    }

    bool converged = false;
    for (int iter = 0; iter < 2000 && !converged; ++iter) {
        converged = true;
        for (std::size_t i = 0; i < n; ++i) {
            Complex dp;
            const Complex p = eval(z[i], dp);
            if (p == 0.0L)
                continue;
            const Complex w = p / dp;
            Complex s = 0.0L;
            for (std::size_t j = 0; j < n; ++j)
                if (j != i)
                    s += 1.0L / (z[i] - z[j]);
            const Complex step = w / (1.0L - w * s);
            z[i] -= step;
            if (std::abs(step) > 1e-17L * std::max(1.0L, std::abs(z[i])))
                converged = false;
        }
    }
    if (!converged)
        throw ComputationError("polynomial_roots: Aberth iteration did not converge");
    for (auto &r : z)
        for (int k = 0; k < 2; ++k) {
            Complex dp;
            const Complex p = eval(r, dp);
            if (dp != 0.0L)
                r -= p / dp;
        }
    return z;
}

} // namespace

std::vector<Integer> characteristic_polynomial(const IntMatrix &a) {
    if (!a.square())
        throw InvalidArgument("characteristic_polynomial: matrix is not square");
    const std::size_t k = a.rows();
    std::vector<Integer> c(k + 1, 0);
    c[k] = 1;
    IntMatrix m(k, k);
    // Faddeev-LeVerrier: M_j = A M_{j-1} + c_{k-j+1} I, c_{k-j} = -tr(A M_j) / j
    for (std::size_t j = 1; j <= k; ++j) {
        IntMatrix next = a * m;
        for (std::size_t i = 0; i < k; ++i)
            next(i, i) += c[k - j + 1];
        m = std::move(next);
        const IntMatrix am = a * m;
        Integer tr = 0;
        for (std::size_t i = 0; i < k; ++i)
            tr += am(i, i);
        Integer q = -tr;
        const Integer jj(static_cast<unsigned long>(j));
        mpz_divexact(q.get_mpz_t(), q.get_mpz_t(), jj.get_mpz_t());
        c[k - j] = q;
    }
    return c;
}

std::vector<std::pair<std::vector<Integer>, int>> squarefree_factors(const std::vector<Integer> &coeffs) {
    Polynomial a = to_poly(coeffs);
    if (a.is_zero() || a.degree(0) < 1)
        return {};
    a = a.divide_integer(a.content());
    std::vector<std::pair<std::vector<Integer>, int>> out;
    // Yun's algorithm
    Polynomial b = a.derivative(0);
    Polynomial c = gcd(a, b);
    Polynomial w = divide_exact(a, c);
    int mult = 1;
    while (w.degree(0) > 0) {
        Polynomial y = gcd(w, c);
        Polynomial z = divide_exact(w, y);
        if (z.degree(0) > 0)
            out.emplace_back(from_poly(z), mult);
        w = std::move(y);
        c = divide_exact(c, w);
        ++mult;
    }
    return out;
}

std::vector<std::complex<long double>> polynomial_roots(const std::vector<Integer> &coeffs) {
    std::vector<Complex> roots;
    for (const auto &[factor, mult] : squarefree_factors(coeffs)) {
        const auto r = aberth(factor);
        for (int i = 0; i < mult; ++i)
            roots.insert(roots.end(), r.begin(), r.end());
    }
    return roots;
}

EigenDegrees eigen_degrees(const IntMatrix &a) {
    if (determinant(a) == 0)
        throw InvalidArgument("eigen_degrees: det A = 0");
    const auto roots = polynomial_roots(characteristic_polynomial(a));
    if (roots.size() != a.rows())
        throw ComputationError("eigen_degrees: root count does not match dimension");
    std::vector<long double> moduli;
    for (const auto &r : roots)
        moduli.push_back(std::abs(r));
    std::sort(moduli.begin(), moduli.end(), std::greater<>());
    EigenDegrees out;
    long double prod = 1.0L;
    out.degrees.push_back(1.0);
    for (long double m : moduli) {
        out.moduli.push_back(static_cast<double>(m));
        prod *= m;
        out.degrees.push_back(static_cast<double>(prod));
    }
    return out;
}

GeneratorSum omega_terms(const Space &space) {
    GeneratorSum s;
    for (int i = 0; i < space.num_factors(); ++i) {
        Exponent e(space.factors().size(), 0);
        e[static_cast<std::size_t>(i)] = 1;
        s.emplace_back(1, e);
    }
    return s;
}

GeneratorSum terms_of(const CohClass &c) {
    GeneratorSum s;
    for (const auto &[e, v] : c.coefficients())
        s.emplace_back(v, e);
    return s;
}

CohClass ring_expand_oracle(const Space &space, const std::vector<GeneratorSum> &factors,
                            std::uint64_t max_terms) {
    if (space.dim() > 8)
        throw ComputationError("ring_expand_oracle: dimension above 8");
    std::uint64_t raw = 1;
    int degree = 0;
    for (const auto &f : factors) {
        if (f.empty())
            return CohClass(space, 0) * Integer(0);
        raw *= f.size();
        if (raw > max_terms)
            throw ComputationError("ring_expand_oracle: expansion exceeds term cap");
        int d = -1;
        for (const auto &[c, e] : f) {
            int s = 0;
            for (int x : e)
                s += x;
            if (d >= 0 && s != d)
                throw InvalidArgument("ring_expand_oracle: factor is not homogeneous");
            d = s;
        }
        degree += d;
    }
    if (degree > space.dim())
        throw InvalidArgument("ring_expand_oracle: product degree exceeds dimension");

    const auto &bounds = space.factors();
    std::map<Exponent, Integer> acc;
    std::vector<std::size_t> choice(factors.size(), 0);
    while (true) {
        Exponent e(bounds.size(), 0);
        Integer c = 1;
        for (std::size_t f = 0; f < factors.size(); ++f) {
            const auto &[tc, te] = factors[f][choice[f]];
            c *= tc;
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] += te[i];
        }
        bool keep = true;
        for (std::size_t i = 0; i < e.size(); ++i)
            keep = keep && e[i] <= bounds[i];
        if (keep)
            acc[e] += c;
        std::size_t f = 0;
        while (f < factors.size() && ++choice[f] == factors[f].size())
            choice[f++] = 0;
        if (f == factors.size())
            break;
    }
    CohClass out(space, degree);
    for (const auto &[e, c] : acc)
        out.add_term(e, c);
    return out;
}

bool compound_vs_minors(const IntMatrix &a, int p, int n) {
    const IntMatrix direct = compound(power(a, static_cast<unsigned>(n)), p).matrix;
    return direct == power(compound(a, p).matrix, static_cast<unsigned>(n));
}

FiberedSampler::FiberedSampler(std::uint64_t seed, int entry_bound)
    : rng_(seed), bound_(entry_bound) {}

IntMatrix FiberedSampler::draw(int k, int l) {
    std::uniform_int_distribution<long> entry(-bound_, bound_);
    IntMatrix a(static_cast<std::size_t>(k), static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (!(i < l && j >= l))
                a(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = entry(rng_);
    return a;
}

FiberedSample FiberedSampler::next(int k_min, int k_max) {
    std::uniform_int_distribution<int> kd(k_min, k_max);
    const int k = kd(rng_);
    std::uniform_int_distribution<int> ld(1, k - 1);
    const int l = ld(rng_);
    while (true) {
        IntMatrix a = draw(k, l);
        if (determinant(a) != 0)
            return {std::move(a), l};
        ++skipped_;
        log_.push_back("skipped singular draw (k = " + std::to_string(k) +
                       ", l = " + std::to_string(l) + ")");
    }
}

IntMatrix FiberedSampler::next_matrix(int k) {
    while (true) {
        IntMatrix a = draw(k, 0);
        if (determinant(a) != 0)
            return a;
        ++skipped_;
        log_.push_back("skipped singular draw (k = " + std::to_string(k) + ")");
    }
}

} // namespace dyndeg
