// Multivariate gcd over Z.
//
// gcd(a, b) = gcd(cont a, cont b) * x^min(ma, mb) * gcd(a1, b1) where a1, b1
// are a, b with integer content and monomial factor removed. For a1, b1 we
// first try to certify coprimality: if a nonconstant G divides both, then for
// some variable v, deg_v G > 0, and specializing every other variable at a
// point where lc_v(a1) does not vanish mod p keeps deg_v G intact. So if the
// univariate images mod p are coprime for every shared variable, G = 1.
// Only when the certificate fails do we run a recursive primitive PRS.

#include "dyndeg/error.hpp"
#include "dyndeg/polynomial.hpp"

#include <random>

namespace dyndeg {

namespace {

constexpr std::uint64_t kPrimes[] = {
    2305843009213693951ULL, // 2^61 - 1
    4611686018427387847ULL,
    1152921504606846883ULL,
};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    base %= m;
    while (e) {
        if (e & 1u)
            r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        e >>= 1;
    }
    return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t m) { return powmod(a, m - 2, m); }

using UniPoly = std::vector<std::uint64_t>; // coefficient of t^i at index i

void trim(UniPoly &p) {
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

// Degree of gcd of two univariate polynomials over Z/m.
int gcd_degree_mod(UniPoly a, UniPoly b, std::uint64_t m) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        // a <- a mod b
        const std::uint64_t inv = invmod(b.back(), m);
        while (a.size() >= b.size()) {
            const std::uint64_t f = mulmod(a.back(), inv, m);
            const std::size_t shift = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i) {
                const std::uint64_t sub = mulmod(f, b[i], m);
                std::uint64_t &slot = a[i + shift];
                slot = slot >= sub ? slot - sub : slot + m - sub;
            }
            trim(a);
        }
        std::swap(a, b);
    }
    return static_cast<int>(a.size()) - 1;
}

// Image of p in Z/m[t] after fixing every variable except v at `point`.
UniPoly univariate_image(const Polynomial &p, int v, const std::vector<std::uint64_t> &point,
                         std::uint64_t m) {
    UniPoly out(static_cast<std::size_t>(p.degree(v)) + 1, 0);
    for (const auto &[e, c] : p.terms()) {
        std::uint64_t t = mpz_fdiv_ui(c.get_mpz_t(), m);
        for (std::size_t u = 0; u < e.size() && t; ++u)
            if (static_cast<int>(u) != v && e[u])
                t = mulmod(t, powmod(point[u], static_cast<std::uint64_t>(e[u]), m), m);
        std::uint64_t &slot = out[static_cast<std::size_t>(e[static_cast<std::size_t>(v)])];
        slot = (slot + t) % m;
    }
    return out;
}

// True if a and b (primitive, free of monomial factors) are proven coprime.
bool certify_coprime(const Polynomial &a, const Polynomial &b) {
    std::mt19937_64 rng(0x5eed5eedULL + a.size() * 131 + b.size());
    for (int v = 0; v < a.nvars(); ++v) {
        const int da = a.degree(v);
        const int db = b.degree(v);
        if (da == 0 || db == 0)
            continue;
        bool proven = false;
        for (std::uint64_t m : kPrimes) {
            for (int attempt = 0; attempt < 8 && !proven; ++attempt) {
                std::vector<std::uint64_t> point(static_cast<std::size_t>(a.nvars()));
                for (auto &x : point)
                    x = rng() % (m - 2) + 1;
                UniPoly ia = univariate_image(a, v, point, m);
                if (ia.back() == 0)
                    continue; // lc_v(a) vanished at this point
                UniPoly ib = univariate_image(b, v, point, m);
                if (gcd_degree_mod(std::move(ia), std::move(ib), m) == 0)
                    proven = true;
                else
                    break; // likely a genuine common factor; try the next prime once
            }
            if (proven)
                break;
        }
        if (!proven)
            return false;
    }
    return true;
}

Polynomial normalize_sign(Polynomial p) {
    if (!p.is_zero() && p.leading_coeff() < 0)
        return -p;
    return p;
}

Polynomial content_in(const Polynomial &p, int v) {
    Polynomial g(p.nvars());
    for (const auto &[d, c] : p.coefficients_in(v)) {
        g = gcd(g, c);
        if (g.is_constant() && g.leading_coeff() == 1)
            break;
    }
    return g;
}

Polynomial primitive_in(const Polynomial &p, int v) {
    if (p.is_zero())
        return p;
    return divide_exact(p, content_in(p, v));
}

Polynomial shifted(const Polynomial &p, int v, int k) {
    Monomial e(static_cast<std::size_t>(p.nvars()), 0);
    e[static_cast<std::size_t>(v)] = k;
    return p * Polynomial::monomial(e, 1);
}

// Pseudo-remainder of a by b with respect to v.
Polynomial prem(const Polynomial &a, const Polynomial &b, int v) {
    const int db = b.degree(v);
    const auto cb = b.coefficients_in(v);
    const Polynomial &lcb = cb.rbegin()->second;
    Polynomial r = a;
    int e = a.degree(v) - db + 1;
    while (!r.is_zero() && r.degree(v) >= db) {
        const int dr = r.degree(v);
        const Polynomial lcr = r.coefficients_in(v).rbegin()->second;
        r = lcb * r - shifted(lcr * b, v, dr - db);
        --e;
    }
    if (e > 0)
        r = lcb.pow(static_cast<unsigned>(e)) * r;
    return r;
}

// gcd of polynomials with no integer content and no monomial factor.
Polynomial gcd_primitive(const Polynomial &a, const Polynomial &b) {
    const int n = a.nvars();
    if (a.is_constant() || b.is_constant())
        return Polynomial::constant(n, 1);
    int v = -1;
    int best = 0;
    for (int u = 0; u < n; ++u) {
        const int d = std::min(a.degree(u), b.degree(u));
        if (d > 0 && (v < 0 || d < best)) {
            v = u;
            best = d;
        }
    }
    if (v < 0)
        return Polynomial::constant(n, 1);
    if (certify_coprime(a, b))
        return Polynomial::constant(n, 1);

    const Polynomial ca = content_in(a, v);
    const Polynomial cb = content_in(b, v);
    const Polynomial g_content = gcd(ca, cb);
    Polynomial pa = divide_exact(a, ca);
    Polynomial pb = divide_exact(b, cb);
    if (pa.degree(v) < pb.degree(v))
        std::swap(pa, pb);
    while (!pb.is_zero() && pb.degree(v) > 0) {
        Polynomial r = prem(pa, pb, v);
        pa = std::move(pb);
        pb = r.is_zero() ? r : primitive_in(r, v);
    }
    Polynomial g = pb.is_zero() ? primitive_in(pa, v) : Polynomial::constant(n, 1);
    return normalize_sign(g_content * g);
}

} // namespace

Polynomial gcd(const Polynomial &a, const Polynomial &b) {
    if (a.nvars() != b.nvars())
        throw InvalidArgument("gcd: variable count mismatch");
    if (a.is_zero())
        return normalize_sign(b);
    if (b.is_zero())
        return normalize_sign(a);

    const Integer ca = a.content();
    const Integer cb = b.content();
    Integer c;
    mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());

    const Monomial ma = a.min_exponents();
    const Monomial mb = b.min_exponents();
    Monomial m(ma.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        m[i] = std::min(ma[i], mb[i]);

    const Polynomial a1 = a.divide_integer(ca).divide_monomial(ma);
    const Polynomial b1 = b.divide_integer(cb).divide_monomial(mb);
    Polynomial g = gcd_primitive(a1, b1);
    return normalize_sign(g * Polynomial::monomial(m, c));
}

} // namespace dyndeg
