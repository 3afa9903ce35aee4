#pragma once

#include <gmpxx.h>

#include <cmath>
#include <string>

namespace dyndeg {

using Integer = mpz_class;

inline Integer factorial(unsigned n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Integer binomial(unsigned n, unsigned k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Integer ipow(const Integer &base, unsigned e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

/// Natural logarithm of a positive integer; safe far beyond double range.
inline double log_of(const Integer &x) {
    long exp2 = 0;
    double mant = mpz_get_d_2exp(&exp2, x.get_mpz_t());
    return std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
}

inline std::string to_string(const Integer &x) { return x.get_str(); }

} // namespace dyndeg
