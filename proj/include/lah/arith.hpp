#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace lah {

// Exact arbitrary-precision integers and rationals (GMP-backed).
using Int = mpz_class;
using Rat = mpq_class;

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Int binomial(const Int& n, unsigned long k) {
    Int r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// mpq_class arithmetic keeps results canonical, but a rational built from
// raw numerator/denominator does not; this constructor-wrapper does.
inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("make_rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat pow_rat(const Rat& base, unsigned long e) {
    Rat r(1);
    for (unsigned long i = 0; i < e; ++i) r *= base;
    return r;
}

// Requested tolerance cannot be met within the configured work budget.
// The partial result reached so far is attached where the caller can use it.
class tolerance_unreachable_error : public std::runtime_error {
  public:
    explicit tolerance_unreachable_error(const std::string& what)
        : std::runtime_error(what) {}
};

// Brute-force oracle asked for an argument beyond its configured bound.
class oracle_range_error : public std::domain_error {
  public:
    explicit oracle_range_error(const std::string& what)
        : std::domain_error(what) {}
};

}  // namespace lah
