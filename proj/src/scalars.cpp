#include "cbspline/scalars.hpp"

#include <stdexcept>

namespace cbspline {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

bool miller_rabin_witness(std::uint64_t n, std::uint64_t a, std::uint64_t d, int s) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) return false;
    for (int i = 1; i < s; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1) return false;
    }
    return true;  // a witnesses compositeness
}

}  // namespace

bool is_prime(std::uint64_t m) {
    if (m < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (m == p) return true;
        if (m % p == 0) return false;
    }
    std::uint64_t d = m - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // First twelve primes: deterministic for all n < 3.3 * 10^24
    // (Sorenson-Webster), which covers the whole 64-bit range.
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (miller_rabin_witness(m, a, d, s)) return false;
    }
    return true;
}

BigReal cos_pi_multiple(long long p, long long q, mpfr_prec_t prec) {
    if (q < 1) throw std::invalid_argument("cos_pi_multiple: q must be positive");

    // Reduce p/q modulo 2 to [0, 2), exactly in integers.
    long long two_q = 2 * q;
    long long r = p % two_q;
    if (r < 0) r += two_q;

    // Fold [0,2) -> [0,1]: cos(pi(2 - x)) = cos(pi x).
    if (r > q) r = two_q - r;

    // Quarter-period points are exact.
    BigReal out(prec);
    if (r == 0) {
        mpfr_set_si(out.raw(), 1, MPFR_RNDN);
        return out;
    }
    if (r == q) {
        mpfr_set_si(out.raw(), -1, MPFR_RNDN);
        return out;
    }
    if (2 * r == q) {
        mpfr_set_zero(out.raw(), 1);
        return out;
    }

    // Fold [0,1] -> [0,1/2]: cos(pi(1 - x)) = -cos(pi x).
    bool negate = false;
    if (2 * r > q) {
        r = q - r;
        negate = true;
    }

    // Now 0 < r/q < 1/2; evaluate with guard bits, then round once.
    mpfr_prec_t work = prec + 64;
    mpfr_t t;
    mpfr_init2(t, work);
    mpfr_const_pi(t, MPFR_RNDN);
    mpfr_mul_si(t, t, r, MPFR_RNDN);
    mpfr_div_si(t, t, q, MPFR_RNDN);
    mpfr_cos(t, t, MPFR_RNDN);
    if (negate) mpfr_neg(t, t, MPFR_RNDN);
    mpfr_set(out.raw(), t, MPFR_RNDN);
    mpfr_clear(t);
    return out;
}

}  // namespace cbspline
