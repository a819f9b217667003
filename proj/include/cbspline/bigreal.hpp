#pragma once

#include <mpfr.h>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "cbspline/rational.hpp"

namespace cbspline {

inline constexpr mpfr_prec_t kDefaultPrecision = 256;

// Binary floating-point scalar with a per-value working precision.
// Every arithmetic operation is correctly rounded (to nearest, ties to even)
// at the precision of the result, which is the larger of the operand
// precisions. Immutable in spirit: operations return fresh values.
class BigReal {
public:
    explicit BigReal(mpfr_prec_t prec = kDefaultPrecision) {
        mpfr_init2(x_, check(prec));
        mpfr_set_zero(x_, 1);
    }
    BigReal(long v, mpfr_prec_t prec) {
        mpfr_init2(x_, check(prec));
        mpfr_set_si(x_, v, MPFR_RNDN);
    }
    BigReal(double v, mpfr_prec_t prec) {
        mpfr_init2(x_, check(prec));
        mpfr_set_d(x_, v, MPFR_RNDN);
    }
    // Rounding-faithful conversion: one correctly rounded operation.
    BigReal(const Rational& q, mpfr_prec_t prec) {
        mpfr_init2(x_, check(prec));
        mpfr_set_q(x_, q.raw().get_mpq_t(), MPFR_RNDN);
    }

    BigReal(const BigReal& o) {
        mpfr_init2(x_, mpfr_get_prec(o.x_));
        mpfr_set(x_, o.x_, MPFR_RNDN);
    }
    BigReal(BigReal&& o) noexcept {
        mpfr_init2(x_, mpfr_get_prec(o.x_));
        mpfr_swap(x_, o.x_);
    }
    BigReal& operator=(const BigReal& o) {
        if (this != &o) {
            mpfr_set_prec(x_, mpfr_get_prec(o.x_));
            mpfr_set(x_, o.x_, MPFR_RNDN);
        }
        return *this;
    }
    BigReal& operator=(BigReal&& o) noexcept {
        mpfr_swap(x_, o.x_);
        return *this;
    }
    ~BigReal() { mpfr_clear(x_); }

    mpfr_prec_t precision() const { return mpfr_get_prec(x_); }
    const mpfr_t& raw() const { return x_; }
    mpfr_t& raw() { return x_; }

    int sign() const { return mpfr_sgn(x_); }
    bool is_zero() const { return mpfr_zero_p(x_); }
    double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }

    // Exact conversion back to a rational (every finite binary float is one).
    Rational to_rational() const {
        if (!mpfr_number_p(x_)) throw std::domain_error("BigReal: not a finite number");
        if (mpfr_zero_p(x_)) return Rational(0);
        mpz_class m;
        mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), x_);
        mpq_class q(m);
        if (e >= 0) {
            mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
        } else {
            mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
        }
        return Rational(q);
    }

    friend BigReal operator+(const BigReal& a, const BigReal& b) {
        BigReal r(join(a, b));
        mpfr_add(r.x_, a.x_, b.x_, MPFR_RNDN);
        return r;
    }
    friend BigReal operator-(const BigReal& a, const BigReal& b) {
        BigReal r(join(a, b));
        mpfr_sub(r.x_, a.x_, b.x_, MPFR_RNDN);
        return r;
    }
    friend BigReal operator*(const BigReal& a, const BigReal& b) {
        BigReal r(join(a, b));
        mpfr_mul(r.x_, a.x_, b.x_, MPFR_RNDN);
        return r;
    }
    friend BigReal operator/(const BigReal& a, const BigReal& b) {
        if (b.is_zero()) throw std::domain_error("BigReal: division by zero");
        BigReal r(join(a, b));
        mpfr_div(r.x_, a.x_, b.x_, MPFR_RNDN);
        return r;
    }
    friend BigReal operator-(const BigReal& a) {
        BigReal r(a.precision());
        mpfr_neg(r.x_, a.x_, MPFR_RNDN);
        return r;
    }

    friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.x_, b.x_) == 0; }
    friend bool operator!=(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.x_, b.x_) != 0; }
    friend bool operator<(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.x_, b.x_) < 0; }
    friend bool operator<=(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.x_, b.x_) <= 0; }
    friend bool operator>(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.x_, b.x_) > 0; }
    friend bool operator>=(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.x_, b.x_) >= 0; }

    std::string to_string(size_t significant_digits = 0) const {
        char* s = nullptr;
        int rc = significant_digits == 0
                     ? mpfr_asprintf(&s, "%.Re", x_)
                     : mpfr_asprintf(&s, "%.*Re", static_cast<int>(significant_digits) - 1, x_);
        if (rc < 0) throw std::runtime_error("BigReal: formatting failed");
        std::string out(s);
        mpfr_free_str(s);
        return out;
    }

private:
    static mpfr_prec_t check(mpfr_prec_t p) {
        if (p < MPFR_PREC_MIN) throw std::invalid_argument("BigReal: precision too small");
        return p;
    }
    static mpfr_prec_t join(const BigReal& a, const BigReal& b) {
        return std::max(a.precision(), b.precision());
    }

    mpfr_t x_;
};

inline BigReal abs(const BigReal& a) {
    BigReal r(a.precision());
    mpfr_abs(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}

inline BigReal sqrt(const BigReal& a) {
    if (a.sign() < 0) throw std::domain_error("BigReal: sqrt of negative value");
    BigReal r(a.precision());
    mpfr_sqrt(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}

// 2^e as an exact BigReal.
inline BigReal pow2(long e, mpfr_prec_t prec) {
    BigReal r(prec);
    mpfr_set_ui_2exp(r.raw(), 1, e, MPFR_RNDN);
    return r;
}

// |a - b| / max(|a|, |b|); zero if both are zero.
inline BigReal relative_difference(const BigReal& a, const BigReal& b) {
    BigReal num = abs(a - b);
    BigReal den = std::max(abs(a), abs(b));
    if (den.is_zero()) return BigReal(den.precision());
    return num / den;
}

}  // namespace cbspline
