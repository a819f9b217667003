#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace cbspline {

using BigInt = mpz_class;

// Exact rational scalar. Always canonical: lowest terms, denominator > 0.
// Division by zero throws, it never produces a value.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(const BigInt& n) : v_(n) {}
    Rational(long n, long d) : v_(n, d) { canonicalize(); }
    Rational(const BigInt& n, const BigInt& d) : v_(n, d) { canonicalize(); }
    explicit Rational(const mpq_class& q) : v_(q) { canonicalize(); }

    const mpq_class& raw() const { return v_; }
    BigInt numerator() const { return BigInt(v_.get_num()); }
    BigInt denominator() const { return BigInt(v_.get_den()); }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sgn(v_) == 0; }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    // Renders "p/q", or just "p" for integers.
    std::string to_string() const {
        if (v_.get_den() == 1) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

private:
    void canonicalize() {
        if (sgn(v_.get_den()) == 0) throw std::domain_error("Rational: zero denominator");
        v_.canonicalize();
    }

    mpq_class v_;
};

inline Rational abs(const Rational& a) { return a.sign() < 0 ? -a : a; }

inline Rational pow(const Rational& a, unsigned long e) {
    mpq_class r;
    mpz_pow_ui(r.get_num_mpz_t(), a.raw().get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), a.raw().get_den_mpz_t(), e);
    return Rational(r);
}

inline BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

}  // namespace cbspline
