#pragma once

#include <set>
#include <vector>

#include "cbspline/bigreal.hpp"
#include "cbspline/rational.hpp"
#include "cbspline/splines.hpp"

namespace cbspline {

// Euler polynomial E_n(x), exact coefficients in ascending powers.
struct EulerPolynomial {
    unsigned n = 0;
    std::vector<Rational> coefficients;

    Rational eval(const Rational& x) const;
};

// Tangent numbers T_1, T_3, ..., T_{2*k_max+1} by the integer-only
// boustrophedon (Seidel) recurrence; no cancellation occurs.
std::vector<BigInt> tangent_numbers(unsigned k_max);

// Euler (secant) numbers E_0, E_2, ..., E_{2*k_max}, all positive.
std::vector<BigInt> euler_numbers(unsigned k_max);

EulerPolynomial euler_polynomial(unsigned n);

// Alternating binomial sums of Euler polynomial values,
// sum_l (-1)^l C(d+1, l) E_n(l) and the shifted variant E_n(l + 1).
// Both vanish exactly for all n = 0..d.
Rational lemma_sum_A(unsigned d, unsigned n);
Rational lemma_sum_B(unsigned d, unsigned n);

// Limiting minimal circulant eigenvalue: alternating symbol sum
// t_0 + 2 sum_j (-1)^j t_j, exact.
Rational lambda_infinity_sum(unsigned d);

// The same value from the integer sequences: T_d / d! for odd d,
// E_d / d! for even d.
Rational lambda_infinity_theorem(unsigned d);

struct ConjectureVerdict {
    unsigned d = 0;
    long n = 0;
    long m = 0;
    std::set<long> min_index_set;
    std::set<long> predicted_indices;  // {m/2} or {(m-1)/2, (m+1)/2}
    bool positive_definite = false;
    bool agrees = false;
    BigReal margin;  // gap from the minimal eigenvalue to the next distinct one
};

// Audits the minimal-eigenvalue conjecture on C_m^d: positivity of all
// eigenvalues, location of the argmin set (near-ties re-examined at doubled
// precision), and for even m the exact rational identity between the middle
// eigenvalue and the limiting value. A disagreement is reported, not thrown.
ConjectureVerdict conjecture_audit(unsigned d, long n, mpfr_prec_t prec = kDefaultPrecision);

struct ConvexityReport {
    bool convex = true;
    long first_violation_index = -1;
};

// Second differences of the zero-extended symbol sequence.
ConvexityReport convexity_check(const SplineSymbol& s);

}  // namespace cbspline
