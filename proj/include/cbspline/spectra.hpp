#pragma once

#include <vector>

#include "cbspline/bigreal.hpp"
#include "cbspline/toeplitz.hpp"

namespace cbspline {

enum class SpectrumMethod { circulant_dft, bisection, tridiagonal_closed_form, gershgorin };

struct SpectrumReport {
    BigReal lambda_min;
    BigReal lambda_max;
    BigReal condition;
    SpectrumMethod method = SpectrumMethod::bisection;
    mpfr_prec_t precision = kDefaultPrecision;
    long certified_digits = 0;  // leading decimal digits agreeing with the doubled-precision run
};

struct GershgorinBounds {
    Rational lower;       // 2 t_0 - 1, exact
    Rational upper;       // 1, exact
    bool dominant;        // lower > 0
    Rational bound;       // GB(d) = 1 / (2 t_0 - 1) when dominant, else 0
};

// All m eigenvalues of a symmetric circulant, in DFT index order k = 0..m-1:
// lambda_k = c_0 + sum_j c_j cos(2 pi k j / m), rational coefficients and
// exactly reduced cosine arguments. lambda_k and lambda_{m-k} are bitwise
// identical by construction.
std::vector<BigReal> circulant_eigenvalues(const Circulant& C, mpfr_prec_t prec = kDefaultPrecision);

GershgorinBounds gershgorin_bounds(const SplineSymbol& s);

// Closed-form eigenvalues for half-bandwidth 1 (d = 2, 3):
// lambda_k = t_0 + 2 t_1 cos(pi k / (order + 1)), k = 1..order.
std::vector<BigReal> tridiagonal_eigenvalues(const BandedToeplitz& T, mpfr_prec_t prec = kDefaultPrecision);

// Extreme eigenvalues by Sylvester-inertia bisection on the Gershgorin
// interval [2 t_0 - 1, 1]; relative error <= 2^{-prec/2}. The report is
// certified by a doubled-precision recomputation.
SpectrumReport extreme_eigenvalues_bisection(const BandedToeplitz& T, mpfr_prec_t prec = kDefaultPrecision);

// sigma_max / sigma_min of a symmetric circulant via |lambda_k|.
// Throws if min |lambda_k| < 2^{-prec/2} (numerically singular).
SpectrumReport circulant_condition(const Circulant& C, mpfr_prec_t prec = kDefaultPrecision);

// Dense symmetric eigensolver (cyclic Jacobi) used as the independent
// cross-check oracle on small instances; order capped at 64.
std::vector<BigReal> dense_symmetric_eigenvalues(const std::vector<std::vector<BigReal>>& A,
                                                 mpfr_prec_t prec = kDefaultPrecision);
std::vector<BigReal> dense_toeplitz_eigenvalues(const BandedToeplitz& T, mpfr_prec_t prec = kDefaultPrecision);

// Cauchy interlacing of singular values: sigma_k(C) >= sigma_k(T) >=
// sigma_{k+l}(C) with l = C.order - T.order, checked densely (order <= 64).
struct InterlaceReport {
    bool pass = false;
    BigReal worst_margin;  // smallest slack over all comparisons (negative on failure)
};
InterlaceReport interlace_check(const BandedToeplitz& T, const Circulant& C,
                                mpfr_prec_t prec = kDefaultPrecision);

// Round-half-even to `digits` significant decimal digits, fixed notation
// (matches the formatting of the reference tables).
std::string format_significant(const BigReal& x, int digits);

}  // namespace cbspline
