#pragma once

#include <optional>
#include <vector>

#include "cbspline/bigreal.hpp"
#include "cbspline/toeplitz.hpp"

namespace cbspline {

// LDL^T machinery for shifted banded symmetric Toeplitz matrices, kept on raw
// MPFR storage because it sits in the innermost loop of the bisection
// eigensolver. No pivoting; a pivot with |d_j| < 2^{-3 prec / 4} is reported
// as a breakdown and the caller perturbs the shift.
class BandedLdlt {
public:
    BandedLdlt(const BandedToeplitz& T, mpfr_prec_t prec);
    ~BandedLdlt();

    BandedLdlt(const BandedLdlt&) = delete;
    BandedLdlt& operator=(const BandedLdlt&) = delete;

    long order() const { return n_; }
    int bandwidth() const { return bw_; }
    mpfr_prec_t precision() const { return prec_; }

    // Factor T - shift*I and return the number of negative pivots
    // (the count of eigenvalues below the shift), or nullopt on breakdown.
    std::optional<long> negative_pivots(const BigReal& shift);

    // Factor T (unshifted) and solve T x = b. Returns false on breakdown.
    bool solve(const std::vector<BigReal>& b, std::vector<BigReal>& x);

private:
    bool factor(mpfr_srcptr shift, long* negatives);

    long n_;
    int bw_;
    mpfr_prec_t prec_;
    // mpfr_t is an array type and cannot live in a std::vector, so the
    // buffers hold the underlying struct and hand out pointers.
    std::vector<__mpfr_struct> diag_;  // symbol values t_0..t_bw at prec
    std::vector<__mpfr_struct> fac_;   // (bw+1) x n band: row 0 pivots, row k subdiagonal k
    std::vector<__mpfr_struct> v_;     // scaled-column scratch, length bw
    mpfr_t tmp_, acc_, tiny_;
};

}  // namespace cbspline
