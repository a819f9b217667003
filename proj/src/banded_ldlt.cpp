#include "cbspline/banded_ldlt.hpp"

#include <algorithm>

namespace cbspline {

BandedLdlt::BandedLdlt(const BandedToeplitz& T, mpfr_prec_t prec)
    : n_(T.order), bw_(T.bandwidth()), prec_(prec) {
    diag_.resize(static_cast<size_t>(bw_) + 1);
    for (int k = 0; k <= bw_; ++k) {
        mpfr_init2(&diag_[static_cast<size_t>(k)], prec_);
        mpfr_set_q(&diag_[static_cast<size_t>(k)], T.symbol.t(k).raw().get_mpq_t(), MPFR_RNDN);
    }
    fac_.resize(static_cast<size_t>(bw_ + 1) * static_cast<size_t>(n_));
    for (auto& m : fac_) mpfr_init2(&m, prec_);
    v_.resize(static_cast<size_t>(std::max(bw_, 1)));
    for (auto& m : v_) mpfr_init2(&m, prec_);
    mpfr_init2(tmp_, prec_);
    mpfr_init2(acc_, prec_);
    mpfr_init2(tiny_, prec_);
    mpfr_set_ui_2exp(tiny_, 1, -(3 * static_cast<long>(prec_)) / 4, MPFR_RNDN);
}

BandedLdlt::~BandedLdlt() {
    for (auto& m : diag_) mpfr_clear(&m);
    for (auto& m : fac_) mpfr_clear(&m);
    for (auto& m : v_) mpfr_clear(&m);
    mpfr_clear(tmp_);
    mpfr_clear(acc_);
    mpfr_clear(tiny_);
}

bool BandedLdlt::factor(mpfr_srcptr shift, long* negatives) {
    const long n = n_;
    const long bw = bw_;
    long neg = 0;
    __mpfr_struct* fac = fac_.data();
    auto L = [&](long i, long j) -> mpfr_ptr { return fac + static_cast<size_t>((i - j) * n + j); };
    auto D = [&](long j) -> mpfr_ptr { return fac + static_cast<size_t>(j); };

    for (long j = 0; j < n; ++j) {
        long lo = std::max(0L, j - bw);
        // v_c = L(j,c) * D(c) for the active columns c = lo..j-1
        for (long c = lo; c < j; ++c) {
            mpfr_mul(&v_[static_cast<size_t>(c - lo)], L(j, c), D(c), MPFR_RNDN);
        }
        // pivot d_j = t_0 - shift - sum L(j,c) v_c
        mpfr_sub(acc_, &diag_[0], shift, MPFR_RNDN);
        for (long c = lo; c < j; ++c) {
            mpfr_mul(tmp_, L(j, c), &v_[static_cast<size_t>(c - lo)], MPFR_RNDN);
            mpfr_sub(acc_, acc_, tmp_, MPFR_RNDN);
        }
        mpfr_abs(tmp_, acc_, MPFR_RNDN);
        if (mpfr_cmp(tmp_, tiny_) < 0) return false;
        if (mpfr_sgn(acc_) < 0) ++neg;
        mpfr_set(D(j), acc_, MPFR_RNDN);

        long hi = std::min(n - 1, j + bw);
        for (long i = j + 1; i <= hi; ++i) {
            mpfr_set(acc_, &diag_[static_cast<size_t>(i - j)], MPFR_RNDN);
            for (long c = std::max(lo, i - bw); c < j; ++c) {
                mpfr_mul(tmp_, L(i, c), &v_[static_cast<size_t>(c - lo)], MPFR_RNDN);
                mpfr_sub(acc_, acc_, tmp_, MPFR_RNDN);
            }
            mpfr_div(L(i, j), acc_, D(j), MPFR_RNDN);
        }
    }
    if (negatives) *negatives = neg;
    return true;
}

std::optional<long> BandedLdlt::negative_pivots(const BigReal& shift) {
    long neg = 0;
    if (!factor(shift.raw(), &neg)) return std::nullopt;
    return neg;
}

bool BandedLdlt::solve(const std::vector<BigReal>& b, std::vector<BigReal>& x) {
    mpfr_t zero;
    mpfr_init2(zero, prec_);
    mpfr_set_zero(zero, 1);
    bool ok = factor(zero, nullptr);
    mpfr_clear(zero);
    if (!ok) return false;

    const long n = n_;
    const long bw = bw_;
    __mpfr_struct* fac = fac_.data();
    auto L = [&](long i, long j) -> mpfr_ptr { return fac + static_cast<size_t>((i - j) * n + j); };
    auto D = [&](long j) -> mpfr_ptr { return fac + static_cast<size_t>(j); };

    x.assign(b.begin(), b.end());
    for (auto& xi : x) {
        BigReal t(xi);  // re-round to working precision
        mpfr_prec_round(t.raw(), prec_, MPFR_RNDN);
        xi = std::move(t);
    }
    // L y = b
    for (long j = 0; j < n; ++j) {
        for (long i = j + 1; i <= std::min(n - 1, j + bw); ++i) {
            mpfr_mul(tmp_, L(i, j), x[static_cast<size_t>(j)].raw(), MPFR_RNDN);
            mpfr_sub(x[static_cast<size_t>(i)].raw(), x[static_cast<size_t>(i)].raw(), tmp_, MPFR_RNDN);
        }
    }
    // D w = y
    for (long j = 0; j < n; ++j) {
        mpfr_div(x[static_cast<size_t>(j)].raw(), x[static_cast<size_t>(j)].raw(), D(j), MPFR_RNDN);
    }
    // L^T x = w
    for (long j = n - 1; j >= 0; --j) {
        for (long i = j + 1; i <= std::min(n - 1, j + bw); ++i) {
            mpfr_mul(tmp_, L(i, j), x[static_cast<size_t>(i)].raw(), MPFR_RNDN);
            mpfr_sub(x[static_cast<size_t>(j)].raw(), x[static_cast<size_t>(j)].raw(), tmp_, MPFR_RNDN);
        }
    }
    return true;
}

}  // namespace cbspline
