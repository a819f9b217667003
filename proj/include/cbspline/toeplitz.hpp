#pragma once

#include <utility>
#include <vector>

#include "cbspline/bigreal.hpp"
#include "cbspline/rational.hpp"
#include "cbspline/splines.hpp"

namespace cbspline {

// Banded symmetric Toeplitz collocation matrix T_n^d of order n - d.
// Entries live in the symbol; the matrix is never stored densely.
struct BandedToeplitz {
    SplineSymbol symbol;
    long order = 0;

    int bandwidth() const { return symbol.half_bandwidth; }
    Rational entry(long i, long j) const {
        long k = i >= j ? i - j : j - i;
        if (k > symbol.half_bandwidth) return Rational(0);
        return symbol.t(static_cast<int>(k));
    }
};

// Symmetric circulant stored by its first row (c_j = c_{m-j}).
struct Circulant {
    long order = 0;
    std::vector<Rational> first_row;

    Rational entry(long i, long j) const {
        long k = (j - i) % order;
        if (k < 0) k += order;
        return first_row[static_cast<size_t>(k)];
    }
};

enum class EmbeddingKind { periodization, prime_periodization, ferreira, dms, newsam_dietrich };
enum class EmbeddingGuarantee { none, nonsingular, positive_semidefinite };

struct EmbeddingPlan {
    EmbeddingKind kind;
    long source_order = 0;
    long target_order = 0;
    EmbeddingGuarantee guarantee = EmbeddingGuarantee::none;
};

// T_n^d of order n - d; requires n - d >= r + 1 so the band fits.
BandedToeplitz build_toeplitz(unsigned d, long n);

// Smallest circulant C_m^d, m = (n - d) + r, whose leading principal block
// of order n - d is T after deleting the last r rows and columns.
Circulant periodize(const BandedToeplitz& T);

// Smallest p >= n such that m = p - d + r is prime; the resulting prime-order
// periodization is provably nonsingular.
EmbeddingPlan prime_embedding_order(unsigned d, long n);

// Circulant of doubled order 2(n - d) with the same symbol, plus the value
// |b^T T^{-1} c| whose being < 1 is the sufficient condition for positive
// semidefiniteness. The strict inequality is only certified with a margin of
// 2^{-prec/4}; values inside the margin are indeterminate at this precision.
struct FerreiraEmbedding {
    Circulant circulant;
    BigReal condition_value;
    bool certified_psd = false;
    bool indeterminate = false;
};
FerreiraEmbedding ferreira_embed(const BandedToeplitz& T, mpfr_prec_t prec = kDefaultPrecision);

// Smallest circulant order m >= 2(n + kappa n^2 / sqrt(6)) guaranteeing a
// positive semidefinite embedding of a positive definite Toeplitz matrix of
// order n with condition number kappa.
long dms_order(long n, const BigReal& kappa);

// Smallest m >= 2 sqrt(6 n^2 + kappa 3 * 2^{11/2} n^{5/2} / 5^{5/2}).
long newsam_dietrich_order(long n, const BigReal& kappa);

}  // namespace cbspline
