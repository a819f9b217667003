#include "cbspline/toeplitz.hpp"

#include <stdexcept>

#include "cbspline/banded_ldlt.hpp"
#include "cbspline/scalars.hpp"

namespace cbspline {

BandedToeplitz build_toeplitz(unsigned d, long n) {
    const SplineSymbol& s = symbol(d);
    long order = n - static_cast<long>(d);
    if (order < s.half_bandwidth + 1) {
        throw std::invalid_argument("build_toeplitz: order " + std::to_string(order) +
                                    " too small for half-bandwidth " + std::to_string(s.half_bandwidth));
    }
    return BandedToeplitz{s, order};
}

Circulant periodize(const BandedToeplitz& T) {
    long m = T.order + T.bandwidth();
    Circulant C;
    C.order = m;
    C.first_row.assign(static_cast<size_t>(m), Rational(0));
    for (int j = 0; j <= T.bandwidth(); ++j) {
        C.first_row[static_cast<size_t>(j)] = T.symbol.t(j);
        if (j > 0) C.first_row[static_cast<size_t>(m - j)] = T.symbol.t(j);
    }
    return C;
}

EmbeddingPlan prime_embedding_order(unsigned d, long n) {
    const SplineSymbol& s = symbol(d);
    long r = s.half_bandwidth;
    if (n - static_cast<long>(d) < r + 1) {
        throw std::invalid_argument("prime_embedding_order: n too small for degree");
    }
    long p = n;
    while (!is_prime(static_cast<std::uint64_t>(p - static_cast<long>(d) + r))) ++p;
    EmbeddingPlan plan;
    plan.kind = EmbeddingKind::prime_periodization;
    plan.source_order = n - static_cast<long>(d);
    plan.target_order = p - static_cast<long>(d) + r;
    plan.guarantee = EmbeddingGuarantee::nonsingular;
    return plan;
}

FerreiraEmbedding ferreira_embed(const BandedToeplitz& T, mpfr_prec_t prec) {
    const long N = T.order;
    const int r = T.bandwidth();
    FerreiraEmbedding out{Circulant{}, BigReal(prec)};

    // Doubled-order circulant with the same symbol; the S block of the
    // block form [[T, S], [S, T]] appears automatically.
    Circulant& C = out.circulant;
    C.order = 2 * N;
    C.first_row.assign(static_cast<size_t>(2 * N), Rational(0));
    for (int j = 0; j <= r; ++j) {
        C.first_row[static_cast<size_t>(j)] = T.symbol.t(j);
        if (j > 0) C.first_row[static_cast<size_t>(2 * N - j)] = T.symbol.t(j);
    }

    // b = (t_0, ..., t_{N-1}) and c = (t_{N-1}, ..., t_1) zero-padded beyond
    // lag r; c is one entry short of the order and is padded with a trailing
    // zero before the solve.
    std::vector<BigReal> c(static_cast<size_t>(N), BigReal(prec));
    for (long i = 0; i < N - 1; ++i) {
        long lag = N - 1 - i;
        if (lag <= r) c[static_cast<size_t>(i)] = BigReal(T.symbol.t(static_cast<int>(lag)), prec);
    }
    BandedLdlt kernel(T, prec);
    std::vector<BigReal> y;
    if (!kernel.solve(c, y)) {
        throw std::runtime_error("ferreira_embed: factorization breakdown (T numerically singular)");
    }
    BigReal dot(prec);
    for (long i = 0; i <= r && i < N; ++i) {
        dot = dot + BigReal(T.symbol.t(static_cast<int>(i)), prec) * y[static_cast<size_t>(i)];
    }
    out.condition_value = abs(dot);

    BigReal margin = BigReal(1L, prec) - pow2(-static_cast<long>(prec) / 4, prec);
    if (out.condition_value < margin) {
        out.certified_psd = true;
    } else if (out.condition_value < BigReal(1L, prec)) {
        out.indeterminate = true;  // inside the certification margin
    }
    return out;
}

long dms_order(long n, const BigReal& kappa) {
    if (n <= 0) return 0;
    if (kappa < BigReal(1L, kappa.precision())) throw std::invalid_argument("dms_order: kappa must be >= 1");
    mpfr_prec_t prec = kappa.precision();
    BigReal nn(n, prec);
    BigReal expr = BigReal(2L, prec) * (nn + kappa * nn * nn / sqrt(BigReal(6L, prec)));
    mpfr_t c;
    mpfr_init2(c, prec);
    mpfr_ceil(c, expr.raw());
    long m = mpfr_get_si(c, MPFR_RNDN);
    mpfr_clear(c);
    return m;
}

long newsam_dietrich_order(long n, const BigReal& kappa) {
    if (n <= 0) return 0;
    if (kappa < BigReal(1L, kappa.precision())) {
        throw std::invalid_argument("newsam_dietrich_order: kappa must be >= 1");
    }
    mpfr_prec_t prec = kappa.precision();
    BigReal nn(n, prec);
    // 3 * 2^{11/2} / 5^{5/2}
    BigReal coeff = BigReal(3L, prec) * sqrt(BigReal(2048L, prec)) / sqrt(BigReal(3125L, prec));
    BigReal n52 = nn * nn * sqrt(nn);
    BigReal expr = BigReal(2L, prec) * sqrt(BigReal(6L, prec) * nn * nn + kappa * coeff * n52);
    mpfr_t c;
    mpfr_init2(c, prec);
    mpfr_ceil(c, expr.raw());
    long m = mpfr_get_si(c, MPFR_RNDN);
    mpfr_clear(c);
    return m;
}

}  // namespace cbspline
