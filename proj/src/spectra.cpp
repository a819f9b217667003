#include "cbspline/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>

#include "cbspline/banded_ldlt.hpp"
#include "cbspline/scalars.hpp"

namespace cbspline {

namespace {

constexpr long kDenseOracleCutoff = 64;

// Count of leading decimal digits on which two values agree.
long agreed_digits(const BigReal& a, const BigReal& b) {
    BigReal rd = relative_difference(a, b);
    if (rd.is_zero()) {
        return static_cast<long>(static_cast<double>(std::min(a.precision(), b.precision())) * 0.30103);
    }
    double rdd = rd.to_double();
    double lg = (rdd == 0.0) ? -static_cast<double>(mpfr_get_exp(rd.raw())) * 0.30103
                             : -std::log10(std::fabs(rdd));
    return lg <= 0 ? 0 : static_cast<long>(lg);
}

}  // namespace

std::vector<BigReal> circulant_eigenvalues(const Circulant& C, mpfr_prec_t prec) {
    const long m = C.order;
    for (long j = 1; j < m; ++j) {
        if (C.first_row[static_cast<size_t>(j)] != C.first_row[static_cast<size_t>(m - j)]) {
            throw std::invalid_argument("circulant_eigenvalues: circulant is not symmetric");
        }
    }
    // Nonzero lags with their fold weight: lambda_k = c_0
    //   + sum_{0 < j < m/2} 2 c_j cos(2 pi k j / m)  (+ c_{m/2} cos(pi k), m even).
    struct Lag { long j; BigReal coeff; };
    std::vector<Lag> lags;
    for (long j = 1; 2 * j < m; ++j) {
        const Rational& c = C.first_row[static_cast<size_t>(j)];
        if (!c.is_zero()) lags.push_back({j, BigReal(Rational(2) * c, prec)});
    }
    if (m % 2 == 0 && !C.first_row[static_cast<size_t>(m / 2)].is_zero()) {
        lags.push_back({m / 2, BigReal(C.first_row[static_cast<size_t>(m / 2)], prec)});
    }

    // cos(2 pi l / m) cache over the residues l actually used.
    std::vector<std::optional<BigReal>> cos_cache(static_cast<size_t>(m));
    auto cos_res = [&](long l) -> const BigReal& {
        auto& slot = cos_cache[static_cast<size_t>(l)];
        if (!slot) slot = cos_pi_multiple(2 * l, m, prec);
        return *slot;
    };

    BigReal c0(C.first_row[0], prec);
    std::vector<BigReal> out(static_cast<size_t>(m), BigReal(prec));
    mpfr_t acc, tmp;
    mpfr_init2(acc, prec);
    mpfr_init2(tmp, prec);
    for (long k = 0; 2 * k <= m; ++k) {
        mpfr_set(acc, c0.raw(), MPFR_RNDN);
        for (const Lag& lag : lags) {
            long l = (k * lag.j) % m;
            mpfr_mul(tmp, lag.coeff.raw(), cos_res(l).raw(), MPFR_RNDN);
            mpfr_add(acc, acc, tmp, MPFR_RNDN);
        }
        BigReal v(prec);
        mpfr_set(v.raw(), acc, MPFR_RNDN);
        out[static_cast<size_t>(k)] = v;
        if (k > 0 && 2 * k < m) out[static_cast<size_t>(m - k)] = v;  // exact mirror
    }
    mpfr_clear(acc);
    mpfr_clear(tmp);
    return out;
}

GershgorinBounds gershgorin_bounds(const SplineSymbol& s) {
    GershgorinBounds g{Rational(0), Rational(1), false, Rational(0)};
    g.lower = Rational(2) * s.t(0) - Rational(1);
    g.dominant = g.lower.sign() > 0;
    if (g.dominant) g.bound = Rational(1) / g.lower;
    return g;
}

std::vector<BigReal> tridiagonal_eigenvalues(const BandedToeplitz& T, mpfr_prec_t prec) {
    if (T.bandwidth() != 1) {
        throw std::invalid_argument("tridiagonal_eigenvalues: half-bandwidth must be 1");
    }
    const long N = T.order;
    BigReal t0(T.symbol.t(0), prec);
    BigReal two_t1(Rational(2) * T.symbol.t(1), prec);
    std::vector<BigReal> out;
    out.reserve(static_cast<size_t>(N));
    for (long k = 1; k <= N; ++k) {
        out.push_back(t0 + two_t1 * cos_pi_multiple(k, N + 1, prec));
    }
    return out;
}

namespace {

enum class Extreme { smallest, largest };

BigReal bisect_extreme(BandedLdlt& kernel, const BandedToeplitz& T, Extreme which, mpfr_prec_t prec) {
    const long N = T.order;
    GershgorinBounds g = gershgorin_bounds(T.symbol);
    BigReal lo(g.lower, prec), hi(g.upper, prec);
    BigReal half(prec);
    mpfr_set_ui_2exp(half.raw(), 1, -1, MPFR_RNDN);
    BigReal rel_tol = pow2(-static_cast<long>(prec) / 2, prec);

    const long cap = static_cast<long>(prec) + 64;
    for (long it = 0; it < cap; ++it) {
        BigReal mid = (lo + hi) * half;
        std::optional<long> nu;
        BigReal probe = mid;
        // A breakdown means the probe landed within the tiny-pivot zone of an
        // eigenvalue (the first midpoint hits t_0 exactly, for instance). The
        // escape step must clear the 2^{-3 prec / 4} pivot threshold while
        // staying far below the convergence tolerance, and grows per retry.
        for (int retry = 0; retry < 8 && !nu; ++retry) {
            nu = kernel.negative_pivots(probe);
            if (!nu) {
                probe = mid + (hi - lo) * pow2(-static_cast<long>(prec) / 2 - 40 + 8 * retry, prec);
            }
        }
        if (!nu) throw std::runtime_error("bisection: persistent pivot breakdown");
        if (which == Extreme::smallest) {
            if (*nu == 0) lo = probe; else hi = probe;
        } else {
            if (*nu == N) hi = probe; else lo = probe;
        }
        const BigReal& anchor = (which == Extreme::smallest) ? lo : hi;
        if (anchor.sign() > 0 && hi - lo <= anchor * rel_tol) {
            return (lo + hi) * half;
        }
    }
    throw std::runtime_error("bisection: no convergence within iteration cap (precision too low?)");
}

std::pair<BigReal, BigReal> extremes_at(const BandedToeplitz& T, mpfr_prec_t prec) {
    BandedLdlt kernel(T, prec);
    BigReal lmin = bisect_extreme(kernel, T, Extreme::smallest, prec);
    BigReal lmax = bisect_extreme(kernel, T, Extreme::largest, prec);
    return {lmin, lmax};
}

}  // namespace

SpectrumReport extreme_eigenvalues_bisection(const BandedToeplitz& T, mpfr_prec_t prec) {
    auto [lmin, lmax] = extremes_at(T, prec);
    auto [lmin2, lmax2] = extremes_at(T, 2 * prec);
    SpectrumReport rep{lmin, lmax, lmax / lmin, SpectrumMethod::bisection, prec, 0};
    rep.certified_digits = std::min(agreed_digits(lmin, lmin2), agreed_digits(lmax, lmax2));
    return rep;
}

namespace {

std::pair<BigReal, BigReal> circulant_singular_extremes(const Circulant& C, mpfr_prec_t prec) {
    std::vector<BigReal> lam = circulant_eigenvalues(C, prec);
    BigReal smin = abs(lam[0]), smax = abs(lam[0]);
    for (const BigReal& l : lam) {
        BigReal a = abs(l);
        if (a < smin) smin = a;
        if (a > smax) smax = a;
    }
    return {smin, smax};
}

}  // namespace

SpectrumReport circulant_condition(const Circulant& C, mpfr_prec_t prec) {
    auto [smin, smax] = circulant_singular_extremes(C, prec);
    if (smin < pow2(-static_cast<long>(prec) / 2, prec)) {
        throw std::runtime_error("circulant_condition: circulant is numerically singular");
    }
    auto [smin2, smax2] = circulant_singular_extremes(C, 2 * prec);
    SpectrumReport rep{smin, smax, smax / smin, SpectrumMethod::circulant_dft, prec, 0};
    rep.certified_digits = std::min(agreed_digits(smin, smin2), agreed_digits(smax, smax2));
    return rep;
}

std::vector<BigReal> dense_symmetric_eigenvalues(const std::vector<std::vector<BigReal>>& A0,
                                                 mpfr_prec_t prec) {
    const long n = static_cast<long>(A0.size());
    if (n > kDenseOracleCutoff) {
        throw std::invalid_argument("dense_symmetric_eigenvalues: order exceeds oracle cutoff 64");
    }
    if (n == 0) return {};
    std::vector<std::vector<BigReal>> A(A0);
    for (auto& row : A) {
        if (static_cast<long>(row.size()) != n) {
            throw std::invalid_argument("dense_symmetric_eigenvalues: matrix not square");
        }
        for (auto& e : row) {
            BigReal t(e);
            mpfr_prec_round(t.raw(), prec, MPFR_RNDN);
            e = std::move(t);
        }
    }

    BigReal one(1L, prec), two(2L, prec);
    BigReal stop = pow2(-static_cast<long>(prec) + 8, prec);
    for (int sweep = 0; sweep < 64; ++sweep) {
        // off-diagonal magnitude
        BigReal off(prec), scale(prec);
        for (long p = 0; p < n; ++p) {
            scale = scale + abs(A[p][p]);
            for (long q = p + 1; q < n; ++q) off = off + abs(A[p][q]);
        }
        if (scale.is_zero()) scale = one;
        if (off <= stop * scale) break;

        for (long p = 0; p < n; ++p) {
            for (long q = p + 1; q < n; ++q) {
                if (A[p][q].is_zero()) continue;
                BigReal theta = (A[q][q] - A[p][p]) / (two * A[p][q]);
                BigReal t = one / (abs(theta) + sqrt(theta * theta + one));
                if (theta.sign() < 0) t = -t;
                BigReal c = one / sqrt(t * t + one);
                BigReal s = t * c;
                // Rotate rows/columns p and q.
                for (long i = 0; i < n; ++i) {
                    BigReal aip = A[i][p], aiq = A[i][q];
                    A[i][p] = c * aip - s * aiq;
                    A[i][q] = s * aip + c * aiq;
                }
                for (long i = 0; i < n; ++i) {
                    BigReal api = A[p][i], aqi = A[q][i];
                    A[p][i] = c * api - s * aqi;
                    A[q][i] = s * api + c * aqi;
                }
            }
        }
    }
    std::vector<BigReal> eig;
    eig.reserve(static_cast<size_t>(n));
    for (long i = 0; i < n; ++i) eig.push_back(A[i][i]);
    std::sort(eig.begin(), eig.end());
    return eig;
}

std::vector<BigReal> dense_toeplitz_eigenvalues(const BandedToeplitz& T, mpfr_prec_t prec) {
    const long n = T.order;
    std::vector<std::vector<BigReal>> A(static_cast<size_t>(n),
                                        std::vector<BigReal>(static_cast<size_t>(n), BigReal(prec)));
    for (long i = 0; i < n; ++i) {
        for (long j = 0; j < n; ++j) {
            A[static_cast<size_t>(i)][static_cast<size_t>(j)] = BigReal(T.entry(i, j), prec);
        }
    }
    return dense_symmetric_eigenvalues(A, prec);
}

InterlaceReport interlace_check(const BandedToeplitz& T, const Circulant& C, mpfr_prec_t prec) {
    const long N = T.order;
    const long m = C.order;
    if (m < N) throw std::invalid_argument("interlace_check: circulant smaller than Toeplitz block");
    const long ell = m - N;

    std::vector<BigReal> sc;
    for (const BigReal& l : circulant_eigenvalues(C, prec)) sc.push_back(abs(l));
    std::sort(sc.begin(), sc.end(), [](const BigReal& a, const BigReal& b) { return a > b; });

    std::vector<BigReal> st;
    for (const BigReal& l : dense_toeplitz_eigenvalues(T, prec)) st.push_back(abs(l));
    std::sort(st.begin(), st.end(), [](const BigReal& a, const BigReal& b) { return a > b; });

    InterlaceReport rep{true, BigReal(prec)};
    bool first = true;
    BigReal zero(prec);
    for (long k = 0; k < N; ++k) {
        BigReal upper = sc[static_cast<size_t>(k)] - st[static_cast<size_t>(k)];
        BigReal lower = (k + ell < m) ? st[static_cast<size_t>(k)] - sc[static_cast<size_t>(k + ell)]
                                      : st[static_cast<size_t>(k)];
        BigReal margin = std::min(upper, lower);
        if (first || margin < rep.worst_margin) rep.worst_margin = margin;
        first = false;
    }
    BigReal tol = pow2(-static_cast<long>(prec) / 2, prec);
    rep.pass = rep.worst_margin >= -tol;
    return rep;
}

std::string format_significant(const BigReal& x, int digits) {
    if (digits < 1) throw std::invalid_argument("format_significant: digits must be >= 1");
    if (x.is_zero()) {
        std::string s = "0.";
        s.append(static_cast<size_t>(digits - 1), '0');
        return s;
    }
    mpfr_exp_t e = 0;
    char* raw = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(digits), x.raw(), MPFR_RNDN);
    std::string d(raw);
    mpfr_free_str(raw);
    std::string sign;
    if (!d.empty() && d[0] == '-') {
        sign = "-";
        d.erase(0, 1);
    }
    // value = 0.d * 10^e
    std::string out;
    if (e <= 0) {
        out = "0.";
        out.append(static_cast<size_t>(-e), '0');
        out += d;
    } else if (e >= static_cast<mpfr_exp_t>(d.size())) {
        out = d;
        out.append(static_cast<size_t>(e) - d.size(), '0');
    } else {
        out = d.substr(0, static_cast<size_t>(e)) + "." + d.substr(static_cast<size_t>(e));
    }
    return sign + out;
}

}  // namespace cbspline
