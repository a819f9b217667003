#include "cbspline/theory.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include "cbspline/spectra.hpp"
#include "cbspline/toeplitz.hpp"

namespace cbspline {

namespace {

// Zigzag (Euler up/down) numbers Z_0..Z_n via the Seidel boustrophedon
// triangle: Z_{2k+1} = T_{2k+1}, Z_{2k} = E_{2k}. Integer-only.
std::vector<BigInt> zigzag_numbers(unsigned n_max) {
    std::vector<BigInt> zig;
    zig.reserve(n_max + 1);
    std::vector<BigInt> prev{BigInt(1)};
    zig.push_back(BigInt(1));
    for (unsigned n = 1; n <= n_max; ++n) {
        std::vector<BigInt> cur(n + 1, BigInt(0));
        for (unsigned k = 1; k <= n; ++k) cur[k] = cur[k - 1] + prev[n - k];
        zig.push_back(cur[n]);
        prev = std::move(cur);
    }
    return zig;
}

}  // namespace

std::vector<BigInt> tangent_numbers(unsigned k_max) {
    std::vector<BigInt> zig = zigzag_numbers(2 * k_max + 1);
    std::vector<BigInt> out;
    out.reserve(k_max + 1);
    for (unsigned k = 0; k <= k_max; ++k) out.push_back(zig[2 * k + 1]);
    return out;
}

std::vector<BigInt> euler_numbers(unsigned k_max) {
    std::vector<BigInt> zig = zigzag_numbers(2 * k_max);
    std::vector<BigInt> out;
    out.reserve(k_max + 1);
    for (unsigned k = 0; k <= k_max; ++k) out.push_back(zig[2 * k]);
    return out;
}

Rational EulerPolynomial::eval(const Rational& x) const {
    Rational acc(0);
    for (size_t i = coefficients.size(); i-- > 0;) {
        acc = acc * x + coefficients[i];
    }
    return acc;
}

namespace {

std::mutex g_poly_mutex;
std::vector<EulerPolynomial> g_polys;  // g_polys[n] = E_n

// E_n(x) = x^n - (1/2) sum_{k<n} C(n,k) E_k(x), from the generating function.
void extend_euler_polynomials(unsigned n) {
    if (g_polys.empty()) {
        g_polys.push_back(EulerPolynomial{0, {Rational(1)}});
    }
    while (g_polys.size() <= n) {
        unsigned m = static_cast<unsigned>(g_polys.size());
        std::vector<Rational> coeff(m + 1, Rational(0));
        coeff[m] = Rational(1);
        Rational half(1, 2);
        for (unsigned k = 0; k < m; ++k) {
            Rational w = half * Rational(binomial(m, k));
            const auto& ek = g_polys[k].coefficients;
            for (size_t i = 0; i < ek.size(); ++i) coeff[i] -= w * ek[i];
        }
        g_polys.push_back(EulerPolynomial{m, std::move(coeff)});
    }
}

}  // namespace

EulerPolynomial euler_polynomial(unsigned n) {
    std::lock_guard lock(g_poly_mutex);
    extend_euler_polynomials(n);
    return g_polys[n];
}

Rational lemma_sum_A(unsigned d, unsigned n) {
    EulerPolynomial en = euler_polynomial(n);
    Rational sum(0);
    for (unsigned l = 0; l <= d + 1; ++l) {
        Rational term = Rational(binomial(d + 1, l)) * en.eval(Rational(static_cast<long>(l)));
        if (l % 2 == 0) sum += term;
        else sum -= term;
    }
    return sum;
}

Rational lemma_sum_B(unsigned d, unsigned n) {
    EulerPolynomial en = euler_polynomial(n);
    Rational sum(0);
    for (unsigned l = 0; l <= d + 1; ++l) {
        Rational term = Rational(binomial(d + 1, l)) * en.eval(Rational(static_cast<long>(l) + 1));
        if (l % 2 == 0) sum += term;
        else sum -= term;
    }
    return sum;
}

Rational lambda_infinity_sum(unsigned d) {
    const SplineSymbol& s = symbol(d);
    Rational sum = s.t(0);
    for (int j = 1; j <= s.half_bandwidth; ++j) {
        Rational term = Rational(2) * s.t(j);
        if (j % 2 == 0) sum += term;
        else sum -= term;
    }
    return sum;
}

Rational lambda_infinity_theorem(unsigned d) {
    if (d == 0) return Rational(1);
    BigInt num;
    if (d % 2 == 1) {
        num = tangent_numbers((d - 1) / 2).back();
    } else {
        num = euler_numbers(d / 2).back();
    }
    return Rational(num, factorial(d));
}

ConjectureVerdict conjecture_audit(unsigned d, long n, mpfr_prec_t prec) {
    BandedToeplitz T = build_toeplitz(d, n);
    Circulant C = periodize(T);
    const long m = C.order;

    ConjectureVerdict v;
    v.d = d;
    v.n = n;
    v.m = m;
    v.margin = BigReal(prec);
    v.predicted_indices = (m % 2 == 0) ? std::set<long>{m / 2}
                                       : std::set<long>{(m - 1) / 2, (m + 1) / 2};

    auto classify = [&](mpfr_prec_t P, std::set<long>& ties, BigReal& margin, BigReal& lmin,
                        bool& has_near) {
        std::vector<BigReal> lam = circulant_eigenvalues(C, P);
        lmin = lam[0];
        for (const BigReal& l : lam) {
            if (l < lmin) lmin = l;
        }
        BigReal tol = pow2(-static_cast<long>(P) / 2, P) * abs(lmin);
        ties.clear();
        has_near = false;
        bool have_margin = false;
        for (long k = 0; k < m; ++k) {
            const BigReal& l = lam[static_cast<size_t>(k)];
            if (l == lmin) {
                ties.insert(k);
            } else {
                if (l - lmin <= tol) has_near = true;
                BigReal gap = l - lmin;
                if (!have_margin || gap < margin) margin = gap;
                have_margin = true;
            }
        }
        if (!have_margin) margin = BigReal(P);
        return lmin;
    };

    std::set<long> ties;
    BigReal lmin(prec);
    bool has_near = false;
    classify(prec, ties, v.margin, lmin, has_near);
    if (has_near) {
        // Near-ties are re-examined at doubled precision before calling them.
        classify(2 * prec, ties, v.margin, lmin, has_near);
    }
    v.min_index_set = ties;
    v.positive_definite = lmin.sign() > 0;
    v.agrees = (v.min_index_set == v.predicted_indices);

    if (m % 2 == 0) {
        // Even m: the middle eigenvalue is the exact alternating row sum,
        // which must equal the limiting value as rationals.
        Rational mid(0);
        for (long j = 0; j < m; ++j) {
            Rational term = C.first_row[static_cast<size_t>(j)];
            if (j % 2 == 0) mid += term;
            else mid -= term;
        }
        if (mid != lambda_infinity_sum(d)) v.agrees = false;
    }
    return v;
}

ConvexityReport convexity_check(const SplineSymbol& s) {
    const int r = s.half_bandwidth;
    auto a = [&](long j) -> Rational {
        return (j >= 0 && j <= r) ? s.t(static_cast<int>(j)) : Rational(0);
    };
    ConvexityReport rep;
    for (long j = 0; j <= r + 2; ++j) {
        Rational d2 = a(j) - Rational(2) * a(j + 1) + a(j + 2);
        if (d2.sign() < 0) {
            rep.convex = false;
            rep.first_violation_index = j;
            break;
        }
    }
    return rep;
}

}  // namespace cbspline
