#include <doctest.h>

#include "cbspline/spectra.hpp"
#include "cbspline/scalars.hpp"

using namespace cbspline;

namespace {

bool rel_close(const BigReal& a, const BigReal& b, long bits) {
    return relative_difference(a, b) <= pow2(-bits, a.precision());
}

}  // namespace

TEST_CASE("gershgorin bounds and dominance window") {
    CHECK(gershgorin_bounds(symbol(2)).bound == Rational(2));
    CHECK(gershgorin_bounds(symbol(3)).bound == Rational(3));
    CHECK(gershgorin_bounds(symbol(4)).bound == Rational(96, 19));
    CHECK(gershgorin_bounds(symbol(5)).bound == Rational(10));
    CHECK(gershgorin_bounds(symbol(6)).bound == Rational(5760, 127));
    for (unsigned d = 1; d <= 6; ++d) CHECK(gershgorin_bounds(symbol(d)).dominant);
    CHECK_FALSE(gershgorin_bounds(symbol(7)).dominant);
    CHECK(gershgorin_bounds(symbol(7)).upper == Rational(1));
}

TEST_CASE("tridiagonal closed form") {
    BandedToeplitz T = build_toeplitz(2, 6);
    auto lam = tridiagonal_eigenvalues(T);
    REQUIRE(lam.size() == 4);
    for (long k = 1; k <= 4; ++k) {
        BigReal expect = BigReal(Rational(3, 4), 256) +
                         BigReal(Rational(1, 4), 256) * cos_pi_multiple(k, 5);
        CHECK(lam[static_cast<size_t>(k - 1)] == expect);
    }
    // strict uniform bounds
    CHECK(lam.front() < BigReal(1L, 256));
    CHECK(lam.back() > BigReal(Rational(1, 2), 256));
    CHECK_THROWS_AS(tridiagonal_eigenvalues(build_toeplitz(5, 20)), std::invalid_argument);
}

TEST_CASE("bisection matches the tridiagonal closed form") {
    for (auto [d, n] : {std::pair<unsigned, long>{2, 20}, {3, 21}, {2, 64}}) {
        BandedToeplitz T = build_toeplitz(d, n);
        auto lam = tridiagonal_eigenvalues(T);
        SpectrumReport rep = extreme_eigenvalues_bisection(T);
        CHECK(rel_close(rep.lambda_min, lam.back(), 120));
        CHECK(rel_close(rep.lambda_max, lam.front(), 120));
        CHECK(rep.certified_digits >= 30);
    }
}

TEST_CASE("bisection reproduces the reference condition number at d=2, n=64") {
    SpectrumReport rep = extreme_eigenvalues_bisection(build_toeplitz(2, 64));
    CHECK(format_significant(rep.condition, 7) == "1.998137");
    CHECK(rep.certified_digits >= 7);
}

TEST_CASE("circulant eigenvalues: stochastic row, symmetry, even-m midpoint") {
    Circulant C = periodize(build_toeplitz(2, 8));  // m = 7
    auto lam = circulant_eigenvalues(C);
    CHECK(lam[0] == BigReal(1L, 256));  // doubly stochastic
    for (long k = 1; k < C.order; ++k) {
        CHECK(lam[static_cast<size_t>(k)] == lam[static_cast<size_t>(C.order - k)]);
    }

    Circulant Ce = periodize(build_toeplitz(2, 7));  // m = 6, even
    auto lame = circulant_eigenvalues(Ce);
    CHECK(lame[3] == BigReal(Rational(1, 2), 256));  // 3/4 - 2/8 exactly
}

TEST_CASE("circulant condition matches the d=2 analytic extremes") {
    Circulant Ce = periodize(build_toeplitz(2, 7));
    SpectrumReport rep = circulant_condition(Ce);
    CHECK(rep.lambda_max == BigReal(1L, 256));
    CHECK(rep.lambda_min == BigReal(Rational(1, 2), 256));
    CHECK(rep.condition == BigReal(2L, 256));
}

TEST_CASE("dense Jacobi oracle agrees with the closed form") {
    BandedToeplitz T = build_toeplitz(3, 15);
    auto closed = tridiagonal_eigenvalues(T);  // k ascending: decreasing values
    auto dense = dense_toeplitz_eigenvalues(T);
    REQUIRE(dense.size() == closed.size());
    for (size_t i = 0; i < dense.size(); ++i) {
        CHECK(rel_close(dense[i], closed[closed.size() - 1 - i], 200));
    }
}

TEST_CASE("interlace holds for the figure instance d=7, n=23") {
    BandedToeplitz T = build_toeplitz(7, 23);
    Circulant C = periodize(T);
    InterlaceReport rep = interlace_check(T, C);
    CHECK(rep.pass);
}

TEST_CASE("seven significant digit formatting") {
    CHECK(format_significant(BigReal(Rational(1998137, 1000000), 256), 7) == "1.998137");
    CHECK(format_significant(BigReal(Rational(6007395, 10), 256), 7) == "600739.5");
    CHECK(format_significant(BigReal(Rational(1, 2), 256), 7) == "0.5000000");
    CHECK(format_significant(BigReal(45L, 256), 4) == "45.00");
    CHECK(format_significant(BigReal(-3L, 256), 2) == "-3.0");
    CHECK(format_significant(BigReal(Rational(12345678, 1), 256), 7) == "12345680");
    // round-half-even on the decimal boundary
    CHECK(format_significant(BigReal(Rational(123456785, 10), 256), 8) == "12345678");
    CHECK(format_significant(BigReal(Rational(123456775, 10), 256), 8) == "12345678");
}
