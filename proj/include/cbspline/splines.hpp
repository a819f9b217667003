#pragma once

#include <vector>

#include "cbspline/rational.hpp"

namespace cbspline {

inline constexpr unsigned kMaxDegree = 40;

// Toeplitz symbol of the collocation matrix: the exact values of the
// normalized cardinal B-spline of degree d at the knot averages,
// t_j = N^d(j + (d+1)/2) for j = 0..floor(d/2).
struct SplineSymbol {
    unsigned degree = 0;
    int half_bandwidth = 0;              // floor(degree / 2)
    std::vector<Rational> values;        // t_0, ..., t_r

    const Rational& t(int j) const { return values[static_cast<size_t>(j)]; }
};

// Truncated power (x - i)_+^d, with (x - i)_+^0 = 1 for x >= i.
Rational truncated_power(const Rational& x, long i, unsigned d);

// N^d(x) via the alternating binomial sum over truncated powers.
Rational spline_value_tp(unsigned d, const Rational& x);

// N^d(x) via the de Boor-Cox recurrence on the degree, base case d = 0
// as the indicator of [0, 1).
Rational spline_value_dbc(unsigned d, const Rational& x);

// Exact symbol for degree d >= 1. Both evaluation routes are run and must
// agree exactly; a mismatch throws (it would mean an implementation bug).
// Results are cached per degree; concurrent lookup is safe.
const SplineSymbol& symbol(unsigned d);

}  // namespace cbspline
