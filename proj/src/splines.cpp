#include "cbspline/splines.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace cbspline {

Rational truncated_power(const Rational& x, long i, unsigned d) {
    Rational shifted = x - Rational(i);
    if (shifted.sign() < 0) return Rational(0);
    if (d == 0) return Rational(1);
    return pow(shifted, d);
}

Rational spline_value_tp(unsigned d, const Rational& x) {
    // N^d = (d+1) Q^d with Q^d the alternating truncated-power sum.
    Rational sum(0);
    for (unsigned i = 0; i <= d + 1; ++i) {
        Rational term = Rational(binomial(d + 1, i)) * truncated_power(x, static_cast<long>(i), d);
        if (i % 2 == 0) sum += term;
        else sum -= term;
    }
    return sum / Rational(factorial(d));
}

Rational spline_value_dbc(unsigned d, const Rational& x) {
    // Level 0: N^0(x - j) = [0 <= x - j < 1), for j = 0..d.
    std::vector<Rational> level(d + 1);
    for (unsigned j = 0; j <= d; ++j) {
        Rational y = x - Rational(static_cast<long>(j));
        level[j] = (y.sign() >= 0 && y < Rational(1)) ? Rational(1) : Rational(0);
    }
    // Raise the degree: N^k(y) = [y N^{k-1}(y) + (k+1-y) N^{k-1}(y-1)] / k.
    for (unsigned k = 1; k <= d; ++k) {
        for (unsigned j = 0; j + k <= d; ++j) {
            Rational y = x - Rational(static_cast<long>(j));
            level[j] = (y * level[j] + (Rational(static_cast<long>(k) + 1) - y) * level[j + 1]) / Rational(static_cast<long>(k));
        }
    }
    return level[0];
}

namespace {

SplineSymbol compute_symbol(unsigned d) {
    SplineSymbol s;
    s.degree = d;
    s.half_bandwidth = static_cast<int>(d / 2);
    s.values.reserve(static_cast<size_t>(s.half_bandwidth) + 1);
    Rational center = Rational(static_cast<long>(d) + 1, 2);
    for (int j = 0; j <= s.half_bandwidth; ++j) {
        Rational x = Rational(static_cast<long>(j)) + center;
        Rational a = spline_value_tp(d, x);
        Rational b = spline_value_dbc(d, x);
        if (a != b) {
            throw std::logic_error("symbol: truncated-power and de Boor-Cox routes disagree at degree " +
                                   std::to_string(d));
        }
        s.values.push_back(a);
    }
    return s;
}

std::shared_mutex g_cache_mutex;
std::map<unsigned, SplineSymbol> g_cache;

}  // namespace

const SplineSymbol& symbol(unsigned d) {
    if (d < 1 || d > kMaxDegree) throw std::invalid_argument("symbol: degree must be in 1..40");
    {
        std::shared_lock lock(g_cache_mutex);
        auto it = g_cache.find(d);
        if (it != g_cache.end()) return it->second;
    }
    SplineSymbol s = compute_symbol(d);
    std::unique_lock lock(g_cache_mutex);
    return g_cache.try_emplace(d, std::move(s)).first->second;
}

}  // namespace cbspline
