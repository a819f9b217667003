#pragma once

#include <cstdint>

#include "cbspline/bigreal.hpp"
#include "cbspline/rational.hpp"

namespace cbspline {

// cos(pi * p / q), correctly reduced on the exact rational multiple of pi
// before any floating-point evaluation. Quarter-period points (multiples of
// pi/2) return exact 0/1/-1. Relative error <= 4 ulp at `prec` elsewhere.
BigReal cos_pi_multiple(long long p, long long q, mpfr_prec_t prec = kDefaultPrecision);

// Deterministic primality for the full 64-bit range (Miller-Rabin with a
// witness set proven sufficient below 2^64).
bool is_prime(std::uint64_t m);

}  // namespace cbspline
