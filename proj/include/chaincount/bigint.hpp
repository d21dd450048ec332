#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace chaincount {

// Chain counts grow super-exponentially with lattice depth, so every
// counting path uses arbitrary precision. Fixed-width arithmetic is banned
// from the counters by policy.
using BigInt = boost::multiprecision::cpp_int;

BigInt binomial(unsigned n, unsigned k);

}  // namespace chaincount
