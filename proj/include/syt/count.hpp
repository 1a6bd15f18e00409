#pragma once

#include <gmpxx.h>

#include <string>

namespace syt {

// Arbitrary-precision natural number. Tableau counts pass 2^64 long before
// n = 100, so nothing on a counting path ever touches a machine integer.
using Count = mpz_class;

inline std::string to_decimal(const Count &c) { return c.get_str(10); }

// E(n): 1 for even n, 0 otherwise.
constexpr int parity_indicator(int n) { return n % 2 == 0 ? 1 : 0; }

} // namespace syt
