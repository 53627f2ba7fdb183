#pragma once
#include <gmpxx.h>

#include <string>

namespace eqs {

// Exact rationals. mpq_class keeps gcd(num, den) = 1 and den > 0 after every operation.
using Rat = mpq_class;

Rat parse_rat(const std::string& s);
std::string to_string(const Rat& r);
Rat rat_pow(const Rat& b, long e);

// 0, 1 and -1 are the only rationals that are zero or a root of unity.
bool admissible_q(const Rat& q);

}  // namespace eqs
