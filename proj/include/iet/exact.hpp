#pragma once

#include <gmpxx.h>

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace iet {

using Rational = mpq_class;
using BigInt = mpz_class;

// Parse "p/q" or "p" (accepts leading '-'). Throws std::invalid_argument on
// malformed input or zero denominator.
Rational parse_rational(const std::string& s);

std::string to_string(const Rational& r);
std::string to_string(const BigInt& z);

inline double to_double(const Rational& r) { return r.get_d(); }
inline double to_double(const BigInt& z) { return z.get_d(); }

// Natural log of a positive big integer, accurate for values far beyond
// double range.
double log_big(const BigInt& z);

// Natural log of a positive rational.
double log_big(const Rational& r);

struct RationalVec {
  std::vector<Rational> v;
};

}  // namespace iet
