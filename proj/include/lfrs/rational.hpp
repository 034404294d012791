#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace lfrs {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Canonical "p/q" rendering: q > 0, gcd(p, q) = 1. cpp_rational keeps this
// normal form internally, so we only have to print it.
std::string rat_str(const Rat& x);

// Accepts "p", "p/q" and leading '-'. Throws std::invalid_argument on junk.
Rat rat_parse(const std::string& text);

inline bool is_integer(const Rat& x) { return denominator(x) == 1; }

}  // namespace lfrs
