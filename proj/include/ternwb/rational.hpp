#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace ternwb::exactfield {

// Arbitrary-precision rational scalar. cpp_rational keeps the canonical form
// we rely on everywhere: gcd(|num|, den) = 1, den > 0, zero stored as 0/1.
using Rat = boost::multiprecision::cpp_rational;

inline Rat rat(long long num, long long den = 1) { return Rat(num, den); }

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

inline std::string to_string(const Rat& r) { return r.str(); }

}  // namespace ternwb::exactfield
