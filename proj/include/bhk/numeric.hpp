#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace bhk {

/// Arbitrary-precision signed integer.
using Int = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, always stored reduced with positive denominator.
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integral(const Rat& r) { return den(r) == 1; }

/// Floor division on exact integers, b != 0.
Int floor_div(const Int& a, const Int& b);

/// Representative of r modulo 1 in [0, 1).
Rat frac_mod1(const Rat& r);

/// Serializes as "a/b" with b > 0, or "a" when the denominator is 1.
std::string rat_to_string(const Rat& r);

/// Parses "a", "-a", "a/b"; throws parse_error on anything else or b == 0.
Rat rat_from_string(std::string_view text);

/// Narrows to int64_t; throws invariant_error if the value does not fit.
std::int64_t to_i64(const Int& v);

} // namespace bhk
