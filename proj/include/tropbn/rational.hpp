#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>
#include <vector>

namespace tropbn {

using Int = boost::multiprecision::cpp_int;
// et_off: plain value semantics, so std::min/std::sort and friends just work
using Rat = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

inline Int rat_num(const Rat& x) { return numerator(x); }
inline Int rat_den(const Rat& x) { return denominator(x); }

inline bool is_integer(const Rat& x) { return denominator(x) == 1; }

// floor(a/b) for b > 0.
Int floor_div(const Int& a, const Int& b);

Int rat_floor(const Rat& x);

// Representative of x mod mu in [0, mu), mu a positive integer.
Rat rat_mod(const Rat& x, const Int& mu);

// True iff x == y (mod mu); mu == 0 means exact equality.
bool congruent(const Rat& x, const Rat& y, long long mu);

long long to_ll(const Int& x);
long long rat_to_ll(const Rat& x);  // requires integer value

// Canonical serialization: "p" when the denominator is 1, else "p/q".
std::string rat_str(const Rat& x);

// Accepts "p", "p/q", optional sign. Throws InputError on malformed input.
Rat parse_rat(std::string_view s);

std::string rat_vec_str(const std::vector<Rat>& v);

}  // namespace tropbn
