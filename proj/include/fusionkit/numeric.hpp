#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>

namespace fusionkit {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Euclidean remainder in [0, m) for m > 0.
inline Int floor_mod(const Int& a, const Int& m)
{
	Int r = a % m;
	if (r < 0)
		r += m;
	return r;
}

// Fractional part in [0, 1).
inline Rat frac_part(const Rat& q)
{
	Int num = boost::multiprecision::numerator(q);
	Int den = boost::multiprecision::denominator(q); // den > 0
	return Rat(floor_mod(num, den), den);
}

inline double to_double(const Rat& q) { return q.convert_to<double>(); }
inline std::int64_t to_int64(const Int& n) { return n.convert_to<std::int64_t>(); }

} // namespace fusionkit
