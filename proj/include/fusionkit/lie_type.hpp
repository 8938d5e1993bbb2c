#pragma once

#include "fusionkit/errors.hpp"
#include "fusionkit/numeric.hpp"

#include <string>

namespace fusionkit {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

// A simple simply connected compact type, e.g. A3, C2, E8.
struct LieType {
	Family family;
	int rank;

	LieType(Family f, int r);

	std::string name() const;
	bool operator==(const LieType&) const = default;
};

// Valid ranges: A r>=1, B r>=2, C r>=2, D r>=4, E 6..8, F 4, G 2.
bool is_valid_lie_type(Family f, int rank);

// Parses strings like "A3", "c2", "E8" (case-insensitive letter, decimal rank).
LieType parse_lie_type(const std::string& s);

// |W| from the classical closed forms ((r+1)!, 2^r r!, 2^{r-1} r!, exceptional
// constants). Exact; usable without generating the group.
Int weyl_order_formula(const LieType& t);

} // namespace fusionkit
