#pragma once

#include "fusionkit/fusion.hpp"
#include "fusionkit/quotient.hpp"
#include "fusionkit/weyl.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace fusionkit {

// A class function on the generated group, one rational value per element
// index.
struct WCharacter {
	std::string name;
	std::vector<Rat> values;

	const Rat& at(std::size_t i) const { return values[i]; }
};

WCharacter trivial_character(const WeylGroup& w);
WCharacter sign_character(const WeylGroup& w);
// m-fold tensor power of sign; normalized to trivial (m even) or sign
// (m odd) at construction.
WCharacter sign_pow_character(const WeylGroup& w, std::int64_t m);

// Cohomology of the fixed-point space as a list of (degree, W-character)
// entries with distinct degrees.
struct CohomologyProfile {
	std::vector<std::pair<std::int64_t, WCharacter>> entries;
};

CohomologyProfile profile_point(const WeylGroup& w);
CohomologyProfile profile_inertia_sphere(const RootSystem& rs, const WeylGroup& w);
CohomologyProfile profile_commuting(const RootSystem& rs, const WeylGroup& w, std::int64_t m);
CohomologyProfile profile_su2_pairs(const WeylGroup& w);

// (1/|W|) sum of chi(w) * (-1)^{length(w)} * count_fixed(q, w).
Int e2_dimension(const WeylGroup& w, const FiniteQuotient& q, const WCharacter& chi,
                 int threads = 1);

// Conjugation action on the group itself: the twisted ranks sit in the
// parity of the rank, the other parity is zero.
RankTable table_point(const RootSystem& rs, const WeylGroup& w, const FiniteQuotient& q,
                      int threads = 1);

// Inertia of the one-point compactified adjoint representation:
// odd rank -> (even: orbit count, odd: signed dimension); even rank -> both
// summed in the even row.
RankTable table_inertia_sphere(const RootSystem& rs, const WeylGroup& w, const FiniteQuotient& q,
                               int threads = 1);

// Inertia of the m-tuple commuting variety; families A and C only.
RankTable table_commuting_variety(const RootSystem& rs, const WeylGroup& w,
                                  const FiniteQuotient& q, std::int64_t m, int threads = 1);

// Commuting pairs in SU(2): closed form (even: |n|+1, odd: |n|-1).
RankTable table_su2_pairs(std::int64_t n);

// One row per profile entry at total degree p + rank. Labeled as an E2 table:
// collapse to K-theory ranks is only asserted for the built-in families.
RankTable e2_table(const RootSystem& rs, const WeylGroup& w, const FiniteQuotient& q,
                   const CohomologyProfile& profile, int threads = 1);

} // namespace fusionkit
