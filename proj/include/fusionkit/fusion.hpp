#pragma once

#include "fusionkit/laurent.hpp"
#include "fusionkit/quotient.hpp"
#include "fusionkit/root_system.hpp"
#include "fusionkit/weyl.hpp"

#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace fusionkit {

// A lattice point of the level-k alcove: m_i >= 0 with sum m_i * comark_i <= k.
struct AlcoveWeight {
	std::vector<std::int64_t> m;
	std::int64_t level = 0;

	std::string label() const;
};

// Complete lexicographic enumeration of the level-k alcove weights.
std::vector<AlcoveWeight> level_weights(const RootSystem& rs, std::int64_t k);

// Rank of the level-k fusion ring: |M_k|.
Int verlinde_dimension(const RootSystem& rs, std::int64_t k);

// (1/|W|) * sum over w of chi(index) * count_fixed(q, w); the multiplicity
// of chi-bar in the permutation module Q[Q_n]. Throws InternalError if the
// sum is not divisible by |W|. Threads > 1 splits the sum into chunks; the
// terms are exact rationals, so the result does not depend on the split.
Int invariant_dimension(const WeylGroup& w, const FiniteQuotient& q,
                        const std::function<Rat(std::size_t)>& chi, int threads = 1);

// Dimension of the W-invariants of the signed permutation module
// (the twisted odd/even building block).
Int dim_sgn_quotient(const RootSystem& rs, const WeylGroup& w, const FiniteQuotient& q,
                     int threads = 1);

// Dimension of the W-invariants of the plain permutation module; equals the
// number of W-orbits on the quotient.
Int dim_perm_quotient(const RootSystem& rs, const WeylGroup& w, const FiniteQuotient& q,
                      int threads = 1);

struct VerlindeReport {
	std::int64_t n = 0;
	std::int64_t level = 0; // n - h_dual
	Int dim_sgn;
	Int verlinde_dim;
	bool ok = false;
	std::vector<AlcoveWeight> basis;
};

// Checks dim_sgn_quotient(n) against |M_{n - h_dual}| for n >= h_dual.
// A mismatch signals an implementation bug: the report is thrown inside a
// MismatchError rather than returned.
VerlindeReport verlinde_check(const RootSystem& rs, const WeylGroup& w, std::int64_t n,
                              int threads = 1);

// Far-wall weights: f with sum f_i * comark_i = n and all |f_i| <= bound.
std::vector<std::vector<std::int64_t>> wall_points_in_box(const RootSystem& rs, std::int64_t n,
                                                          std::int64_t bound);

// Whether antisymmetrize(theta_f) projects to zero in the group algebra of
// the quotient. Requires f on the far wall (sum f_i * comark_i = |n|);
// throws PreconditionError otherwise. Always true by the wall lemma.
bool wall_vanishing(const RootSystem& rs, const WeylGroup& w, const FiniteQuotient& q,
                    const std::vector<std::int64_t>& f);

// Interior alcove point at scale n: b = m + (1,...,1), with the rational
// phase pairing F_ij = (C^{-1})_ij / d_j.
struct SpecialPoint {
	std::vector<std::int64_t> b;
	std::int64_t n = 0;
	RatMat phase_matrix;
};

SpecialPoint special_point(const RootSystem& rs, const AlcoveWeight& m, std::int64_t n);
std::vector<SpecialPoint> special_points(const RootSystem& rs, std::int64_t n);

// Sum over terms c * theta_f of c * exp(2 pi i (f^T F b) / n); the phase is
// reduced mod 1 exactly, conversion to double happens last.
std::complex<double> eval_at_special_point(const RootSystem& rs, const Laurent& p,
                                           const SpecialPoint& s);

// Whether the |M_k| x |M_k| matrix of antisymmetrized basis monomials
// evaluated at the special points has full numerical rank (pivots below
// 1e-9 relative count as zero). Throws TooLargeError for |M_k| > 512.
bool gram_nonsingular(const RootSystem& rs, const WeylGroup& w, std::int64_t n);

// Degrees-to-dimensions output shared by the table builders.
struct RankTable {
	struct Row {
		std::string label;
		std::int64_t degree = 0;     // parity 0/1 when degree_is_parity
		bool degree_is_parity = true;
		Int dim;
	};
	std::string title;
	std::vector<Row> rows;
};

} // namespace fusionkit
