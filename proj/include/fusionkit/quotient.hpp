#pragma once

#include "fusionkit/linalg.hpp"
#include "fusionkit/root_system.hpp"
#include "fusionkit/weyl.hpp"

#include <cstdint>
#include <vector>

namespace fusionkit {

// U * M * V = D with U, V unimodular and D diagonal, nonnegative, each
// diagonal entry dividing the next.
struct SmithDecomposition {
	IntMat u;
	IntMat d;
	IntMat v;
};

// Deterministic: pivot is the minimal nonzero |entry| (ties: lowest row,
// then lowest column).
SmithDecomposition smith_normal_form(const IntMat& m);

// Nonzero diagonal of D in divisibility order.
std::vector<Int> invariant_factors(const SmithDecomposition& s);

// Map from the coroot lattice into the weight lattice induced by a level-n
// twist: column j is n * d_j * alpha_j in weight coordinates, i.e. entry
// (i,j) = n * d_j * C_{ji}. Injective for n != 0.
struct TwistingMap {
	std::int64_t n = 0;
	IntMat matrix;
};

TwistingMap twisting_map(const RootSystem& rs, std::int64_t n);

// The finite abelian group Z^r / im(twisting map), in Smith coordinates:
// residues are vectors c with 0 <= c_i < factor_diagonal()[i], and
// to_canonical() carries weight-basis vectors onto them. The sign of n does
// not change the image, so all data here depend on |n| only; the stored
// TwistingMap keeps the signed n as given.
class FiniteQuotient {
public:
	explicit FiniteQuotient(TwistingMap twist);

	const TwistingMap& twist() const { return twist_; }
	int rank() const { return twist_.matrix.rows; }
	const Int& order() const { return order_; }

	// All r diagonal factors (including 1s), divisibility-ordered.
	const std::vector<Int>& factor_diagonal() const { return diag_; }
	// The nontrivial invariant factors (leading 1s dropped).
	std::vector<Int> nontrivial_factors() const;

	const IntMat& to_canonical() const { return to_canonical_; }
	const IntMat& from_canonical() const { return from_canonical_; }

	// Canonical residue of a weight-basis vector.
	std::vector<Int> canonical(const std::vector<std::int64_t>& weight_vec) const;
	std::vector<Int> canonical(const std::vector<Int>& weight_vec) const;

	// Matrix of the automorphism a Weyl element induces on canonical
	// residues (apply then reduce componentwise).
	IntMat induced_action(const SquareMat& w) const;
	std::vector<Int> apply_action(const IntMat& action, const std::vector<Int>& residue) const;

	std::vector<Int> reduce(std::vector<Int> canonical_vec) const;

private:
	TwistingMap twist_;
	IntMat to_canonical_;
	IntMat from_canonical_;
	std::vector<Int> diag_;
	Int order_ = 1;
};

FiniteQuotient build_quotient(const RootSystem& rs, std::int64_t n);

// Number of residues fixed by w, computed without enumeration as the index
// of im(w - I) + im(twist) in Z^r (product of the invariant factors of the
// r x 2r concatenation). Pure; safe to call concurrently.
Int count_fixed(const FiniteQuotient& q, const SquareMat& w);

// All residues in canonical coordinates, mixed-radix order over the factor
// diagonal. Throws TooLargeError when order() > limit.
std::vector<std::vector<Int>> enumerate(const FiniteQuotient& q, const Int& limit);

} // namespace fusionkit
