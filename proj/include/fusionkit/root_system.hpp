#pragma once

#include "fusionkit/lie_type.hpp"
#include "fusionkit/linalg.hpp"
#include "fusionkit/numeric.hpp"

#include <cstdint>
#include <vector>

namespace fusionkit {

// One root, carried in both coordinate systems: `weight` are the pairings
// with the simple coroots (coordinates in the fundamental-weight basis),
// `simple` are the coefficients over the simple roots.
struct Root {
	std::vector<std::int64_t> weight;
	std::vector<std::int64_t> simple;

	bool operator==(const Root&) const = default;
};

// All lattice-level data of a simple simply connected type, in fixed integer
// coordinates: the weight lattice is Z^r in the fundamental-weight basis and
// the coroot lattice is Z^r in the simple-coroot basis. Immutable after
// construction; safe to share across threads.
class RootSystem {
public:
	explicit RootSystem(LieType t);

	const LieType& type() const { return type_; }
	int rank() const { return type_.rank; }

	// Cartan matrix, row i = simple root alpha_i in weight coordinates.
	const SquareMat& cartan() const { return cartan_; }
	std::vector<std::int64_t> simple_root_weight(int i) const; // 1-based

	const std::vector<Root>& positive_roots() const { return positive_roots_; }
	const Root& highest_root() const { return positive_roots_[highest_index_]; }

	const std::vector<std::int64_t>& marks() const { return marks_; }
	const std::vector<std::int64_t>& comarks() const { return comarks_; }
	const std::vector<std::int64_t>& d() const { return d_; }

	std::int64_t coxeter() const { return coxeter_; }
	std::int64_t dual_coxeter() const { return dual_coxeter_; }

	bool simply_laced() const;

	// Relative squared lengths of the simple roots, long roots normalized
	// to 1; d_i = 1/length_i.
	std::vector<Rat> root_lengths() const;

	// Inverse Cartan matrix over Q (rows/cols as in cartan()).
	const RatMat& inverse_cartan() const { return inverse_cartan_; }

private:
	LieType type_;
	SquareMat cartan_;
	std::vector<Root> positive_roots_;
	std::size_t highest_index_ = 0;
	std::vector<std::int64_t> marks_;
	std::vector<std::int64_t> comarks_;
	std::vector<std::int64_t> d_;
	std::int64_t coxeter_ = 0;
	std::int64_t dual_coxeter_ = 0;
	RatMat inverse_cartan_;
};

// Hard-coded Cartan matrices per family, Bourbaki numbering.
SquareMat cartan_matrix(const LieType& t);

inline RootSystem build_root_system(const LieType& t) { return RootSystem(t); }

} // namespace fusionkit
