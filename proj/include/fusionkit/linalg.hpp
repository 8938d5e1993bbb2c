#pragma once

#include "fusionkit/numeric.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace fusionkit {

// Small dense row-major integer matrix. Used for Cartan matrices and Weyl
// elements, whose entries stay tiny; lattice arithmetic that can grow lives
// in IntMat below.
struct SquareMat {
	int n = 0;
	std::vector<std::int64_t> a;

	SquareMat() = default;
	explicit SquareMat(int dim) : n(dim), a(static_cast<std::size_t>(dim) * dim, 0) {}

	static SquareMat identity(int dim);

	std::int64_t& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
	std::int64_t operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }

	bool operator==(const SquareMat&) const = default;
	bool is_identity() const;

	// Canonical byte encoding; key for dedup maps.
	std::string encode() const;
};

SquareMat mul(const SquareMat& lhs, const SquareMat& rhs);
std::vector<std::int64_t> apply(const SquareMat& m, const std::vector<std::int64_t>& v);

// Dense arbitrary-precision integer matrix (row-major), for lattice work
// where elimination can blow entries up.
struct IntMat {
	int rows = 0;
	int cols = 0;
	std::vector<Int> a;

	IntMat() = default;
	IntMat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}

	static IntMat identity(int dim);
	static IntMat from(const SquareMat& m);

	Int& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
	const Int& operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

	bool operator==(const IntMat&) const = default;
};

IntMat mul(const IntMat& lhs, const IntMat& rhs);
std::vector<Int> apply(const IntMat& m, const std::vector<Int>& v);

// Exact determinant by fraction-free (Bareiss) elimination.
Int determinant(const IntMat& m);

// Inverse of a unimodular integer matrix; throws InternalError if the
// argument is not unimodular.
IntMat inverse_unimodular(const IntMat& u);

// Dense rational matrix helpers (row-major vectors of Rat).
struct RatMat {
	int rows = 0;
	int cols = 0;
	std::vector<Rat> a;

	RatMat() = default;
	RatMat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, Rat(0)) {}

	Rat& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
	const Rat& operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
};

// Exact rank over Q by Gaussian elimination.
int rat_rank(RatMat m);

// Solves A x = b over Q; throws InternalError if A is singular.
std::vector<Rat> rat_solve(RatMat a, std::vector<Rat> b);

// Exact inverse over Q; throws InternalError if singular.
RatMat rat_inverse(const RatMat& m);

} // namespace fusionkit
