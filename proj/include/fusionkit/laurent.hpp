#pragma once

#include "fusionkit/root_system.hpp"
#include "fusionkit/weyl.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace fusionkit {

using Exponent = std::vector<std::int64_t>;

// Sparse element of the rational character ring of the torus: a finite map
// from weight-lattice exponents to nonzero rational coefficients. Terms are
// kept in lexicographic exponent order, zero coefficients are never stored.
class Laurent {
public:
	Laurent() = default;
	explicit Laurent(int rank) : rank_(rank) {}

	static Laurent zero(int rank) { return Laurent(rank); }
	static Laurent one(int rank);
	// The monomial with derivative f (a single exponent, coefficient 1).
	static Laurent theta(Exponent f);

	int rank() const { return rank_; }
	bool is_zero() const { return terms_.empty(); }
	std::size_t term_count() const { return terms_.size(); }
	const std::map<Exponent, Rat>& terms() const { return terms_; }
	Rat coefficient(const Exponent& f) const;

	void add_term(const Exponent& f, const Rat& c);

	Laurent& operator+=(const Laurent& rhs);
	Laurent& operator-=(const Laurent& rhs);
	Laurent& operator*=(const Rat& c);

	friend Laurent operator+(Laurent lhs, const Laurent& rhs) { return lhs += rhs; }
	friend Laurent operator-(Laurent lhs, const Laurent& rhs) { return lhs -= rhs; }
	friend Laurent operator*(const Laurent& lhs, const Laurent& rhs);
	friend Laurent operator*(Laurent p, const Rat& c) { return p *= c; }

	bool operator==(const Laurent&) const = default;

private:
	int rank_ = 0;
	std::map<Exponent, Rat> terms_;
};

// Exponents mapped through w; with `signed_action` the result is also scaled
// by (-1)^{length(w)}. The unsigned action is a ring automorphism.
Laurent act(const WeylElement& w, const Laurent& p, bool signed_action);

// Sum of the signed action over the whole group; lands in the signed
// invariants.
Laurent antisymmetrize(const WeylGroup& w, const Laurent& p);

// theta_rho^{-1} * prod over positive roots of (theta_alpha - 1), the
// denominator of the character formula. Fixed by every signed action.
Laurent weyl_denominator(const RootSystem& rs);

// The r twisting-ideal generators theta_{alpha_i}^{n d_i} - 1. Same set
// generates both the signed and the plain ideal; n must be nonzero.
std::vector<Laurent> ideal_generators(const RootSystem& rs, std::int64_t n);

// "theta^(c1,...,cr)" rendering; exact rational coefficients.
std::string to_string(const Laurent& p);
// A-type rendering in the variables x_1..x_m (x_1*...*x_m = 1), e.g.
// "x1^2 x2^-1"; requires rs.type().family == Family::A.
std::string to_string_atype(const RootSystem& rs, const Laurent& p);

} // namespace fusionkit
