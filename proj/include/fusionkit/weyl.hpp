#pragma once

#include "fusionkit/root_system.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace fusionkit {

struct WeylElement {
	SquareMat matrix;           // action on weight-basis coordinates
	std::uint32_t length = 0;   // reduced word length
	int sign() const { return (length & 1u) ? -1 : +1; }
};

// The full finite reflection group, enumerated breadth-first from the simple
// reflections in index order; element 0 is the identity and indices are
// reproducible run-to-run. Immutable once generated.
class WeylGroup {
public:
	static constexpr std::size_t kDefaultCap = 1'200'000;

	std::size_t order() const { return elements_.size(); }
	const std::vector<WeylElement>& elements() const { return elements_; }
	const WeylElement& element(std::size_t i) const { return elements_[i]; }
	const std::vector<SquareMat>& generators() const { return generators_; }
	int rank() const { return rank_; }

	// Index of a matrix in the element list, if present.
	std::optional<std::size_t> find(const SquareMat& m) const;

private:
	friend WeylGroup generate(const RootSystem&, std::size_t);

	int rank_ = 0;
	std::vector<WeylElement> elements_;
	std::vector<SquareMat> generators_;
	std::unordered_map<std::string, std::size_t> index_;
};

// Matrix of the simple reflection s_i (1-based) on weight coordinates:
// s_i(c) = c - c_i * (row i of the Cartan matrix). Involutive.
SquareMat simple_reflection_matrix(const RootSystem& rs, int i);
WeylElement simple_reflection(const RootSystem& rs, int i);

// Breadth-first closure of the simple reflections. Throws CapExceededError
// when the (known) group order exceeds `cap`, or if the closure would.
WeylGroup generate(const RootSystem& rs, std::size_t cap = WeylGroup::kDefaultCap);

// Number of positive roots sent to negative roots; equals the reduced word
// length for genuine Weyl elements.
std::uint32_t length_by_inversions(const RootSystem& rs, const SquareMat& w);

std::int64_t det64(const SquareMat& m);

} // namespace fusionkit
