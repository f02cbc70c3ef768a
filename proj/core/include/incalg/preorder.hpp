#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace incalg {

using LabelPair = std::pair<std::string, std::string>;

/// A finite pre-ordered set (X, <=) over string labels.
///
/// Labels keep their declaration order; that order is used only to make
/// output deterministic. The relation itself is always reflexive and
/// transitive. Instances are immutable once built.
class Preorder {
public:
	Preorder() = default;

	/// Smallest reflexive-transitive relation on `elements` containing
	/// `generating_pairs`. Throws InputError on duplicate or unknown labels.
	static Preorder closure(std::vector<std::string> elements,
	                        std::span<const LabelPair> generating_pairs);

	/// Same as above, over element indices.
	static Preorder closure_of_indices(
	    std::vector<std::string> elements,
	    std::span<const std::pair<std::size_t, std::size_t>> generating_pairs);

	std::size_t size() const { return elements_.size(); }
	const std::vector<std::string> &elements() const { return elements_; }
	const std::string &label(std::size_t i) const { return elements_.at(i); }

	/// Index of a label; throws InputError naming the label if absent.
	std::size_t index_of(std::string_view label) const;
	bool contains(std::string_view label) const;

	bool leq(std::size_t x, std::size_t y) const { return rel_[x * size() + y]; }
	bool leq(std::string_view x, std::string_view y) const;

	/// x <= y and y <= x.
	bool equivalent(std::size_t x, std::size_t y) const
	{
		return leq(x, y) && leq(y, x);
	}

	/// All pairs of the relation, in (element order, element order).
	std::vector<std::pair<std::size_t, std::size_t>> relation() const;
	std::vector<LabelPair> relation_labels() const;

	/// All z with x <= z <= y, in element order; empty when x is not <= y.
	std::vector<std::size_t> interval(std::size_t x, std::size_t y) const;
	std::vector<std::string> interval(std::string_view x,
	                                  std::string_view y) const;

	/// x <= i with i not <= x (equivalent elements excluded).
	std::vector<std::size_t> strict_down_set(std::size_t i) const;
	std::vector<std::string> strict_down_set(std::string_view i) const;
	/// j <= y with y not <= j.
	std::vector<std::size_t> strict_up_set(std::size_t j) const;
	std::vector<std::string> strict_up_set(std::string_view j) const;

	bool is_partial_order() const;

	friend bool operator==(const Preorder &, const Preorder &) = default;

private:
	std::vector<std::string> elements_;
	std::vector<char> rel_; // row-major size() x size()
	std::unordered_map<std::string, std::size_t> index_;

	std::vector<std::string> labels_of(const std::vector<std::size_t> &) const;
};

/// All preorders on exactly n elements (labels "1".."n"), one per
/// isomorphism class, in a fixed canonical order.
std::vector<Preorder> preorders_up_to_isomorphism(std::size_t n);

/// Named preorders used throughout tests and the CLI.
Preorder chain(std::size_t n);
Preorder antichain(std::size_t n);
/// 1 < 2, 1 < 3, 2 < 4, 3 < 4.
Preorder diamond();
/// {a, b} with a <= b and b <= a.
Preorder two_cycle();

} // namespace incalg
