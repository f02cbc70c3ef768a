#include "incalg/preorder.hpp"

#include "incalg/errors.hpp"

namespace incalg {

Preorder Preorder::closure_of_indices(
    std::vector<std::string> elements,
    std::span<const std::pair<std::size_t, std::size_t>> generating_pairs)
{
	Preorder p;
	const std::size_t n = elements.size();
	for (std::size_t i = 0; i < n; ++i) {
		auto [it, inserted] = p.index_.emplace(elements[i], i);
		if (!inserted)
			throw InputError("duplicate element label '" + elements[i] + "'");
	}
	p.elements_ = std::move(elements);
	p.rel_.assign(n * n, 0);
	for (std::size_t i = 0; i < n; ++i)
		p.rel_[i * n + i] = 1;
	for (auto [x, y] : generating_pairs) {
		if (x >= n || y >= n)
			throw InputError("relation references element index out of range");
		p.rel_[x * n + y] = 1;
	}

	// Fixpoint of x <= y, y <= z => x <= z.
	bool changed = true;
	while (changed) {
		changed = false;
		for (std::size_t x = 0; x < n; ++x)
			for (std::size_t y = 0; y < n; ++y) {
				if (!p.rel_[x * n + y])
					continue;
				for (std::size_t z = 0; z < n; ++z)
					if (p.rel_[y * n + z] && !p.rel_[x * n + z]) {
						p.rel_[x * n + z] = 1;
						changed = true;
					}
			}
	}
	return p;
}

Preorder Preorder::closure(std::vector<std::string> elements,
                           std::span<const LabelPair> generating_pairs)
{
	std::unordered_map<std::string, std::size_t> index;
	for (std::size_t i = 0; i < elements.size(); ++i)
		index.emplace(elements[i], i);
	auto lookup = [&](const std::string &label) {
		auto it = index.find(label);
		if (it == index.end())
			throw InputError("unknown element label '" + label + "'");
		return it->second;
	};
	std::vector<std::pair<std::size_t, std::size_t>> pairs;
	pairs.reserve(generating_pairs.size());
	for (const auto &[x, y] : generating_pairs)
		pairs.emplace_back(lookup(x), lookup(y));
	return closure_of_indices(std::move(elements), pairs);
}

std::size_t Preorder::index_of(std::string_view label) const
{
	auto it = index_.find(std::string(label));
	if (it == index_.end())
		throw InputError("unknown element label '" + std::string(label) + "'");
	return it->second;
}

bool Preorder::contains(std::string_view label) const
{
	return index_.contains(std::string(label));
}

bool Preorder::leq(std::string_view x, std::string_view y) const
{
	return leq(index_of(x), index_of(y));
}

std::vector<std::pair<std::size_t, std::size_t>> Preorder::relation() const
{
	std::vector<std::pair<std::size_t, std::size_t>> out;
	for (std::size_t x = 0; x < size(); ++x)
		for (std::size_t y = 0; y < size(); ++y)
			if (leq(x, y))
				out.emplace_back(x, y);
	return out;
}

std::vector<LabelPair> Preorder::relation_labels() const
{
	std::vector<LabelPair> out;
	for (auto [x, y] : relation())
		out.emplace_back(elements_[x], elements_[y]);
	return out;
}

std::vector<std::size_t> Preorder::interval(std::size_t x, std::size_t y) const
{
	std::vector<std::size_t> out;
	if (!leq(x, y))
		return out;
	for (std::size_t z = 0; z < size(); ++z)
		if (leq(x, z) && leq(z, y))
			out.push_back(z);
	return out;
}

std::vector<std::string> Preorder::interval(std::string_view x,
                                            std::string_view y) const
{
	return labels_of(interval(index_of(x), index_of(y)));
}

std::vector<std::size_t> Preorder::strict_down_set(std::size_t i) const
{
	std::vector<std::size_t> out;
	for (std::size_t x = 0; x < size(); ++x)
		if (leq(x, i) && !leq(i, x))
			out.push_back(x);
	return out;
}

std::vector<std::string> Preorder::strict_down_set(std::string_view i) const
{
	return labels_of(strict_down_set(index_of(i)));
}

std::vector<std::size_t> Preorder::strict_up_set(std::size_t j) const
{
	std::vector<std::size_t> out;
	for (std::size_t y = 0; y < size(); ++y)
		if (leq(j, y) && !leq(y, j))
			out.push_back(y);
	return out;
}

std::vector<std::string> Preorder::strict_up_set(std::string_view j) const
{
	return labels_of(strict_up_set(index_of(j)));
}

bool Preorder::is_partial_order() const
{
	for (std::size_t x = 0; x < size(); ++x)
		for (std::size_t y = x + 1; y < size(); ++y)
			if (equivalent(x, y))
				return false;
	return true;
}

std::vector<std::string>
Preorder::labels_of(const std::vector<std::size_t> &indices) const
{
	std::vector<std::string> out;
	out.reserve(indices.size());
	for (auto i : indices)
		out.push_back(elements_[i]);
	return out;
}

} // namespace incalg
