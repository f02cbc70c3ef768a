#include "incalg/preorder.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>

namespace incalg {

namespace {

std::vector<std::string> numeric_labels(std::size_t n)
{
	std::vector<std::string> out;
	for (std::size_t i = 1; i <= n; ++i)
		out.push_back(std::to_string(i));
	return out;
}

// Relation of an n-element preorder packed row-major into a bit string.
using Code = std::uint64_t;

Code encode(const std::vector<char> &rel, std::size_t n,
            const std::vector<std::size_t> &perm)
{
	Code c = 0;
	for (std::size_t x = 0; x < n; ++x)
		for (std::size_t y = 0; y < n; ++y)
			if (rel[x * n + y])
				c |= Code{1} << (perm[x] * n + perm[y]);
	return c;
}

bool transitive(const std::vector<char> &rel, std::size_t n)
{
	for (std::size_t x = 0; x < n; ++x)
		for (std::size_t y = 0; y < n; ++y)
			if (rel[x * n + y])
				for (std::size_t z = 0; z < n; ++z)
					if (rel[y * n + z] && !rel[x * n + z])
						return false;
	return true;
}

} // namespace

std::vector<Preorder> preorders_up_to_isomorphism(std::size_t n)
{
	// Brute force over off-diagonal relation sets; 4 elements means 2^12.
	std::vector<std::pair<std::size_t, std::size_t>> off;
	for (std::size_t x = 0; x < n; ++x)
		for (std::size_t y = 0; y < n; ++y)
			if (x != y)
				off.emplace_back(x, y);

	std::vector<std::size_t> identity(n);
	std::iota(identity.begin(), identity.end(), 0);
	std::vector<std::vector<std::size_t>> perms;
	{
		auto p = identity;
		do
			perms.push_back(p);
		while (std::next_permutation(p.begin(), p.end()));
	}

	std::set<Code> canonical;
	std::vector<char> rel(n * n);
	for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << off.size()); ++mask) {
		std::fill(rel.begin(), rel.end(), 0);
		for (std::size_t i = 0; i < n; ++i)
			rel[i * n + i] = 1;
		for (std::size_t b = 0; b < off.size(); ++b)
			if (mask >> b & 1)
				rel[off[b].first * n + off[b].second] = 1;
		if (!transitive(rel, n))
			continue;
		Code best = ~Code{0};
		for (const auto &p : perms)
			best = std::min(best, encode(rel, n, p));
		canonical.insert(best);
	}

	std::vector<Preorder> out;
	for (Code c : canonical) {
		std::vector<std::pair<std::size_t, std::size_t>> pairs;
		for (std::size_t x = 0; x < n; ++x)
			for (std::size_t y = 0; y < n; ++y)
				if (x != y && (c >> (x * n + y) & 1))
					pairs.emplace_back(x, y);
		out.push_back(Preorder::closure_of_indices(numeric_labels(n), pairs));
	}
	return out;
}

Preorder chain(std::size_t n)
{
	std::vector<std::pair<std::size_t, std::size_t>> pairs;
	for (std::size_t i = 0; i + 1 < n; ++i)
		pairs.emplace_back(i, i + 1);
	return Preorder::closure_of_indices(numeric_labels(n), pairs);
}

Preorder antichain(std::size_t n)
{
	return Preorder::closure_of_indices(numeric_labels(n), {});
}

Preorder diamond()
{
	const std::vector<std::pair<std::size_t, std::size_t>> pairs{
	    {0, 1}, {0, 2}, {1, 3}, {2, 3}};
	return Preorder::closure_of_indices(numeric_labels(4), pairs);
}

Preorder two_cycle()
{
	const std::vector<LabelPair> pairs{{"a", "b"}, {"b", "a"}};
	return Preorder::closure({"a", "b"}, pairs);
}

} // namespace incalg
