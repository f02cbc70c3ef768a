#include "incalg/errors.hpp"
#include "incalg/preorder.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace incalg;

namespace {

using Pairs = std::vector<LabelPair>;

Preorder closed(std::vector<std::string> elements, const Pairs &pairs)
{
	return Preorder::closure(std::move(elements), pairs);
}

TEST(Closure, SingletonIsReflexive)
{
	auto p = closed({"a"}, {});
	EXPECT_EQ(p.relation_labels(), (Pairs{{"a", "a"}}));
}

TEST(Closure, ChainGainsTransitivePair)
{
	auto p = closed({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}});
	EXPECT_TRUE(p.leq("1", "3"));
	EXPECT_FALSE(p.leq("3", "1"));
}

TEST(Closure, TwoCycleIsTotal)
{
	auto p = closed({"a", "b"}, {{"a", "b"}, {"b", "a"}});
	EXPECT_EQ(p.relation_labels(),
	          (Pairs{{"a", "a"}, {"a", "b"}, {"b", "a"}, {"b", "b"}}));
}

TEST(Closure, UnknownLabelIsNamed)
{
	try {
		closed({"a"}, {{"a", "zz"}});
		FAIL() << "expected InputError";
	} catch (const InputError &e) {
		EXPECT_NE(std::string(e.what()).find("zz"), std::string::npos);
	}
}

TEST(Closure, DuplicateLabelRejected)
{
	EXPECT_THROW(closed({"a", "a"}, {}), InputError);
}

TEST(Closure, IdempotentAndMonotoneOnRandomRelations)
{
	std::mt19937_64 rng(7);
	const std::vector<std::string> labels{"p", "q", "r", "s", "t"};
	for (int trial = 0; trial < 200; ++trial) {
		Pairs pairs;
		for (const auto &x : labels)
			for (const auto &y : labels)
				if (rng() % 5 == 0)
					pairs.emplace_back(x, y);
		auto p = closed(labels, pairs);
		auto again = closed(labels, p.relation_labels());
		EXPECT_EQ(p, again);

		Pairs more = pairs;
		more.emplace_back(labels[rng() % 5], labels[rng() % 5]);
		auto bigger = closed(labels, more);
		for (auto [x, y] : p.relation())
			EXPECT_TRUE(bigger.leq(x, y));

		// Reflexive and transitive.
		for (std::size_t x = 0; x < 5; ++x) {
			EXPECT_TRUE(p.leq(x, x));
			for (std::size_t y = 0; y < 5; ++y)
				for (std::size_t z = 0; z < 5; ++z)
					if (p.leq(x, y) && p.leq(y, z))
						EXPECT_TRUE(p.leq(x, z));
		}
	}
}

TEST(Interval, ChainEnumeratesByDefinition)
{
	auto p = chain(3);
	EXPECT_EQ(p.interval("1", "3"), (std::vector<std::string>{"1", "2", "3"}));
	EXPECT_EQ(p.interval("2", "2"), (std::vector<std::string>{"2"}));
	EXPECT_TRUE(p.interval("3", "1").empty());
}

TEST(Interval, DegenerateIntervalContainsEquivalents)
{
	auto p = closed({"a", "b", "c"}, {{"a", "b"}, {"b", "a"}});
	EXPECT_EQ(p.interval("a", "a"), (std::vector<std::string>{"a", "b"}));
	EXPECT_EQ(p.interval("c", "c"), (std::vector<std::string>{"c"}));
}

TEST(Interval, AntichainIsEmpty)
{
	auto p = antichain(2);
	EXPECT_TRUE(p.interval("1", "2").empty());
	EXPECT_THROW(p.interval("1", "9"), InputError);
}

TEST(Interval, NonEmptyIffComparable)
{
	for (std::size_t n = 1; n <= 3; ++n)
		for (const auto &p : preorders_up_to_isomorphism(n))
			for (std::size_t x = 0; x < n; ++x)
				for (std::size_t y = 0; y < n; ++y) {
					auto iv = p.interval(x, y);
					EXPECT_EQ(!iv.empty(), p.leq(x, y));
					if (!iv.empty()) {
						EXPECT_NE(std::find(iv.begin(), iv.end(), x), iv.end());
						EXPECT_NE(std::find(iv.begin(), iv.end(), y), iv.end());
					}
				}
}

TEST(StrictSets, Chain)
{
	auto p = chain(3);
	EXPECT_EQ(p.strict_down_set("3"), (std::vector<std::string>{"1", "2"}));
	EXPECT_EQ(p.strict_up_set("1"), (std::vector<std::string>{"2", "3"}));
	EXPECT_TRUE(p.strict_up_set("3").empty());
}

TEST(StrictSets, EquivalentElementsExcluded)
{
	auto p = two_cycle();
	EXPECT_TRUE(p.strict_down_set("a").empty());
	EXPECT_TRUE(p.strict_up_set("b").empty());
}

TEST(StrictSets, Antichain)
{
	auto p = antichain(2);
	EXPECT_TRUE(p.strict_down_set("1").empty());
	EXPECT_THROW(p.strict_down_set("x"), InputError);
}

TEST(StrictSets, PartialOrderDownSetIsBelowMinusSelf)
{
	for (const auto &p : preorders_up_to_isomorphism(4)) {
		if (!p.is_partial_order())
			continue;
		for (std::size_t i = 0; i < p.size(); ++i) {
			std::vector<std::size_t> expected;
			for (std::size_t x = 0; x < p.size(); ++x)
				if (p.leq(x, i) && x != i)
					expected.push_back(x);
			EXPECT_EQ(p.strict_down_set(i), expected);
		}
	}
}

TEST(PartialOrder, Detection)
{
	EXPECT_TRUE(chain(3).is_partial_order());
	EXPECT_FALSE(two_cycle().is_partial_order());
	auto p = closed({"1", "2", "3"}, {{"1", "2"}, {"2", "1"}, {"2", "3"}});
	EXPECT_FALSE(p.is_partial_order());
}

TEST(Enumeration, KnownCountsOfPreordersUpToIsomorphism)
{
	// Unlabeled preorders, OEIS A001930.
	EXPECT_EQ(preorders_up_to_isomorphism(0).size(), 1u);
	EXPECT_EQ(preorders_up_to_isomorphism(1).size(), 1u);
	EXPECT_EQ(preorders_up_to_isomorphism(2).size(), 3u);
	EXPECT_EQ(preorders_up_to_isomorphism(3).size(), 9u);
	EXPECT_EQ(preorders_up_to_isomorphism(4).size(), 33u);
}

TEST(Enumeration, PartialOrderCounts)
{
	// Unlabeled posets: 1, 2, 5, 16 for n = 1..4.
	const std::size_t expected[] = {1, 1, 2, 5, 16};
	for (std::size_t n = 0; n <= 4; ++n) {
		std::size_t posets = 0;
		for (const auto &p : preorders_up_to_isomorphism(n))
			posets += p.is_partial_order();
		EXPECT_EQ(posets, expected[n]) << "n = " << n;
	}
}

} // namespace
