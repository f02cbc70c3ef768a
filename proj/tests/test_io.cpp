#include "incalg/errors.hpp"
#include "incalg/io.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

using namespace incalg;
using nlohmann::json;

namespace {

const RingSpec Q = RingSpec::rationals();

std::filesystem::path temp_file(const std::string &name, const std::string &content)
{
	auto path = std::filesystem::temp_directory_path() / ("incalg_test_" + name);
	std::ofstream(path) << content;
	return path;
}

TEST(PreorderJson, RoundTripAndClosure)
{
	auto j = json::parse(R"({"elements":["a","b","c"],"relations":[["a","b"],["b","c"]]})");
	auto p = preorder_from_json(j);
	EXPECT_TRUE(p.leq("a", "c"));
	EXPECT_EQ(preorder_from_json(to_json(p)), p);
}

TEST(PreorderJson, Errors)
{
	EXPECT_THROW(preorder_from_json(json::parse(R"({"elements":["a"],"relations":[["a","z"]]})")),
	             InputError);
	EXPECT_THROW(preorder_from_json(json::parse(R"({"elements":["a","a"]})")), InputError);
	EXPECT_THROW(preorder_from_json(json::parse(R"([1,2])")), InputError);
}

TEST(LinearMapJson, RoundTrip)
{
	std::mt19937_64 rng(51);
	for (const auto &ring : {Q, RingSpec::mod(7)}) {
		auto alg = IncidenceAlgebra::make(diamond(), ring);
		auto m = incalg::testing::random_map(alg, rng);
		EXPECT_EQ(linear_map_from_json(alg, to_json(m)), m);
	}
}

TEST(LinearMapJson, MissingEntriesAreZero)
{
	auto alg = IncidenceAlgebra::make(chain(2), Q);
	auto m = linear_map_from_json(
	    alg, json::parse(R"({"ring":"Q","images":[{"from":["1","1"],"to":[["1","2","1/2"]]}]})"));
	EXPECT_EQ(m.image(alg->basis_id("1", "1")).to_string(), "1/2*e(1,2)");
	EXPECT_TRUE(m.image(alg->basis_id("2", "2")).is_zero());
}

TEST(LinearMapJson, Errors)
{
	auto alg = IncidenceAlgebra::make(chain(2), Q);
	EXPECT_THROW(linear_map_from_json(alg, json::parse(R"({"ring":"Z/5","images":[]})")),
	             InputError);
	EXPECT_THROW(linear_map_from_json(
	                 alg, json::parse(R"({"ring":"Q","images":[{"from":["2","1"],"to":[]}]})")),
	             InputError);
	EXPECT_THROW(linear_map_from_json(alg, json::parse(R"({"ring":"Q","images":[
	                 {"from":["1","1"],"to":[]},{"from":["1","1"],"to":[]}]})")),
	             InputError);
	EXPECT_THROW(linear_map_from_json(alg, json::parse(R"({"ring":"Q","images":[
	                 {"from":["1","1"],"to":[["1","2","x"]]}]})")),
	             InputError);
}

TEST(Files, MalformedJsonReportsLocation)
{
	auto path = temp_file("bad.json", "{\"elements\": [\"a\",\n");
	try {
		read_json_file(path);
		FAIL();
	} catch (const InputError &err) {
		EXPECT_NE(std::string(err.what()).find("byte"), std::string::npos) << err.what();
	}
	EXPECT_THROW(read_json_file("/nonexistent/file.json"), InputError);
}

TEST(Files, ReadPreorder)
{
	auto path = temp_file("t2.json", R"({"elements":["1","2"],"relations":[["1","2"]]})");
	EXPECT_EQ(read_preorder_file(path), chain(2));
}

TEST(Dump, StableFormatting)
{
	auto s = dump(json{{"b", 1}, {"a", "x"}});
	EXPECT_EQ(s, "{\n  \"a\": \"x\",\n  \"b\": 1\n}\n");
}

} // namespace
