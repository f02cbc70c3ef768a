#include "incalg/decomposition.hpp"
#include "incalg/errors.hpp"
#include "incalg/solver.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

using namespace incalg;
using incalg::testing::e;
using incalg::testing::random_element;
using incalg::testing::small_scalar;

namespace {

const RingSpec Q = RingSpec::rationals();

GenPair random_gjder_pair(const AlgebraPtr &alg, std::mt19937_64 &rng)
{
	auto space = solve(alg, MapClass::GeneralizedJordanDerivation);
	std::vector<Scalar> c;
	for (std::size_t i = 0; i < space.dimension(); ++i)
		c.push_back(small_scalar(alg->ring(), rng));
	return sample_pair(space, c);
}

TEST(BuildPhi, EqualsXiForKnownForms)
{
	std::mt19937_64 rng(41);
	for (const auto &p : {chain(3), two_cycle(), diamond()}) {
		auto alg = IncidenceAlgebra::make(p, Q);
		auto d = LinearMap::inner_derivation(random_element(alg, rng));
		auto c = random_element(alg, rng);
		EXPECT_EQ(build_phi({d, d}), d);
		auto lc = left_multiplication(c);
		EXPECT_EQ(build_phi({lc, LinearMap::zero(alg)}), lc);
		EXPECT_EQ(build_phi({lc + d, d}), lc + d);
	}
}

TEST(BuildPhi, DirectFormula)
{
	std::mt19937_64 rng(42);
	auto alg = IncidenceAlgebra::make(chain(3), RingSpec::mod(5));
	auto p = random_gjder_pair(alg, rng);
	auto phi = build_phi(p);
	for (std::size_t id = 0; id < alg->dimension(); ++id) {
		auto [x, y] = alg->basis(id);
		auto eii = IncidenceElement::basis(alg, *alg->basis_id(x, x));
		auto eij = IncidenceElement::basis(alg, id);
		EXPECT_EQ(phi.image(id), p.xi(eii) * eij + eii * p.tau(eij));
	}
}

TEST(BuildPhi, RejectsTorsionAndInvalidPairs)
{
	auto z6 = IncidenceAlgebra::make(chain(2), RingSpec::mod(6));
	EXPECT_THROW(build_phi({LinearMap::zero(z6), LinearMap::zero(z6)}), InputError);

	auto t2 = IncidenceAlgebra::make(chain(2), Q);
	LinearMap bad(t2);
	bad.set_image(t2->basis_id("1", "1"), e(t2, "1", "2"));
	EXPECT_THROW(build_phi({bad, bad}), InputError);
}

TEST(ExtractRelatingDerivation, LeftMultiplicationGivesZero)
{
	std::mt19937_64 rng(43);
	auto alg = IncidenceAlgebra::make(diamond(), Q);
	auto c = random_element(alg, rng);
	EXPECT_TRUE(extract_relating_derivation(left_multiplication(c)).is_zero());
	auto d = LinearMap::inner_derivation(random_element(alg, rng));
	EXPECT_EQ(extract_relating_derivation(left_multiplication(c) + d), d);
}

TEST(StripReverseComponents, NoReverseComponentOnJordanDerivations)
{
	// Jordan derivations never carry an e_ji component on tau(e_ij), so the
	// stripped map equals the input, on the 2-cycle as well.
	for (const auto &p : {two_cycle(), diamond(), preorders_up_to_isomorphism(3).back()}) {
		auto alg = IncidenceAlgebra::make(p, Q);
		auto jder = solve(alg, MapClass::JordanDerivation);
		for (std::size_t i = 0; i < jder.dimension(); ++i)
			EXPECT_EQ(strip_reverse_components(jder.map(i)), jder.map(i));
	}
}

TEST(StripReverseComponents, RejectsNonJordanInput)
{
	auto alg = IncidenceAlgebra::make(two_cycle(), Q);
	LinearMap tau(alg);
	tau.set_image(alg->basis_id("a", "b"), e(alg, "b", "a"));
	EXPECT_THROW(strip_reverse_components(tau), InputError);
	auto z6 = IncidenceAlgebra::make(two_cycle(), RingSpec::mod(6));
	EXPECT_THROW(strip_reverse_components(LinearMap::zero(z6)), InputError);
}

TEST(CRelations, HoldOnJordanDerivations)
{
	std::mt19937_64 rng(45);
	for (const auto &p : {chain(4), diamond(), two_cycle()}) {
		auto alg = IncidenceAlgebra::make(p, Q);
		auto d = LinearMap::inner_derivation(random_element(alg, rng));
		auto r = verify_c_relations(d);
		EXPECT_TRUE(r.passed());
		EXPECT_FALSE(r.instances.empty());
		EXPECT_TRUE(r.as_identity_report().passed);
	}
}

TEST(CRelations, ChainInstancesOnT3)
{
	auto alg = IncidenceAlgebra::make(chain(3), Q);
	auto r = verify_c_relations(LinearMap::zero(alg));
	std::size_t chains = 0;
	for (const auto &inst : r.instances)
		if (inst.relation == "C^ij_ij + C^jk_jk = C^ik_ik")
			++chains;
	EXPECT_EQ(chains, 1u);
}

TEST(CRelations, RejectsNonJordanInput)
{
	auto alg = IncidenceAlgebra::make(chain(2), Q);
	LinearMap tau(alg);
	tau.set_image(alg->basis_id("1", "1"), e(alg, "1", "1"));
	EXPECT_THROW(verify_c_relations(tau), InputError);
}

TEST(Certify, PassesOnSolvedPairs)
{
	std::mt19937_64 rng(46);
	for (const auto &ring : {Q, RingSpec::mod(3)})
		for (const auto &p : {chain(3), two_cycle(), diamond()}) {
			auto alg = IncidenceAlgebra::make(p, ring);
			auto space = solve(alg, MapClass::GeneralizedJordanDerivation);
			for (std::size_t i = 0; i < space.dimension(); ++i) {
				auto cert = certify(space.pair(i));
				EXPECT_TRUE(cert.verdict);
				EXPECT_TRUE(cert.psi.is_zero());
				EXPECT_EQ(cert.d, cert.d_from_tau);
			}
			auto cert = certify(random_gjder_pair(alg, rng));
			EXPECT_TRUE(cert.verdict);
			for (const auto &c : cert.checks)
				EXPECT_TRUE(c.passed) << c.name;
		}
}

TEST(Certify, JordanPairOnPartialOrders)
{
	// (tau, tau) for a Jordan derivation tau: d recovers tau exactly.
	auto alg = IncidenceAlgebra::make(diamond(), Q);
	auto jder = solve(alg, MapClass::JordanDerivation);
	for (std::size_t i = 0; i < jder.dimension(); ++i) {
		auto tau = jder.map(i);
		auto cert = certify({tau, tau});
		EXPECT_TRUE(cert.verdict);
		EXPECT_EQ(cert.d, tau);
		EXPECT_TRUE(is_derivation(tau).passed);
	}
}

TEST(Certify, RefusesBadInput)
{
	auto z6 = IncidenceAlgebra::make(chain(2), RingSpec::mod(6));
	EXPECT_THROW(certify({LinearMap::zero(z6), LinearMap::zero(z6)}), InputError);
	auto t2 = IncidenceAlgebra::make(chain(2), Q);
	LinearMap bad(t2);
	bad.set_image(t2->basis_id("1", "1"), e(t2, "1", "2"));
	EXPECT_THROW(certify({bad, LinearMap::zero(t2)}), InputError);
}

TEST(GeneralizedLeibniz, DetectsWrongRelatingMap)
{
	auto alg = IncidenceAlgebra::make(chain(3), Q);
	auto d = LinearMap::inner_derivation(e(alg, "1", "2"));
	EXPECT_TRUE(verify_generalized_leibniz(d, d).passed);
	EXPECT_FALSE(verify_generalized_leibniz(d, LinearMap::zero(alg)).passed);
}

} // namespace
