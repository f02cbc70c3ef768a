#include "incalg/experiments.hpp"

#include "incalg/errors.hpp"

namespace incalg {

std::vector<Preorder> sweep_preorders(std::size_t max_size)
{
	std::vector<Preorder> out;
	for (std::size_t n = 0; n <= max_size; ++n)
		for (auto &p : preorders_up_to_isomorphism(n))
			out.push_back(std::move(p));
	return out;
}

std::vector<Scalar> random_coefficients(const RingSpec &ring, std::size_t count,
                                        std::mt19937_64 &rng)
{
	std::vector<Scalar> out;
	out.reserve(count);
	for (std::size_t i = 0; i < count; ++i)
		out.push_back(Scalar::from_int(ring, static_cast<long>(rng() % 11) - 5));
	return out;
}

bool TheoremReport::corollary_holds() const
{
	return spaces.der == spaces.jder && spaces.jder_non_derivations.empty();
}

bool TheoremReport::all_certified() const
{
	for (const auto &c : cases)
		if (!c.verdict)
			return false;
	return true;
}

namespace {

// Idempotent test data: e = sum of e_ii over a subset S of the elements,
// a = each basis element e_kj with k, j outside S (so ea = ae = 0), plus
// the pair (delta, 0).
void run_identity_suite(const GenPair &p, std::vector<std::string> &failed)
{
	const auto alg_ptr = p.xi.algebra();
	const auto &alg = *alg_ptr;
	const std::size_t n = alg.preorder().size();

	if (!verify_lemma1(p).passed)
		failed.push_back("lemma1");
	if (!verify_basis_identities(p).passed)
		failed.push_back("basis-identities");

	bool idempotents_ok = verify_idempotent_identities(
	                          p, IncidenceElement::identity(alg_ptr),
	                          IncidenceElement::zero(alg_ptr))
	                          .passed;
	for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
		auto e = IncidenceElement::zero(alg_ptr);
		for (std::size_t i = 0; i < n; ++i)
			if (mask >> i & 1)
				e.add_term(*alg.basis_id(i, i), Scalar::one(alg.ring()));
		for (std::size_t kj = 0; kj < alg.dimension(); ++kj) {
			const auto &b = alg.basis(kj);
			if ((mask >> b.x & 1) || (mask >> b.y & 1))
				continue;
			auto a = IncidenceElement::basis(alg_ptr, kj);
			idempotents_ok =
			    idempotents_ok && verify_idempotent_identities(p, e, a).passed;
		}
	}
	if (!idempotents_ok)
		failed.push_back("idempotent-identities");
}

CertifiedCase certify_case(std::string label, const GenPair &p, bool identity_suite)
{
	CertifiedCase c{.label = std::move(label)};
	const auto cert = certify(p);
	c.verdict = cert.verdict;
	for (const auto &check : cert.checks) {
		if (check.name == "psi-zero")
			c.psi_zero = check.passed;
		if (check.name == "route-agreement")
			c.routes_agree = check.passed;
		if (!check.passed)
			c.failed_checks.push_back(check.name);
	}
	if (identity_suite) {
		run_identity_suite(p, c.failed_checks);
		c.verdict = c.verdict && c.failed_checks.empty();
	}
	return c;
}

} // namespace

TheoremReport verify_theorem(const Preorder &preorder, const RingSpec &ring,
                             const TheoremOptions &options)
{
	if (!ring.is_two_torsion_free())
		throw InputError("ring " + ring.to_string() +
		                 " has 2-torsion; use torsion-search instead");
	if (!ring.is_field())
		throw InputError("verify-theorem solves over a field; " + ring.to_string() +
		                 " is not one");

	const auto alg = IncidenceAlgebra::make(preorder, ring);
	const auto solved = solve_all(alg);

	TheoremReport report{.preorder = preorder, .ring = ring, .options = options};
	report.spaces = compare(solved);
	report.gder_expected = alg->dimension() + report.spaces.der;

	const auto &gjder = solved.gjder;
	for (std::size_t i = 0; i < gjder.dimension(); ++i)
		report.cases.push_back(certify_case("basis " + std::to_string(i),
		                                    gjder.pair(i), options.identity_suite));

	std::mt19937_64 rng(options.seed);
	for (std::size_t s = 0; s < options.samples; ++s) {
		auto coeffs = random_coefficients(ring, gjder.dimension(), rng);
		report.cases.push_back(certify_case("sample " + std::to_string(s),
		                                    sample_pair(gjder, coeffs),
		                                    options.identity_suite));
	}

	for (std::size_t i = 0; i < solved.jder.dimension(); ++i) {
		const auto tau = solved.jder.map(i);
		report.cases.push_back(
		    certify_case("jder " + std::to_string(i), {tau, tau}, false));
	}
	return report;
}

TorsionReport torsion_search(const Preorder &preorder)
{
	const auto ring = RingSpec::mod(2);
	const auto alg = IncidenceAlgebra::make(preorder, ring);
	const auto solved = solve_all(alg);

	TorsionReport report{.preorder = preorder, .ring = ring};
	report.spaces = compare(solved);
	for (std::size_t i = 0; i < solved.gjder.dimension(); ++i) {
		const auto xi = solved.gjder.pair(i).xi;
		if (!is_generalized_derivation({xi, extract_relating_derivation(xi)}).passed)
			report.gjder_not_gder.push_back(i);
	}
	return report;
}

} // namespace incalg
