#include "incalg/decomposition.hpp"

#include "incalg/errors.hpp"

namespace incalg {

namespace {

void require_two_torsion_free(const IncidenceAlgebra &alg)
{
	if (!alg.ring().is_two_torsion_free())
		throw InputError("ring " + alg.ring().to_string() +
		                 " has 2-torsion; the decomposition needs a 2-torsion-free "
		                 "ring (use torsion-search to explore this case)");
}

std::string first_witness(const IdentityReport &r)
{
	if (r.witnesses.empty())
		return r.name;
	const auto &w = r.witnesses.front();
	std::string out = r.name + " fails at " + w.identity + " (";
	for (std::size_t i = 0; i < w.inputs.size(); ++i)
		out += (i ? ", " : "") + w.inputs[i];
	return out + "): " + w.left + " != " + w.right;
}

void require_report(const IdentityReport &r, const std::string &what)
{
	if (!r.passed)
		throw InputError(what + ": " + first_witness(r));
}

} // namespace

LinearMap build_phi(const GenPair &p)
{
	require_same_algebra(*p.xi.algebra(), *p.tau.algebra());
	const auto alg_ptr = p.xi.algebra();
	const auto &alg = *alg_ptr;
	require_two_torsion_free(alg);
	require_report(is_generalized_jordan_derivation(p),
	               "not a generalized Jordan derivation pair");

	LinearMap phi(alg_ptr);
	for (std::size_t ij = 0; ij < alg.dimension(); ++ij) {
		const auto ii = *alg.basis_id(alg.basis(ij).x, alg.basis(ij).x);
		phi.set_image(ij, p.xi.image(ii).times_basis(ij) +
		                      p.tau.image(ij).basis_times(ii));
	}
	return phi;
}

LinearMap extract_relating_derivation(const LinearMap &xi)
{
	const auto delta = IncidenceElement::identity(xi.algebra());
	return xi - LinearMap::left_multiplication(xi(delta));
}

LinearMap strip_reverse_components(const LinearMap &tau)
{
	const auto alg_ptr = tau.algebra();
	const auto &alg = *alg_ptr;
	require_two_torsion_free(alg);
	require_report(is_jordan_derivation(tau), "not a Jordan derivation");

	LinearMap d = tau;
	for (std::size_t ij = 0; ij < alg.dimension(); ++ij) {
		const auto [i, j] = alg.basis(ij);
		if (i == j)
			continue;
		auto ji = alg.basis_id(j, i);
		if (!ji)
			continue;
		auto img = tau.image(ij);
		img.add_term(*ji, -img.coefficient(*ji));
		d.set_image(ij, std::move(img));
	}
	return d;
}

IdentityReport verify_generalized_leibniz(const LinearMap &phi, const LinearMap &d)
{
	require_same_algebra(*phi.algebra(), *d.algebra());
	const auto &alg = *phi.algebra();
	const auto zero = IncidenceElement::zero(phi.algebra());
	IdentityReport r{.name = "phi-leibniz"};
	for (std::size_t a = 0; a < alg.dimension(); ++a)
		for (std::size_t b = 0; b < alg.dimension(); ++b) {
			const auto ab = alg.product(a, b);
			auto lhs = ab ? phi.image(*ab) : zero;
			auto rhs = phi.image(a).times_basis(b) + d.image(b).basis_times(a);
			r.expect_equal(ab ? "phi-leibniz.adjacent" : "phi-leibniz.disjoint",
			               {alg.basis_name(a), alg.basis_name(b)}, lhs, rhs);
		}
	return r;
}

bool CRelationReport::passed() const
{
	for (const auto &i : instances)
		if (!i.equal)
			return false;
	return true;
}

IdentityReport CRelationReport::as_identity_report() const
{
	IdentityReport r{.name = "c-relations"};
	for (const auto &i : instances) {
		++r.instances;
		if (i.equal)
			continue;
		r.passed = false;
		++r.failures;
		if (r.witnesses.size() < IdentityReport::kMaxWitnesses)
			r.witnesses.push_back(
			    {i.relation, i.indices, i.left.to_string(), i.right.to_string()});
	}
	return r;
}

CRelationReport verify_c_relations(const LinearMap &tau)
{
	const auto &alg = *tau.algebra();
	require_two_torsion_free(alg);
	require_report(is_jordan_derivation(tau), "not a Jordan derivation");

	const auto &order = alg.preorder();
	const std::size_t n = order.size();
	auto id = [&](std::size_t x, std::size_t y) { return *alg.basis_id(x, y); };
	auto C = [&](std::size_t ax, std::size_t ay, std::size_t x, std::size_t y) {
		return tau.image(id(ax, ay)).coefficient_at(x, y);
	};
	const auto zero = Scalar::zero(alg.ring());

	CRelationReport report;
	auto push = [&](std::string relation, std::vector<std::size_t> idx, Scalar l,
	                Scalar r) {
		std::vector<std::string> labels;
		for (auto i : idx)
			labels.push_back(order.label(i));
		const bool eq = l == r;
		report.instances.push_back(
		    {std::move(relation), std::move(labels), std::move(l), std::move(r), eq});
	};

	for (std::size_t i = 0; i < n; ++i)
		push("C^ii_ii = 0", {i}, C(i, i, i, i), zero);

	for (std::size_t j = 0; j < n; ++j)
		for (std::size_t k = 0; k < n; ++k) {
			if (j == k || !order.leq(j, k))
				continue;
			push("C^jj_jk + C^kk_jk = 0", {j, k}, C(j, j, j, k) + C(k, k, j, k), zero);
		}

	auto strictly_below = [&](std::size_t x, std::size_t y) {
		return order.leq(x, y) && !order.leq(y, x);
	};
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j) {
			if (!strictly_below(i, j))
				continue;
			for (std::size_t k = 0; k < n; ++k) {
				if (!strictly_below(j, k))
					continue;
				push("C^ij_ij + C^jk_jk = C^ik_ik", {i, j, k},
				     C(i, j, i, j) + C(j, k, j, k), C(i, k, i, k));
			}
		}
	return report;
}

DecompositionCertificate certify(const GenPair &p)
{
	require_same_algebra(*p.xi.algebra(), *p.tau.algebra());
	const auto alg_ptr = p.xi.algebra();
	const auto &alg = *alg_ptr;
	// Z, Q and Z/n are all commutative with identity; only 2-torsion and
	// pair validity need checking.
	require_two_torsion_free(alg);
	require_report(is_generalized_jordan_derivation(p),
	               "not a generalized Jordan derivation pair");

	DecompositionCertificate cert{
	    .input = p,
	    .phi = build_phi(p),
	    .d = extract_relating_derivation(p.xi),
	    .d_from_tau = strip_reverse_components(p.tau),
	    .psi = LinearMap(alg_ptr),
	};
	cert.psi = p.xi - cert.phi;

	IdentityReport construction{.name = "phi-diagonal"};
	for (std::size_t i = 0; i < alg.preorder().size(); ++i) {
		const auto ii = *alg.basis_id(i, i);
		construction.expect_equal("phi(e_ii) = xi(e_ii)", {alg.basis_name(ii)},
		                          cert.phi.image(ii), p.xi.image(ii));
	}

	const auto zero = IncidenceElement::zero(alg_ptr);
	IdentityReport psi_zero{.name = "psi-zero"};
	for (std::size_t ij = 0; ij < alg.dimension(); ++ij)
		psi_zero.expect_equal("psi(e_ij) = 0", {alg.basis_name(ij)},
		                      cert.psi.image(ij), zero);

	IdentityReport routes{.name = "route-agreement"};
	for (std::size_t ij = 0; ij < alg.dimension(); ++ij)
		routes.expect_equal("d(e_ij) from xi = d(e_ij) from tau", {alg.basis_name(ij)},
		                    cert.d.image(ij), cert.d_from_tau.image(ij));

	auto d_der = is_derivation(cert.d);
	d_der.name = "d-is-derivation";
	auto xi_gder = is_generalized_derivation({p.xi, cert.d});
	xi_gder.name = "xi-gder-with-d";

	cert.checks.push_back(std::move(construction));
	cert.checks.push_back(verify_generalized_leibniz(cert.phi, cert.d));
	cert.checks.push_back(std::move(d_der));
	cert.checks.push_back(std::move(psi_zero));
	cert.checks.push_back(std::move(xi_gder));
	cert.checks.push_back(verify_c_relations(p.tau).as_identity_report());
	cert.checks.push_back(std::move(routes));

	cert.verdict = true;
	for (const auto &c : cert.checks)
		cert.verdict = cert.verdict && c.passed;
	return cert;
}

} // namespace incalg
