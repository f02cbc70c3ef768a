#include "incalg/predicates.hpp"

#include "incalg/errors.hpp"

namespace incalg {

void IdentityReport::expect_equal(std::string_view identity,
                                  std::vector<std::string> inputs,
                                  const IncidenceElement &left,
                                  const IncidenceElement &right)
{
	++instances;
	if (left == right)
		return;
	passed = false;
	++failures;
	if (witnesses.size() < kMaxWitnesses)
		witnesses.push_back({std::string(identity), std::move(inputs), left.to_string(),
		                     right.to_string()});
}

void IdentityReport::merge(const IdentityReport &other, std::string_view prefix)
{
	instances += other.instances;
	failures += other.failures;
	passed = passed && other.passed;
	for (const auto &w : other.witnesses) {
		if (witnesses.size() >= kMaxWitnesses)
			break;
		auto copy = w;
		copy.identity = std::string(prefix) + copy.identity;
		witnesses.push_back(std::move(copy));
	}
	for (const auto &o : other.observations)
		observations.push_back(o);
}

namespace {

// Image of the basis product e_a e_b under m (zero when the product vanishes).
IncidenceElement image_of_product(const LinearMap &m, std::size_t a, std::size_t b)
{
	if (auto ab = m.algebra()->product(a, b))
		return m.image(*ab);
	return IncidenceElement::zero(m.algebra());
}

void require_same_pair_algebra(const GenPair &p)
{
	require_same_algebra(*p.xi.algebra(), *p.tau.algebra());
}

std::vector<std::string> names(const IncidenceAlgebra &alg,
                               std::initializer_list<std::size_t> ids)
{
	std::vector<std::string> out;
	for (auto id : ids)
		out.push_back(alg.basis_name(id));
	return out;
}

// Xi(ab) = Xi(a)b + a tau(b) over ordered basis pairs.
void scan_generalized_leibniz(IdentityReport &r, std::string_view identity,
                              const LinearMap &xi, const LinearMap &tau)
{
	const auto &alg = *xi.algebra();
	const std::size_t dim = alg.dimension();
	for (std::size_t a = 0; a < dim; ++a)
		for (std::size_t b = 0; b < dim; ++b) {
			auto lhs = image_of_product(xi, a, b);
			auto rhs = xi.image(a).times_basis(b) + tau.image(b).basis_times(a);
			r.expect_equal(identity, names(alg, {a, b}), lhs, rhs);
		}
}

// Xi(a^2) = Xi(a)a + a tau(a) on basis elements, and its polarization
// Xi(ab + ba) = Xi(a)b + a tau(b) + Xi(b)a + b tau(a) on pairs a < b.
void scan_generalized_jordan(IdentityReport &r, std::string_view identity,
                             const LinearMap &xi, const LinearMap &tau)
{
	const auto &alg = *xi.algebra();
	const std::size_t dim = alg.dimension();
	const std::string polarized = std::string(identity) + ".polarized";
	for (std::size_t a = 0; a < dim; ++a) {
		auto lhs = image_of_product(xi, a, a);
		auto rhs = xi.image(a).times_basis(a) + tau.image(a).basis_times(a);
		r.expect_equal(identity, names(alg, {a}), lhs, rhs);
	}
	for (std::size_t a = 0; a < dim; ++a)
		for (std::size_t b = a + 1; b < dim; ++b) {
			auto lhs = image_of_product(xi, a, b) + image_of_product(xi, b, a);
			auto rhs = xi.image(a).times_basis(b) + tau.image(b).basis_times(a) +
			           xi.image(b).times_basis(a) + tau.image(a).basis_times(b);
			r.expect_equal(polarized, names(alg, {a, b}), lhs, rhs);
		}
}

} // namespace

IdentityReport is_derivation(const LinearMap &d)
{
	IdentityReport r{.name = "der"};
	scan_generalized_leibniz(r, "leibniz", d, d);
	return r;
}

IdentityReport is_jordan_derivation(const LinearMap &d)
{
	IdentityReport r{.name = "jder"};
	scan_generalized_jordan(r, "jordan", d, d);
	return r;
}

IdentityReport is_generalized_derivation(const GenPair &p)
{
	require_same_pair_algebra(p);
	IdentityReport r{.name = "gder"};
	r.merge(is_derivation(p.tau), "tau.");
	scan_generalized_leibniz(r, "generalized.leibniz", p.xi, p.tau);
	return r;
}

IdentityReport is_generalized_jordan_derivation(const GenPair &p)
{
	require_same_pair_algebra(p);
	IdentityReport r{.name = "gjder"};
	r.merge(is_jordan_derivation(p.tau), "tau.");
	scan_generalized_jordan(r, "generalized.jordan", p.xi, p.tau);
	return r;
}

IdentityReport verify_lemma1(const GenPair &p)
{
	require_same_pair_algebra(p);
	const auto &xi = p.xi;
	const auto &tau = p.tau;
	const auto alg_ptr = xi.algebra();
	const auto &alg = *alg_ptr;
	const std::size_t dim = alg.dimension();
	const auto zero = IncidenceElement::zero(alg_ptr);

	auto xi_of = [&](std::optional<std::size_t> id) {
		return id ? xi.image(*id) : zero;
	};
	// f * (basis product), zero when the product vanishes.
	auto times = [&](const IncidenceElement &f, std::optional<std::size_t> id) {
		return id ? f.times_basis(*id) : zero;
	};
	auto before = [&](std::optional<std::size_t> id, const IncidenceElement &f) {
		return id ? f.basis_times(*id) : zero;
	};
	auto prod = [&](std::optional<std::size_t> a, std::size_t b) {
		return a ? alg.product(*a, b) : std::nullopt;
	};

	IdentityReport r{.name = "lemma1"};
	for (std::size_t a = 0; a < dim; ++a)
		for (std::size_t b = a; b < dim; ++b) {
			auto lhs = xi_of(alg.product(a, b)) + xi_of(alg.product(b, a));
			auto rhs = xi.image(a).times_basis(b) + tau.image(b).basis_times(a) +
			           xi.image(b).times_basis(a) + tau.image(a).basis_times(b);
			r.expect_equal("lemma1.polarized", names(alg, {a, b}), lhs, rhs);
		}
	for (std::size_t a = 0; a < dim; ++a)
		for (std::size_t b = 0; b < dim; ++b) {
			const auto ab = alg.product(a, b);
			const auto ba = alg.product(b, a);
			auto lhs = xi_of(prod(ab, a));
			auto rhs = times(xi.image(a), ba) +
			           tau.image(b).basis_times(a).times_basis(a) +
			           before(ab, tau.image(a));
			r.expect_equal("lemma1.sandwich", names(alg, {a, b}), lhs, rhs);
		}
	for (std::size_t a = 0; a < dim; ++a)
		for (std::size_t b = 0; b < dim; ++b) {
			const auto ab = alg.product(a, b);
			const auto a_tau_b = tau.image(b).basis_times(a);
			for (std::size_t c = 0; c < dim; ++c) {
				const auto bc = alg.product(b, c);
				const auto cb = alg.product(c, b);
				const auto ba = alg.product(b, a);
				auto lhs = xi_of(prod(ab, c)) + xi_of(prod(cb, a));
				auto rhs = times(xi.image(a), bc) + a_tau_b.times_basis(c) +
				           before(ab, tau.image(c)) + times(xi.image(c), ba) +
				           tau.image(b).basis_times(c).times_basis(a) +
				           before(cb, tau.image(a));
				r.expect_equal("lemma1.triple", names(alg, {a, b, c}), lhs, rhs);
			}
		}
	return r;
}

IdentityReport verify_idempotent_identities(const GenPair &p,
                                            const IncidenceElement &e,
                                            const IncidenceElement &a)
{
	require_same_pair_algebra(p);
	require_same_algebra(*p.xi.algebra(), *e.algebra());
	require_same_algebra(*p.xi.algebra(), *a.algebra());
	if (!(e * e == e))
		throw InputError("idempotency precondition failed: e*e != e for e = " +
		                 e.to_string());
	if (!(e * a).is_zero() || !(a * e).is_zero())
		throw InputError("annihilation precondition failed: ea or ae is nonzero "
		                 "for e = " + e.to_string() + ", a = " + a.to_string());

	const auto &xi = p.xi;
	const auto &tau = p.tau;
	const auto zero = IncidenceElement::zero(e.algebra());
	const std::vector<std::string> inputs{e.to_string(), a.to_string()};

	IdentityReport r{.name = "idempotent-identities"};
	r.expect_equal("idempotent.image", inputs, xi(e), xi(e) * e + e * tau(e));
	r.expect_equal("e.tau(a).e", inputs, e * tau(a) * e, zero);
	r.expect_equal("a.tau(e).a", inputs, a * tau(e) * a, zero);
	r.expect_equal("idempotent.annihilator.left", inputs, xi(a) * e + a * tau(e), zero);
	r.expect_equal("idempotent.annihilator.right", inputs, xi(e) * a + e * tau(a), zero);
	return r;
}

IdentityReport verify_basis_identities(const GenPair &p)
{
	require_same_pair_algebra(p);
	const auto &xi = p.xi;
	const auto &tau = p.tau;
	const auto &alg = *xi.algebra();
	const auto &order = alg.preorder();
	const std::size_t n = order.size();
	const auto zero = IncidenceElement::zero(xi.algebra());
	auto id = [&](std::size_t x, std::size_t y) { return *alg.basis_id(x, y); };

	IdentityReport r{.name = "basis-identities"};
	IdentityReport printed{.name = "basis.annihilator.literal"};

	for (std::size_t i = 0; i < n; ++i) {
		const auto ii = id(i, i);
		for (std::size_t k = 0; k < n; ++k) {
			if (!order.leq(k, i))
				continue;
			for (std::size_t j = 0; j < n; ++j) {
				if (!order.leq(i, j))
					continue;
				auto lhs = tau.image(ii).basis_times(id(k, i)).times_basis(id(i, j));
				r.expect_equal("basis.sandwich", names(alg, {id(k, i), ii, id(i, j)}), lhs, zero);
			}
		}
	}

	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j) {
			if (i == j || !order.leq(i, j))
				continue;
			const auto ii = id(i, i);
			const auto ij = id(i, j);
			auto rhs = xi.image(ii).times_basis(ij) + tau.image(ij).basis_times(ii) +
			           xi.image(ij).times_basis(ii) + tau.image(ii).basis_times(ij);
			r.expect_equal("basis.expansion", names(alg, {ii, ij}), xi.image(ij), rhs);
		}

	for (std::size_t i = 0; i < n; ++i) {
		const auto ii = id(i, i);
		for (std::size_t kj = 0; kj < alg.dimension(); ++kj) {
			const auto &b = alg.basis(kj);
			if (b.x == i || b.y == i)
				continue;
			const auto inputs = names(alg, {kj, ii});
			r.expect_equal("basis.annihilator.right", inputs,
			               xi.image(kj).times_basis(ii) + tau.image(ii).basis_times(kj),
			               zero);
			r.expect_equal("basis.annihilator.left", inputs,
			               xi.image(ii).times_basis(kj) + tau.image(kj).basis_times(ii),
			               zero);
			printed.expect_equal("basis.annihilator.literal", inputs,
			                     xi.image(kj).times_basis(ii) +
			                         xi.image(ii).basis_times(kj),
			                     zero);
		}
	}
	r.observations.push_back(std::move(printed));
	return r;
}

} // namespace incalg
