#include "incalg/solver.hpp"

#include "incalg/errors.hpp"

namespace incalg {

std::string_view to_string(MapClass c)
{
	switch (c) {
	case MapClass::Derivation:
		return "der";
	case MapClass::JordanDerivation:
		return "jder";
	case MapClass::GeneralizedDerivation:
		return "gder";
	case MapClass::GeneralizedJordanDerivation:
		return "gjder";
	}
	return {};
}

MapClass parse_map_class(std::string_view text)
{
	if (text == "der")
		return MapClass::Derivation;
	if (text == "jder")
		return MapClass::JordanDerivation;
	if (text == "gder")
		return MapClass::GeneralizedDerivation;
	if (text == "gjder")
		return MapClass::GeneralizedJordanDerivation;
	throw InputError("unknown map class '" + std::string(text) +
	                 "' (expected der, jder, gder or gjder)");
}

bool is_pair_class(MapClass c)
{
	return c == MapClass::GeneralizedDerivation ||
	       c == MapClass::GeneralizedJordanDerivation;
}

std::size_t ConstraintSystem::unknown_count() const
{
	const std::size_t dim = algebra->dimension();
	return map_count() * dim * dim;
}

std::size_t ConstraintSystem::unknown_index(std::size_t slot, std::size_t source,
                                            std::size_t target) const
{
	const std::size_t dim = algebra->dimension();
	return slot * dim * dim + source * dim + target;
}

std::string ConstraintSystem::unknown_label(std::size_t u) const
{
	const std::size_t dim = algebra->dimension();
	const std::size_t slot = u / (dim * dim);
	const std::size_t source = (u / dim) % dim;
	const std::size_t target = u % dim;
	std::string name = !is_pair_class(map_class) ? "d" : slot == 0 ? "tau" : "xi";
	return name + "[" + algebra->basis_name(source) + "]@" +
	       algebra->basis_name(target);
}

namespace {

// An incidence element whose coefficients are linear forms in the unknowns.
using SymbolicElement = std::map<std::size_t, SparseVector>;

void accumulate(SparseVector &into, const SparseVector &form, bool negate)
{
	for (const auto &[u, c] : form) {
		auto [it, inserted] = into.try_emplace(u, negate ? -c : c);
		if (!inserted) {
			if (negate)
				it->second -= c;
			else
				it->second += c;
			if (it->second.is_zero())
				into.erase(it);
		}
	}
}

class RowBuilder {
public:
	explicit RowBuilder(ConstraintSystem &sys)
	    : sys_(sys), alg_(*sys.algebra), one_(Scalar::one(alg_.ring()))
	{
	}

	// Unknown map in `slot` applied to e_source.
	SymbolicElement image(std::size_t slot, std::size_t source) const
	{
		SymbolicElement s;
		for (std::size_t t = 0; t < alg_.dimension(); ++t)
			s[t].emplace(sys_.unknown_index(slot, source, t), one_);
		return s;
	}

	SymbolicElement image_of_product(std::size_t slot, std::size_t a,
	                                 std::size_t b) const
	{
		if (auto ab = alg_.product(a, b))
			return image(slot, *ab);
		return {};
	}

	SymbolicElement times_basis(const SymbolicElement &s, std::size_t q) const
	{
		SymbolicElement out;
		for (const auto &[p, form] : s)
			if (auto pq = alg_.product(p, q))
				accumulate(out[*pq], form, false);
		return out;
	}

	SymbolicElement basis_times(std::size_t q, const SymbolicElement &s) const
	{
		SymbolicElement out;
		for (const auto &[p, form] : s)
			if (auto qp = alg_.product(q, p))
				accumulate(out[*qp], form, false);
		return out;
	}

	// Emits one row per component of sum(+lhs) - sum(rhs).
	void emit(std::initializer_list<const SymbolicElement *> lhs,
	          std::initializer_list<const SymbolicElement *> rhs)
	{
		SymbolicElement residual;
		for (const auto *s : lhs)
			for (const auto &[k, form] : *s)
				accumulate(residual[k], form, false);
		for (const auto *s : rhs)
			for (const auto &[k, form] : *s)
				accumulate(residual[k], form, true);
		for (auto &[k, form] : residual)
			if (!form.empty())
				sys_.rows.push_back(std::move(form));
	}

	// X(ab) = X(a)b + a T(b), ordered basis pairs.
	void leibniz(std::size_t xi, std::size_t tau)
	{
		const std::size_t dim = alg_.dimension();
		for (std::size_t a = 0; a < dim; ++a)
			for (std::size_t b = 0; b < dim; ++b) {
				auto lhs = image_of_product(xi, a, b);
				auto r1 = times_basis(image(xi, a), b);
				auto r2 = basis_times(a, image(tau, b));
				emit({&lhs}, {&r1, &r2});
			}
	}

	// X(a^2) = X(a)a + a T(a) on the basis, polarized on pairs a < b.
	void jordan(std::size_t xi, std::size_t tau)
	{
		const std::size_t dim = alg_.dimension();
		for (std::size_t a = 0; a < dim; ++a) {
			auto lhs = image_of_product(xi, a, a);
			auto r1 = times_basis(image(xi, a), a);
			auto r2 = basis_times(a, image(tau, a));
			emit({&lhs}, {&r1, &r2});
		}
		for (std::size_t a = 0; a < dim; ++a)
			for (std::size_t b = a + 1; b < dim; ++b) {
				auto l1 = image_of_product(xi, a, b);
				auto l2 = image_of_product(xi, b, a);
				auto r1 = times_basis(image(xi, a), b);
				auto r2 = basis_times(a, image(tau, b));
				auto r3 = times_basis(image(xi, b), a);
				auto r4 = basis_times(b, image(tau, a));
				emit({&l1, &l2}, {&r1, &r2, &r3, &r4});
			}
	}

private:
	ConstraintSystem &sys_;
	const IncidenceAlgebra &alg_;
	Scalar one_;
};

constexpr std::size_t kTauSlot = 0;
constexpr std::size_t kXiSlot = 1;

LinearMap map_from_slot(const AlgebraPtr &alg, const DenseVector &v, std::size_t slot)
{
	const std::size_t dim = alg->dimension();
	LinearMap m(alg);
	for (std::size_t s = 0; s < dim; ++s) {
		IncidenceElement img(alg);
		for (std::size_t t = 0; t < dim; ++t)
			img.add_term(t, v[slot * dim * dim + s * dim + t]);
		m.set_image(s, std::move(img));
	}
	return m;
}

} // namespace

ConstraintSystem build_system(AlgebraPtr algebra, MapClass c)
{
	if (!algebra->ring().is_field())
		throw InputError("the solver requires a field; " +
		                 algebra->ring().to_string() + " is not one");
	ConstraintSystem sys{.algebra = std::move(algebra), .map_class = c};
	RowBuilder rb(sys);
	switch (c) {
	case MapClass::Derivation:
		rb.leibniz(0, 0);
		break;
	case MapClass::JordanDerivation:
		rb.jordan(0, 0);
		break;
	case MapClass::GeneralizedDerivation:
		rb.leibniz(kTauSlot, kTauSlot);
		rb.leibniz(kXiSlot, kTauSlot);
		break;
	case MapClass::GeneralizedJordanDerivation:
		rb.jordan(kTauSlot, kTauSlot);
		rb.jordan(kXiSlot, kTauSlot);
		break;
	}
	return sys;
}

LinearMap SolutionSpace::map(std::size_t i) const
{
	if (is_pair_class(map_class))
		throw InputError("solution space of " + std::string(to_string(map_class)) +
		                 " holds pairs, not single maps");
	return map_from_slot(algebra, vectors.at(i), 0);
}

GenPair SolutionSpace::pair(std::size_t i) const
{
	if (!is_pair_class(map_class))
		throw InputError("solution space of " + std::string(to_string(map_class)) +
		                 " holds single maps, not pairs");
	const auto &v = vectors.at(i);
	return {map_from_slot(algebra, v, kXiSlot), map_from_slot(algebra, v, kTauSlot)};
}

std::size_t SolutionSpace::xi_projection_dimension() const
{
	if (!is_pair_class(map_class))
		return dimension();
	const std::size_t block = algebra->dimension() * algebra->dimension();
	std::vector<DenseVector> projected;
	projected.reserve(vectors.size());
	for (const auto &v : vectors)
		projected.emplace_back(v.begin() + static_cast<std::ptrdiff_t>(block), v.end());
	return rank(algebra->ring(), projected);
}

IdentityReport check_map_class(MapClass c, const LinearMap &m)
{
	switch (c) {
	case MapClass::Derivation:
		return is_derivation(m);
	case MapClass::JordanDerivation:
		return is_jordan_derivation(m);
	default:
		throw InputError("class " + std::string(to_string(c)) + " needs a pair");
	}
}

IdentityReport check_pair_class(MapClass c, const GenPair &p)
{
	switch (c) {
	case MapClass::GeneralizedDerivation:
		return is_generalized_derivation(p);
	case MapClass::GeneralizedJordanDerivation:
		return is_generalized_jordan_derivation(p);
	default:
		throw InputError("class " + std::string(to_string(c)) + " takes one map");
	}
}

SolutionSpace nullspace(const ConstraintSystem &sys)
{
	RowEchelon ech(sys.algebra->ring(), sys.unknown_count());
	for (const auto &row : sys.rows)
		ech.add_row(row);

	SolutionSpace space{.algebra = sys.algebra,
	                    .map_class = sys.map_class,
	                    .vectors = ech.nullspace_basis()};

	for (std::size_t i = 0; i < space.dimension(); ++i) {
		auto report = is_pair_class(sys.map_class)
		                  ? check_pair_class(sys.map_class, space.pair(i))
		                  : check_map_class(sys.map_class, space.map(i));
		if (!report.passed)
			throw InvariantViolation(
			    "nullspace basis solution " + std::to_string(i) + " fails " +
			    report.name + " at " + report.witnesses.front().identity);
	}
	return space;
}

namespace {

void require_coefficients(const SolutionSpace &space, std::span<const Scalar> cs)
{
	if (cs.size() != space.dimension())
		throw InputError("expected " + std::to_string(space.dimension()) +
		                 " coefficients, got " + std::to_string(cs.size()));
}

DenseVector combine(const SolutionSpace &space, std::span<const Scalar> cs)
{
	const std::size_t dim = space.algebra->dimension();
	const std::size_t width = (is_pair_class(space.map_class) ? 2 : 1) * dim * dim;
	DenseVector out(width, Scalar::zero(space.algebra->ring()));
	for (std::size_t i = 0; i < cs.size(); ++i) {
		if (cs[i].is_zero())
			continue;
		for (std::size_t u = 0; u < width; ++u)
			if (!space.vectors[i][u].is_zero())
				out[u] += cs[i] * space.vectors[i][u];
	}
	return out;
}

} // namespace

LinearMap sample_map(const SolutionSpace &space, std::span<const Scalar> coefficients)
{
	if (is_pair_class(space.map_class))
		throw InputError("sample_map on a pair solution space");
	require_coefficients(space, coefficients);
	return map_from_slot(space.algebra, combine(space, coefficients), 0);
}

GenPair sample_pair(const SolutionSpace &space, std::span<const Scalar> coefficients)
{
	if (!is_pair_class(space.map_class))
		throw InputError("sample_pair on a single-map solution space");
	require_coefficients(space, coefficients);
	auto v = combine(space, coefficients);
	return {map_from_slot(space.algebra, v, kXiSlot),
	        map_from_slot(space.algebra, v, kTauSlot)};
}

SolvedSpaces solve_all(const AlgebraPtr &algebra)
{
	return {solve(algebra, MapClass::Derivation),
	        solve(algebra, MapClass::JordanDerivation),
	        solve(algebra, MapClass::GeneralizedDerivation),
	        solve(algebra, MapClass::GeneralizedJordanDerivation)};
}

SpaceComparison compare(const SolvedSpaces &s)
{
	SpaceComparison c;
	c.algebra_dimension = s.der.algebra->dimension();
	c.two_torsion_free = s.der.algebra->ring().is_two_torsion_free();
	c.der = s.der.dimension();
	c.jder = s.jder.dimension();
	c.gder = s.gder.dimension();
	c.gjder = s.gjder.dimension();
	c.gder_xi = s.gder.xi_projection_dimension();
	c.gjder_xi = s.gjder.xi_projection_dimension();
	for (std::size_t i = 0; i < s.jder.dimension(); ++i)
		if (!is_derivation(s.jder.map(i)).passed)
			c.jder_non_derivations.push_back(i);
	return c;
}

} // namespace incalg
