#pragma once

#include "incalg/algebra.hpp"
#include "incalg/predicates.hpp"

#include <random>

namespace incalg::testing {

inline Scalar small_scalar(const RingSpec &ring, std::mt19937_64 &rng, long span = 4)
{
	const long v = static_cast<long>(rng() % static_cast<unsigned long>(2 * span + 1)) - span;
	if (ring.kind() == RingSpec::Kind::Rationals && rng() % 3 == 0)
		return Scalar::from_rational(ring, mpq_class(v, 1 + static_cast<long>(rng() % 4)));
	return Scalar::from_int(ring, v);
}

/// Random element with roughly `density` of the basis in its support.
inline IncidenceElement random_element(const AlgebraPtr &alg, std::mt19937_64 &rng,
                                       double density = 0.6)
{
	std::uniform_real_distribution<double> coin(0.0, 1.0);
	IncidenceElement f(alg);
	for (std::size_t id = 0; id < alg->dimension(); ++id)
		if (coin(rng) < density)
			f.add_term(id, small_scalar(alg->ring(), rng));
	return f;
}

/// Element built from at most `terms` basis elements.
inline IncidenceElement sparse_element(const AlgebraPtr &alg, std::mt19937_64 &rng,
                                       std::size_t terms)
{
	IncidenceElement f(alg);
	if (alg->dimension() == 0)
		return f;
	for (std::size_t i = 0; i < terms; ++i)
		f.add_term(rng() % alg->dimension(), small_scalar(alg->ring(), rng));
	return f;
}

inline LinearMap random_map(const AlgebraPtr &alg, std::mt19937_64 &rng,
                            double density = 0.3)
{
	LinearMap m(alg);
	for (std::size_t id = 0; id < alg->dimension(); ++id)
		m.set_image(id, random_element(alg, rng, density));
	return m;
}

inline IncidenceElement e(const AlgebraPtr &alg, const char *x, const char *y)
{
	return IncidenceElement::basis(alg, x, y);
}

} // namespace incalg::testing
