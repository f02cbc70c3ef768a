#pragma once

#include "incalg/algebra.hpp"
#include "incalg/linalg.hpp"
#include "incalg/predicates.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace incalg {

enum class MapClass {
	Derivation,                  // "der"
	JordanDerivation,            // "jder"
	GeneralizedDerivation,       // "gder"
	GeneralizedJordanDerivation, // "gjder"
};

std::string_view to_string(MapClass c);
/// Throws InputError for anything but der, jder, gder, gjder.
MapClass parse_map_class(std::string_view text);
/// gder and gjder have two unknown maps (tau, Xi).
bool is_pair_class(MapClass c);

/// Linear equations on the image coefficients of the unknown maps.
///
/// Unknown u = slot * |B|^2 + source * |B| + target is the coefficient of
/// e_target in the image of e_source. Slot 0 is the single unknown map, or
/// tau for pair classes; slot 1 is Xi. tau therefore precedes Xi in column
/// order.
struct ConstraintSystem {
	AlgebraPtr algebra;
	MapClass map_class = MapClass::Derivation;
	std::vector<SparseVector> rows;

	std::size_t map_count() const { return is_pair_class(map_class) ? 2 : 1; }
	std::size_t unknown_count() const;
	std::size_t unknown_index(std::size_t slot, std::size_t source,
	                          std::size_t target) const;
	/// e.g. "xi[e(1,2)]@e(1,3)"
	std::string unknown_label(std::size_t u) const;
};

/// Throws InputError when the ring is not a field.
ConstraintSystem build_system(AlgebraPtr algebra, MapClass c);

struct SolutionSpace {
	AlgebraPtr algebra;
	MapClass map_class = MapClass::Derivation;
	std::vector<DenseVector> vectors; // one per basis solution

	std::size_t dimension() const { return vectors.size(); }
	/// Basis solution i for der / jder.
	LinearMap map(std::size_t i) const;
	/// Basis solution i for gder / gjder.
	GenPair pair(std::size_t i) const;
	/// Dimension of the projection of the space onto the Xi unknowns.
	std::size_t xi_projection_dimension() const;
};

/// Exact RREF nullspace of the system. Every basis solution is re-checked
/// against the class predicate; a failure throws InvariantViolation.
SolutionSpace nullspace(const ConstraintSystem &sys);

inline SolutionSpace solve(AlgebraPtr algebra, MapClass c)
{
	return nullspace(build_system(std::move(algebra), c));
}

/// Report of a solution against its class predicate.
IdentityReport check_map_class(MapClass c, const LinearMap &m);
IdentityReport check_pair_class(MapClass c, const GenPair &p);

/// Linear combination of the basis solutions. Throws InputError when the
/// coefficient count differs from the dimension or the class mismatches.
LinearMap sample_map(const SolutionSpace &space, std::span<const Scalar> coefficients);
GenPair sample_pair(const SolutionSpace &space, std::span<const Scalar> coefficients);

struct SpaceComparison {
	std::size_t algebra_dimension = 0;
	std::size_t der = 0;
	std::size_t jder = 0;
	std::size_t gder = 0;
	std::size_t gjder = 0;
	std::size_t gder_xi = 0;
	std::size_t gjder_xi = 0;
	bool two_torsion_free = false;
	/// Indices of Jordan-derivation basis maps that fail is_derivation.
	std::vector<std::size_t> jder_non_derivations;

	bool dimensions_equal() const { return der == jder && gder_xi == gjder_xi; }
	/// Equalities are required only over 2-torsion-free rings.
	bool passed() const { return !two_torsion_free || dimensions_equal(); }
};

struct SolvedSpaces {
	SolutionSpace der;
	SolutionSpace jder;
	SolutionSpace gder;
	SolutionSpace gjder;
};

SolvedSpaces solve_all(const AlgebraPtr &algebra);
SpaceComparison compare(const SolvedSpaces &spaces);

/// Dimensions of Der vs JDer and of the Xi-projections of GenDer vs GenJDer.
inline SpaceComparison compare_spaces(const AlgebraPtr &algebra)
{
	return compare(solve_all(algebra));
}

} // namespace incalg
