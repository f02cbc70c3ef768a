#pragma once

#include "incalg/algebra.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace incalg {

/// A map together with its relating map: (Xi, tau).
struct GenPair {
	LinearMap xi;
	LinearMap tau;
};

/// One failed instance of an identity.
struct Witness {
	std::string identity;            // e.g. "leibniz", "lemma1.triple"
	std::vector<std::string> inputs; // rendered arguments
	std::string left;                // rendered sides
	std::string right;
};

/// Outcome of checking an identity family exhaustively.
struct IdentityReport {
	std::string name;
	bool passed = true;
	std::size_t instances = 0;
	std::size_t failures = 0;
	/// The first kMaxWitnesses failures, in scan order.
	std::vector<Witness> witnesses;
	/// Evaluated and reported but never part of `passed`.
	std::vector<IdentityReport> observations;

	static constexpr std::size_t kMaxWitnesses = 32;

	/// Counts one instance; records a witness when left != right.
	void expect_equal(std::string_view identity, std::vector<std::string> inputs,
	                  const IncidenceElement &left, const IncidenceElement &right);
	/// Folds `other` into this report, prefixing its identity names.
	void merge(const IdentityReport &other, std::string_view prefix = {});
};

// Each predicate decides a universal identity from its basis instances.
// Leibniz-type identities are bilinear, so ordered basis pairs suffice;
// the Jordan identities are quadratic and are decided by the diagonal
// instances together with the polarized form on unordered pairs.

IdentityReport is_derivation(const LinearMap &d);
IdentityReport is_jordan_derivation(const LinearMap &d);
/// tau is a derivation and Xi(ab) = Xi(a)b + a tau(b).
IdentityReport is_generalized_derivation(const GenPair &p);
/// tau is a Jordan derivation and Xi(a^2) = Xi(a)a + a tau(a).
IdentityReport is_generalized_jordan_derivation(const GenPair &p);

/// The three consequences of the generalized Jordan identity:
///   (1) Xi(ab + ba) = Xi(a)b + a tau(b) + Xi(b)a + b tau(a)
///   (2) Xi(aba)     = Xi(a)ba + a tau(b)a + ab tau(a)
///   (3) Xi(abc + cba) = Xi(a)bc + a tau(b)c + ab tau(c)
///                     + Xi(c)ba + c tau(b)a + cb tau(a)
/// on all basis pairs and triples.
IdentityReport verify_lemma1(const GenPair &p);

/// Identities for an idempotent e and an element a with ea = ae = 0:
///   Xi(e) = Xi(e)e + e tau(e),  e tau(a) e = 0,  a tau(e) a = 0,
///   Xi(a)e + a tau(e) = 0,      Xi(e)a + e tau(a) = 0.
/// Throws InputError naming "idempotency" or "annihilation" when the
/// preconditions fail.
IdentityReport verify_idempotent_identities(const GenPair &p,
                                            const IncidenceElement &e,
                                            const IncidenceElement &a);

/// Basis-level identities:
///   e_ki tau(e_ii) e_ij = 0                        for k <= i <= j
///   Xi(e_ij) = Xi(e_ii)e_ij + e_ii tau(e_ij)
///            + Xi(e_ij)e_ii + e_ij tau(e_ii)       for i <= j, i != j
///   Xi(e_kj)e_ii + e_kj tau(e_ii) = 0 and
///   Xi(e_ii)e_kj + e_ii tau(e_kj) = 0              for k, j != i
/// The variant "Xi(e_kj)e_ii + e_kj Xi(e_ii) = 0" is evaluated as an
/// observation only.
IdentityReport verify_basis_identities(const GenPair &p);

} // namespace incalg
