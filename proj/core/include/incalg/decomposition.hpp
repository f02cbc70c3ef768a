#pragma once

#include "incalg/predicates.hpp"

#include <string>
#include <vector>

namespace incalg {

/// phi(e_ij) = Xi(e_ii) e_ij + e_ii tau(e_ij).
///
/// Requires a 2-torsion-free ring and a valid generalized Jordan pair;
/// otherwise throws InputError (carrying the first witness).
LinearMap build_phi(const GenPair &p);

/// Xi - left multiplication by Xi(delta): the only map d that can satisfy
/// Xi(ab) = Xi(a)b + a d(b), obtained by putting a = delta.
LinearMap extract_relating_derivation(const LinearMap &xi);

/// tau with the e_ji component of every tau(e_ij) removed, for i != j
/// equivalent in the preorder. Identity on partial orders.
/// Requires a 2-torsion-free ring and a Jordan derivation tau.
LinearMap strip_reverse_components(const LinearMap &tau);

/// phi(e_ij e_kl) = phi(e_ij) e_kl + e_ij d(e_kl) on all ordered basis pairs.
IdentityReport verify_generalized_leibniz(const LinearMap &phi,
                                          const LinearMap &d);

struct CRelationInstance {
	std::string relation; // "C^jj_jk + C^kk_jk = 0", ...
	std::vector<std::string> indices;
	Scalar left;
	Scalar right;
	bool equal = true;
};

/// Coefficient relations of a Jordan derivation, evaluated on component
/// reads C^{ab}_{xy} := tau(e_ab)(x, y):
///   tau(e_jj)(j,k) + tau(e_kk)(j,k) = 0        j <= k, j != k
///   tau(e_ij)(i,j) + tau(e_jk)(j,k) = tau(e_ik)(i,k)
///                                 i < j < k pairwise non-equivalent
///   tau(e_ii)(i,i) = 0
struct CRelationReport {
	std::vector<CRelationInstance> instances;

	bool passed() const;
	IdentityReport as_identity_report() const;
};

CRelationReport verify_c_relations(const LinearMap &tau);

struct DecompositionCertificate {
	GenPair input;
	LinearMap phi;
	/// Canonical relating derivation, from Xi alone.
	LinearMap d;
	/// Cross-check built from tau.
	LinearMap d_from_tau;
	/// Xi - phi.
	LinearMap psi;
	std::vector<IdentityReport> checks;
	bool verdict = false;
};

/// Builds phi, both relating-derivation candidates and psi = Xi - phi, and
/// checks that psi vanishes and that (Xi, d) is a generalized derivation.
///
/// Throws InputError when the ring has 2-torsion or the pair is not a
/// generalized Jordan pair. Failed checks under valid hypotheses produce a
/// certificate with verdict false.
DecompositionCertificate certify(const GenPair &p);

} // namespace incalg
