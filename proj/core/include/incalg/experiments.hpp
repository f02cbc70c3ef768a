#pragma once

#include "incalg/decomposition.hpp"
#include "incalg/solver.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace incalg {

/// Preorders on 0..max_size elements, one per isomorphism class, ordered
/// by size and then canonically.
std::vector<Preorder> sweep_preorders(std::size_t max_size);

/// Deterministic coefficient vector for random combinations: integers in
/// [-5, 5] drawn from a 64-bit Mersenne Twister.
std::vector<Scalar> random_coefficients(const RingSpec &ring, std::size_t count,
                                        std::mt19937_64 &rng);

struct TheoremOptions {
	std::uint64_t seed = 0;
	std::size_t samples = 10;
	/// Also run the lemma1, idempotent and basis identity suites on every
	/// certified pair.
	bool identity_suite = true;
};

struct CertifiedCase {
	std::string label; // "basis 0", "sample 3"
	bool verdict = false;
	bool psi_zero = false;
	bool routes_agree = false;
	std::vector<std::string> failed_checks;
};

struct TheoremReport {
	Preorder preorder;
	RingSpec ring;
	TheoremOptions options;
	SpaceComparison spaces;
	std::size_t gder_expected = 0; // dim(A) + dim(Der)
	/// Basis solutions ("basis i"), random combinations ("sample i") and
	/// Jordan derivations paired with themselves ("jder i").
	std::vector<CertifiedCase> cases;

	bool corollary_holds() const;
	bool gder_structure_holds() const { return spaces.gder == gder_expected; }
	bool all_certified() const;
	bool passed() const
	{
		return spaces.passed() && corollary_holds() && gder_structure_holds() &&
		       all_certified();
	}
};

/// Solves the generalized Jordan space, certifies every basis solution and
/// `options.samples` random combinations, and compares dimensions.
/// Throws InputError unless the ring is a 2-torsion-free field.
TheoremReport verify_theorem(const Preorder &preorder, const RingSpec &ring,
                             const TheoremOptions &options = {});

struct TorsionReport {
	Preorder preorder;
	RingSpec ring;
	SpaceComparison spaces;
	/// gjder basis solutions whose Xi is not a generalized derivation with
	/// relating map Xi - Xi(delta)(.)
	std::vector<std::size_t> gjder_not_gder;
};

/// Observational run over GF(2). Nothing is asserted.
TorsionReport torsion_search(const Preorder &preorder);

} // namespace incalg
