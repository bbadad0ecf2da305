#pragma once

/**
 * Derived-bracket engine.
 *
 * Brackets are never computed from hand-expanded formulas: {S,f} is the
 * registered cohomological field applied to f, and {h,g} for a family
 * functional g goes through g's Hamiltonian vector field and graded
 * antisymmetry. Multibrackets are the projections
 *     {}_0 = P(S), {f}_1 = P{S,f}, {f,g}_2 = P{{S,f},g},
 * evaluated exactly on random configurations. Every explicit Hamiltonian
 * field is certified by hamiltonian_check before it is trusted.
 */

#include "corner/theory.hpp"

namespace corner {

struct NamedFunctional
{
	std::string label;
	std::string family;
	int ghost = 0;
	Functional eval;
	std::function<Tangent(Config const &)> ham;
	bool has_ham = false;
};

struct CheckResult
{
	std::string id;
	bool pass = false;
	int seeds = 0;
	std::string note;
};

/// iota_{X_f} omega = dF on `trials` random directions; exact.
bool hamiltonian_check(Theory const &th, NamedFunctional const &f,
                       Config const &cfg, Rng &rng, FieldGens &gens,
                       int trials = 3);

/// Cohomological vector field evaluator: registered, or solved from the
/// action when the theory is honestly symplectic.
Tangent q_field(Theory const &th, Config const &cfg);

/// {S,f} as a functional.
Functional bracket_with_action(Theory const &th, NamedFunctional const &f);

/// Derived multibrackets in the given polarization.
Functional d_nullary(Theory const &th, std::string pol);
Functional d_unary(Theory const &th, std::string pol, NamedFunctional f);
Functional d_binary(Theory const &th, std::string pol, NamedFunctional f,
                    NamedFunctional g);

// --- functional families ---------------------------------------------------

// BF families (B-side polarization variables phi, tau, B)
NamedFunctional bf_J(Theory const &th, SpectralForm alpha);
NamedFunctional bf_M(Theory const &th, SpectralForm beta);
NamedFunctional bf_K(Theory const &th, SpectralForm gamma);
NamedFunctional bf_C(Theory const &th, SpectralForm mu);
NamedFunctional bf_D(Theory const &th, SpectralForm nu);
NamedFunctional bf_E(Theory const &th, SpectralForm rho);

// tangent families
NamedFunctional tg_J(Theory const &th, SpectralForm phi);
NamedFunctional tg_M(Theory const &th, SpectralForm Y);
NamedFunctional tg_K(Theory const &th, SpectralForm Z);
NamedFunctional tg_F(Theory const &th, VectorField X);

// YM / CS linear functionals
NamedFunctional ym_B(Theory const &th, SpectralForm f);
NamedFunctional cs_a(Theory const &th, SpectralForm f);

/// iota along a coordinate direction of the base.
SpectralForm contract_basis(int mu, SpectralForm const &a);

} // namespace corner
