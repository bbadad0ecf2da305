#pragma once

/**
 * Theory registry: field rosters, corner two-forms, corner actions and
 * (where the structure is honestly symplectic) the cohomological vector
 * field, for the gauge theories and the coframe-gravity corner theories.
 *
 * Actions are kept as lists of terms so that single-sign mutations can be
 * injected by the negative-control suite. Connection-valued fields are
 * stored relative to the reference connection (the field "a" or "w" is
 * A - A0 resp. omega - omega0), so every polarization projection is a
 * plain zeroing of fields.
 */

#include "corner/variational.hpp"
#include "corner/wmaps.hpp"
#include <functional>

namespace corner {

struct Theory;

struct ActionTerm
{
	std::string label;
	std::function<SpectralForm(Theory const &, Config const &)> density;
};

struct Theory
{
	std::string name;
	std::vector<FieldSpec> roster;
	Metric metric = Metric::lorentzian();
	GaussianRational lambda;      // cosmological constant where meaningful
	Connection ref;               // reference connection (A0 / omega0)
	SpectralForm eps_n{0, 1, 0};  // fixed transversal sections, where used
	SpectralForm eps_m{0, 1, 0};

	std::vector<ActionTerm> terms;
	std::vector<int> term_signs; // +1, or -1 under mutation

	TwoFormExpr omega;

	std::function<Tangent(Theory const &, Config const &)> coh_field;
	bool has_coh_field = false;

	// polarization tag -> fields set to zero by the projection
	std::map<std::string, std::vector<std::string>> polarizations;

	GScalar action(Config const &cfg) const;
	SpectralForm action_density(Config const &cfg) const;
	Config project(std::string const &pol, Config cfg) const;

	/// Full connection at a configuration (reference plus the named field).
	Connection conn(Config const &cfg, std::string const &field) const;

	FieldSpec const &spec(std::string const &name) const;

	/// Random configuration; odd fields are seeded through gens.
	Config draw(Rng &rng, FieldGens &gens, int nmodes = 2, int kmax = 1) const;

	Theory with_mutated_sign(size_t term_index) const;
};

/// Fixed constant (0,1,0) form from a fiber basis direction.
SpectralForm constant_section(int fiber_index);

Theory make_em();
Theory make_ym(Connection A0);
Theory make_cs(Connection A0);
Theory make_bf(Connection A0, GaussianRational lambda);
Theory make_tangent(Connection omega0);
Theory make_general(Connection omega0);
Theory make_constrained(Connection omega0);

/// Draw a random real reference connection.
Connection draw_reference(Rng &rng, int nmodes = 2, int kmax = 1);

/// Flat (zero) reference.
Connection flat_reference();

} // namespace corner
