#pragma once

/**
 * Variational calculus over field configurations.
 *
 * A configuration maps field names to component lists (one spectral form
 * per component; vector fields and form-valued covectors have two).
 * Derivatives are taken with nilpotent Grassmann parameters from the
 * shared scalar ring: an even nilpotent t gives directional derivatives
 * F(psi + t Z) = F + t D_Z F, and a pair of odd parameters s1, s2 gives
 * two-form values as the s1 s2 coefficient of the substituted expression.
 * Everything stays exact and composes: nested derivatives allocate fresh
 * parameters from a scoped pool.
 */

#include "corner/forms.hpp"
#include <functional>
#include <map>
#include <string>

namespace corner {

using FieldValue = std::vector<SpectralForm>;

struct Config
{
	std::map<std::string, FieldValue> fields;

	bool has(std::string const &name) const { return fields.count(name); }
	FieldValue const &at(std::string const &name) const
	{
		auto it = fields.find(name);
		require(it != fields.end(), Err::Internal, "unknown field " + name);
		return it->second;
	}
	SpectralForm const &form(std::string const &name, size_t comp = 0) const
	{
		auto &v = at(name);
		require(comp < v.size(), Err::Internal, "component out of range");
		return v[comp];
	}
	VectorField vector(std::string const &name) const
	{
		auto &v = at(name);
		require(v.size() == 2, Err::Internal, "not a vector field");
		return VectorField(v[0], v[1]);
	}
	void set(std::string const &name, FieldValue v)
	{
		fields[name] = std::move(v);
	}
};

using Tangent = Config;

/// cfg + s * Z fieldwise (missing tangent entries are treated as zero).
Config shifted(Config const &cfg, GScalar const &s, Tangent const &Z);

using Functional = std::function<GScalar(Config const &)>;

/// Exact directional derivative via an even nilpotent parameter.
GScalar dir_deriv(Functional const &F, Config const &cfg, Tangent const &Z);

/// Context handed to a two-form expression: `base` for undifferentiated
/// factors, `delta` for delta-slots, and `delta_of` for the variation of
/// a composite expression in the fields.
struct VarCtx
{
	Config const &base;
	Config delta;
	std::function<SpectralForm(std::function<SpectralForm(Config const &)> const &)>
	    delta_of;
};

using TwoFormExpr = std::function<GScalar(VarCtx const &)>;

/// Value of the two-form on a pair of tangent vectors.
GScalar eval_two_form(TwoFormExpr const &expr, Config const &cfg,
                      Tangent const &Y, Tangent const &Z);

/// Field shapes, used to enumerate coordinate directions.
enum class FieldKind { Form, Vector, CoVector };

struct FieldSpec
{
	std::string name;
	FieldKind kind = FieldKind::Form;
	int i = 0, j = 0, g = 0;
	size_t components() const { return kind == FieldKind::Form ? 1 : 2; }
	// component shape: vectors are (0,0,g) scalars, covectors (2,4,g)
	int comp_i() const { return kind == FieldKind::Form ? i : (kind == FieldKind::Vector ? 0 : 2); }
	int comp_j() const { return kind == FieldKind::Form ? j : (kind == FieldKind::Vector ? 0 : 4); }
};

/// Zero-valued configuration with the given shapes.
Config zero_config(std::vector<FieldSpec> const &roster);

/// One coordinate direction: a single basis coefficient of one component.
struct Coordinate
{
	std::string field;
	size_t comp = 0;
	FKey key;
	FMask fmask = 0;
	bool imaginary = false; // basis vector i * (real basis element)
};

/// Tangent with a single (possibly complex) unit coefficient.
Tangent coordinate_tangent(std::vector<FieldSpec> const &roster,
                           Coordinate const &c);

/// All coordinate directions of the roster over the frequency window
/// spanned by `keys` (both real and imaginary unit directions).
std::vector<Coordinate> enumerate_coordinates(std::vector<FieldSpec> const &roster,
                                              std::vector<std::pair<int, int>> const &window);

/// Frequency window: all pairwise sums of up to `depth` frequencies drawn
/// from the supports present in the configuration (plus negatives).
std::vector<std::pair<int, int>> frequency_window(Config const &cfg, int depth);

/// Solve iota_X omega = dF for X, given the two-form and the functional.
/// Works for constant (field-independent) two-forms; the result is
/// verified against random directions and an Error is thrown if the
/// solve fails (degenerate pairing or support too small).
Tangent solve_hamiltonian(TwoFormExpr const &omega,
                          std::vector<FieldSpec> const &roster,
                          Functional const &F, Config const &cfg,
                          std::vector<std::pair<int, int>> const &window,
                          Rng &verify_rng, FieldGens &verify_gens);

} // namespace corner
