#pragma once

/**
 * Pointwise wedge-with-e maps on 2- and 3-dimensional bases.
 *
 * W^{(i,j)} maps the fiber of Omega^{i,j} to the fiber of
 * Omega^{i+1,j+1} by X -> X ^ e; all labels follow the (i,j) of the
 * domain. Matrices are assembled exactly in the canonical bases
 * (coframe index major, fiber index minor, both ascending) and analyzed
 * with lexicographically pivoted elimination, so every report is
 * deterministic.
 */

#include "corner/fiber.hpp"
#include "corner/linalg.hpp"
#include "corner/rng.hpp"
#include <optional>
#include <string>
#include <vector>

namespace corner {

/// Pointwise (single-fiber) form with theta-free coefficients.
struct PointForm
{
	int d = 2, i = 0, j = 0;
	std::map<std::pair<uint8_t, FMask>, GaussianRational> c;

	PointForm() = default;
	PointForm(int d_, int i_, int j_) : d(d_), i(i_), j(j_) {}

	void add(uint8_t cmask, FMask fmask, GaussianRational v)
	{
		if (v.is_zero())
			return;
		auto key = std::make_pair(cmask, fmask);
		auto it = c.find(key);
		if (it == c.end())
			c[key] = std::move(v);
		else
		{
			it->second += v;
			if (it->second.is_zero())
				c.erase(it);
		}
	}
	GaussianRational get(uint8_t cmask, FMask fmask) const
	{
		auto it = c.find({cmask, fmask});
		return it == c.end() ? GaussianRational() : it->second;
	}
	bool is_zero() const { return c.empty(); }
};

PointForm pointform_wedge(PointForm const &a, PointForm const &b);
PointForm pointform_scale(PointForm const &a, GaussianRational const &s);
PointForm pointform_add(PointForm const &a, PointForm const &b);

/// Canonical basis of the fiber of Omega^{i,j} over a d-dimensional base.
std::vector<std::pair<uint8_t, FMask>> point_basis(int d, int i, int j);

std::vector<GaussianRational> pointform_vectorize(PointForm const &a);
PointForm pointform_from_vector(int d, int i, int j,
                                std::vector<GaussianRational> const &v);

/// A pointwise coframe with its transversal data.
struct FiberFrame
{
	int d = 2;                       // base dimension (2 = corner, 3 = boundary)
	std::vector<FiberElement> e;     // d coframe legs, degree-1, theta-free
	FiberElement eps_n;              // fixed transversal (both cases)
	FiberElement eps_m;              // second fixed transversal (corner only)
	std::optional<FiberElement> e_m; // dynamical transversal, when present

	/// e as a pointwise (1,1) form.
	PointForm coframe() const;

	/// e ^ e ^ ... ^ (transversals) as the top fiber element.
	bool nondegenerate() const;
	void require_nondegenerate() const
	{
		require(nondegenerate(), Err::DegenerateFrame, "degenerate frame");
	}

	static FiberFrame standard_corner();
	static FiberFrame standard_boundary();
};

FiberFrame draw_frame(Rng &rng, int d);

/// Random corner frame whose (e1, e2, e_m) triple is a rational rotation
/// of the standard space-like triple; eps_n = e4. The induced fiber Gram
/// is the identity block, matching the constraint-analysis setup.
FiberFrame draw_orthonormal_corner_frame(Rng &rng);

struct WMapReport
{
	int d = 2, i = 0, j = 0;
	size_t domain_dim = 0, codomain_dim = 0, rank = 0, kernel_dim = 0;
	bool injective = false, surjective = false;
	std::vector<size_t> pivot_columns;
};

/// Exact matrix of X -> X ^ e in the canonical bases.
QMatrix assemble_w(FiberFrame const &frame, int i, int j);

/// Matrix of X -> e ^ X (used by the splitting lemma, where the
/// equations are written with e on the left).
QMatrix assemble_left_w(FiberFrame const &frame, int i, int j);

WMapReport classify(FiberFrame const &frame, int i, int j);

struct WPreimage
{
	PointForm preimage;
	bool in_image = false;
	std::vector<PointForm> kernel;
};

/// Canonical preimage of `target` under W^{(i,j)}: zero on non-pivot
/// columns; when the target is outside the image the least-residual
/// projection pi_I is applied first and in_image is false.
WPreimage w_pseudo_inverse(FiberFrame const &frame, int i, int j,
                           PointForm const &target);

struct SplitInverse
{
	PointForm gamma;   // (i, j) corner part
	PointForm gamma_m; // (i-1, j) transversal part
	bool exact = false; // no projection loss anywhere
};

/// Splitting of a boundary W-inverse into corner data: solves
/// e gamma = pi_I(X) and e gamma_m = pi_I'(X_m - e_m gamma).
SplitInverse split_w_inverse(FiberFrame const &frame, int i, int j,
                             PointForm const &X, PointForm const &X_m);

struct ConstraintReport
{
	// omega analysis
	size_t omega_fixed_count = 0;
	std::vector<std::string> omega_fixed_labels;
	bool omega_matches_listed = false;
	bool omega_values_match = false;
	// gamma analysis
	size_t gamma_fixed_count = 0;
	std::vector<std::string> gamma_fixed_labels;
	bool gamma_matches_listed = false;
};

/// Component analysis of the corner constraint system: which connection
/// and antifield components the four classical constraint equations fix.
/// Data are de (a (2,1) value) and de_m (a (1,1) value); the transversal
/// derivative of the coframe is dynamical and enters as an unknown.
ConstraintReport constraint_component_analysis(FiberFrame const &frame,
                                               PointForm const &de,
                                               PointForm const &de_m);

struct PrecornerReport
{
	// general pre-corner system: image deficiencies of the two blocking maps
	size_t deficiency_11 = 0; // codomain 6 - image of W^{(1,1)}
	size_t deficiency_02 = 0; // codomain 8 - image of W^{(0,2)}
	bool singular = false;
	// tangent system
	size_t tangent_kernel_dim = 0;
};

PrecornerReport precorner_kernel_report(FiberFrame const &frame);

} // namespace corner
