#pragma once

/**
 * Exact spectral differential forms on the 2-torus.
 *
 * A SpectralForm of type (i, j, g) is a finitely supported Fourier series
 * with FiberElement coefficients: keys are (frequency k in Z^2, strictly
 * increasing coframe multi-index), values are degree-j fiber elements
 * whose GScalar coefficients have declared degree g. Coordinates have
 * period 2pi, so the exterior derivative multiplies mode k by i*k_mu and
 * stays inside Q[i]; integration is the k=0 coefficient of the top form
 * (volume-normalized).
 *
 * Sign conventions: the base coframe, the fiber algebra and the ghost
 * generators are three independent Koszul layers. Products commute a
 * left factor's scalar coefficients to the left. The interior product
 * multiplies vector-field components from the right; this is the choice
 * under which 1/2 iota_xi iota_xi (dx1 dx2) = xi^1 xi^2 for odd xi.
 */

#include "corner/fiber.hpp"
#include "corner/rng.hpp"
#include <array>
#include <functional>

namespace corner {

struct FKey
{
	int k1 = 0, k2 = 0;
	uint8_t cmask = 0;
	auto operator<=>(FKey const &) const = default;
};

class SpectralForm;
using FiberOp = std::function<FiberElement(FiberElement const &, FiberElement const &)>;

class SpectralForm {
  public:
	SpectralForm() : i_(0), j_(0), g_(0) {}
	SpectralForm(int form_deg, int fiber_deg, int ghost)
	    : i_(form_deg), j_(fiber_deg), g_(ghost)
	{
		require(i_ >= 0 && i_ <= 2, Err::DegreeOverflow, "form degree out of range");
		require(j_ >= 0 && j_ <= 4, Err::DegreeOverflow, "fiber degree out of range");
	}

	int form_degree() const { return i_; }
	int fiber_degree() const { return j_; }
	int ghost_degree() const { return g_; }
	bool is_zero() const { return terms_.empty(); }
	std::map<FKey, FiberElement> const &terms() const { return terms_; }

	/// Total parity governing commutation (form + fiber + ghost mod 2).
	int parity() const { return ((i_ + j_ + g_) % 2 + 2) % 2; }

	FiberElement coeff(FKey const &key) const
	{
		auto it = terms_.find(key);
		return it == terms_.end() ? FiberElement(j_, g_) : it->second;
	}

	void add(FKey const &key, FiberElement const &c)
	{
		if (c.is_zero())
			return;
		require(std::popcount(key.cmask) == i_, Err::DegreeMismatch,
		        "coframe index length != form degree");
		require(c.fiber_degree() == j_, Err::DegreeMismatch,
		        "fiber degree mismatch");
		auto it = terms_.find(key);
		if (it == terms_.end())
			terms_[key] = c;
		else
		{
			it->second += c;
			if (it->second.is_zero())
				terms_.erase(it);
		}
	}

	SpectralForm operator-() const
	{
		SpectralForm r(i_, j_, g_);
		for (auto &[k, c] : terms_)
			r.terms_[k] = -c;
		return r;
	}
	SpectralForm &operator+=(SpectralForm const &o)
	{
		require(i_ == o.i_ && j_ == o.j_, Err::DegreeMismatch,
		        "adding forms of different type");
		if (terms_.empty())
			g_ = o.g_;
		for (auto &[k, c] : o.terms_)
			add(k, c);
		return *this;
	}
	SpectralForm &operator-=(SpectralForm const &o) { return *this += -o; }
	friend SpectralForm operator+(SpectralForm a, SpectralForm const &b) { return a += b; }
	friend SpectralForm operator-(SpectralForm a, SpectralForm const &b) { return a -= b; }

	friend SpectralForm operator*(GScalar const &s, SpectralForm const &a)
	{
		SpectralForm r(a.i_, a.j_, a.g_ + s.degree());
		for (auto &[k, c] : a.terms_)
			r.add(k, s * c);
		return r;
	}
	friend SpectralForm operator*(GaussianRational const &s, SpectralForm const &a)
	{
		SpectralForm r(a.i_, a.j_, a.g_);
		for (auto &[k, c] : a.terms_)
			r.add(k, s * c);
		return r;
	}
	SpectralForm operator/(GaussianRational const &s) const
	{
		return s.inverse() * *this;
	}

	friend bool operator==(SpectralForm const &a, SpectralForm const &b)
	{
		return a.i_ == b.i_ && a.j_ == b.j_ && a.terms_ == b.terms_;
	}

	SpectralForm conj_mirror() const; // coefficient at -k conjugated
	bool is_real() const;

	/// Coefficient of a Grassmann parameter monomial, coefficient-wise.
	SpectralForm extract(Mask bits, int bits_degree) const;

	std::string str() const;

  private:
	std::map<FKey, FiberElement> terms_;
	int i_, j_, g_;
};

/// Bilinear combination with base wedge signs and a caller-chosen fiber
/// combination; the workhorse behind wedge, bracket and action.
SpectralForm combine(SpectralForm const &a, SpectralForm const &b,
                     FiberOp const &op, int result_fiber_degree);

SpectralForm wedge(SpectralForm const &a, SpectralForm const &b);

/// Fiberwise so(3,1) bracket combined with the base wedge (both degree 2).
SpectralForm bracket_form(SpectralForm const &a, SpectralForm const &b,
                          Metric const &g = Metric::lorentzian());

/// Derivation action of a Lambda^2-valued form on any form.
SpectralForm action_form(SpectralForm const &x, SpectralForm const &a,
                         Metric const &g = Metric::lorentzian());

SpectralForm exterior_d(SpectralForm const &a);

struct VectorField
{
	// components are (0,0,g) scalar forms
	SpectralForm c1, c2;
	VectorField() : c1(0, 0, 0), c2(0, 0, 0) {}
	VectorField(SpectralForm a, SpectralForm b) : c1(std::move(a)), c2(std::move(b))
	{
		require(c1.form_degree() == 0 && c1.fiber_degree() == 0 &&
		            c2.form_degree() == 0 && c2.fiber_degree() == 0,
		        Err::DegreeMismatch, "vector field components must be scalars");
	}
	int ghost_degree() const
	{
		return c1.is_zero() ? c2.ghost_degree() : c1.ghost_degree();
	}
	bool is_zero() const { return c1.is_zero() && c2.is_zero(); }
	SpectralForm const &comp(int mu) const { return mu == 1 ? c1 : c2; }
	VectorField operator+(VectorField const &o) const
	{
		return VectorField(c1 + o.c1, c2 + o.c2);
	}
	VectorField operator-() const { return VectorField(-c1, -c2); }
	friend VectorField operator*(GScalar const &s, VectorField const &v)
	{
		return VectorField(s * v.c1, s * v.c2);
	}
};

/// A reference connection is a (1,2,0) form.
struct Connection
{
	SpectralForm base;
	Connection() : base(1, 2, 0) {}
	explicit Connection(SpectralForm b) : base(std::move(b))
	{
		require(base.form_degree() == 1 && base.fiber_degree() == 2,
		        Err::DegreeMismatch, "connection must be a (1,2) form");
	}
};

/// d_omega a = d a + [omega, a] (derivation action on the fiber).
SpectralForm cov_d(Connection const &omega, SpectralForm const &a,
                   Metric const &g = Metric::lorentzian());

/// F_omega = d omega + 1/2 [omega, omega].
SpectralForm curvature(Connection const &omega,
                       Metric const &g = Metric::lorentzian());

SpectralForm contract(VectorField const &xi, SpectralForm const &a);

/// Cartan formula L^omega_xi = iota_xi d_omega + d_omega iota_xi.
SpectralForm lie_derivative(Connection const &omega, VectorField const &xi,
                            SpectralForm const &a,
                            Metric const &g = Metric::lorentzian());

/// Lie bracket of vector fields, [x,y]^mu = x^nu d_nu y^mu - y^nu d_nu x^mu.
VectorField vf_bracket(VectorField const &x, VectorField const &y);

/// Derivative d_mu of a scalar form component (mode k picks i*k_mu).
SpectralForm partial_mu(SpectralForm const &a, int mu);

/// Integral over the torus: k = 0 coefficient of the top-form part.
/// The integrand must be a 2-form with fiber degree 4 (extracts the
/// e_{1234} coefficient) or fiber degree 0 (plain density).
GScalar integrate(SpectralForm const &a);

/// Pointwise Pfaffian density of a (2,2,g) form: a (2,0,2g) form built
/// from the polarized Pfaffian of the dx1 dx2 fiber coefficient.
SpectralForm pfaffian_density(SpectralForm const &E);

// --- seeded random fields -------------------------------------------------

/// Allocator for the anticommuting generators seeding odd test fields.
struct FieldGens
{
	int next = 0;
	int fresh()
	{
		require(next < 32, Err::Internal, "field generator pool exhausted");
		return next++;
	}
};

/// Random real (i,j,0) spectral form: <= nmodes frequencies, |k_mu| <= 2,
/// integer coefficients, reality by mirroring.
SpectralForm draw_real_form(Rng &rng, int i, int j, int nmodes = 3, int kmax = 2);

/// Random (i,j,g) field; odd/nonzero ghost degrees are seeded through
/// fresh anticommuting generators (two independent blocks).
SpectralForm draw_field(Rng &rng, FieldGens &gens, int i, int j, int g,
                        int nmodes = 3, int kmax = 2);

VectorField draw_vector_field(Rng &rng, FieldGens &gens, int g, int nmodes = 2,
                              int kmax = 1);

} // namespace corner
