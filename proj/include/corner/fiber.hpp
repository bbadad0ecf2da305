#pragma once

/**
 * The four-dimensional Lorentzian fiber V and its exterior algebra.
 *
 * Internal fiber indices are 1..4, stored as bits 0..3 of a mask; the
 * metric is diag(+,+,+,-) with the minus on index 4 (a Euclidean toggle
 * is provided). Orientation is fixed by e1^e2^e3^e4 = +vol, i.e.
 * eps_{1234} = +1.
 *
 * Degree-2 elements are identified with so(3,1); the graded bracket,
 * its derivation action on all of Lambda V, the invariant pairing
 * <u,v> = 1/4 eps_{abcd} u^{ab} v^{cd} and the Pfaffian
 * Pf(E) = 1/8 eps_{abcd} E^{ab} E^{cd} are implemented here.
 *
 * Coefficients are GScalars; products keep left-argument coefficients to
 * the left, which yields the correct graded formulas for all parities.
 */

#include "corner/gscalar.hpp"
#include <array>
#include <cstdint>

namespace corner {

using FMask = uint8_t; // 4 bits, fiber indices 1..4 -> bits 0..3

struct Metric
{
	enum class Signature { Lorentzian, Euclidean };
	Signature signature = Signature::Lorentzian;

	/// eta_{aa} for a in 1..4.
	int eta(int a) const
	{
		return (signature == Signature::Lorentzian && a == 4) ? -1 : 1;
	}
	static Metric lorentzian() { return {Signature::Lorentzian}; }
	static Metric euclidean() { return {Signature::Euclidean}; }
};

class FiberElement {
  public:
	FiberElement() : fdeg_(0), ghost_(0) {}
	FiberElement(int fiber_degree, int ghost_degree)
	    : fdeg_(fiber_degree), ghost_(ghost_degree)
	{
		require(fdeg_ >= 0 && fdeg_ <= 4, Err::DegreeOverflow,
		        "fiber degree out of range");
	}

	/// Basis j-vector e_{a1..aj} (indices 1..4) with unit coefficient.
	static FiberElement basis(std::initializer_list<int> idx,
	                          GaussianRational c = GaussianRational(1),
	                          int ghost = 0)
	{
		FMask m = 0;
		int sign = 1;
		for (int a : idx)
		{
			FMask bit = FMask(1) << (a - 1);
			sign *= grassmann_sign(m, bit);
			m |= bit;
		}
		require(sign != 0, Err::DegreeOverflow, "repeated fiber index");
		FiberElement r(std::popcount(m), ghost);
		r.set(m, GScalar(sign < 0 ? -c : c, ghost));
		return r;
	}

	static FiberElement zero(int fiber_degree, int ghost)
	{
		return FiberElement(fiber_degree, ghost);
	}

	int fiber_degree() const { return fdeg_; }
	int ghost_degree() const { return ghost_; }
	bool is_zero() const { return terms_.empty(); }

	std::map<FMask, GScalar> const &terms() const { return terms_; }

	GScalar coeff(FMask m) const
	{
		auto it = terms_.find(m);
		return it == terms_.end() ? GScalar() : it->second;
	}

	void set(FMask m, GScalar c)
	{
		require(std::popcount(m) == fdeg_, Err::DegreeMismatch,
		        "multi-index length != fiber degree");
		if (c.is_zero())
			terms_.erase(m);
		else
			terms_[m] = std::move(c);
	}

	void add(FMask m, GScalar const &c)
	{
		if (c.is_zero())
			return;
		auto it = terms_.find(m);
		if (it == terms_.end())
			set(m, c);
		else
		{
			it->second += c;
			if (it->second.is_zero())
				terms_.erase(it);
		}
	}

	FiberElement operator-() const
	{
		FiberElement r(fdeg_, ghost_);
		for (auto &[m, c] : terms_)
			r.terms_[m] = -c;
		return r;
	}
	FiberElement &operator+=(FiberElement const &o)
	{
		require(fdeg_ == o.fdeg_, Err::DegreeMismatch, "fiber degree mismatch");
		if (!o.terms_.empty() && terms_.empty())
			ghost_ = o.ghost_;
		for (auto &[m, c] : o.terms_)
			add(m, c);
		return *this;
	}
	FiberElement &operator-=(FiberElement const &o) { return *this += -o; }
	friend FiberElement operator+(FiberElement a, FiberElement const &b) { return a += b; }
	friend FiberElement operator-(FiberElement a, FiberElement const &b) { return a -= b; }

	/// Left multiplication by a scalar.
	friend FiberElement operator*(GScalar const &s, FiberElement const &u)
	{
		FiberElement r(u.fdeg_, u.ghost_ + s.degree());
		for (auto &[m, c] : u.terms_)
			r.add(m, s * c);
		return r;
	}
	friend FiberElement operator*(GaussianRational const &s, FiberElement const &u)
	{
		FiberElement r(u.fdeg_, u.ghost_);
		for (auto &[m, c] : u.terms_)
			r.add(m, c.scale(s));
		return r;
	}

	FiberElement conj() const
	{
		FiberElement r(fdeg_, ghost_);
		for (auto &[m, c] : terms_)
			r.terms_[m] = c.conj();
		return r;
	}

	friend bool operator==(FiberElement const &a, FiberElement const &b)
	{
		return a.fdeg_ == b.fdeg_ && a.terms_ == b.terms_;
	}

	std::string str() const;

  private:
	std::map<FMask, GScalar> terms_;
	int fdeg_;
	int ghost_;
};

/// Exterior product on Lambda V. Throws DegreeOverflow past degree 4.
FiberElement wedge_fiber(FiberElement const &u, FiberElement const &v);

/// Graded so(3,1) bracket on degree-2 elements,
/// [u,v]^{ab} = eta_c (u^{ac} v^{cb} - u^{cb} v^{ac}).
FiberElement so31_bracket(FiberElement const &u, FiberElement const &v,
                          Metric const &g = Metric::lorentzian());

/// Derivation action of a degree-2 element on Lambda^j V; coincides with
/// the bracket on j = 2.
FiberElement so31_action(FiberElement const &x, FiberElement const &u,
                         Metric const &g = Metric::lorentzian());

/// <u,v> = 1/4 eps_{abcd} u^{ab} v^{cd}; the e_{1234} coefficient of u^v.
GScalar invariant_pairing(FiberElement const &u, FiberElement const &v);

/// Pf(E) = 1/8 eps_{abcd} E^{ab} E^{cd}.
GScalar pfaffian(FiberElement const &E);

struct BivectorSplit
{
	std::array<GScalar, 3> J;
	std::array<GScalar, 3> M;
};

/// Split a theta-free bivector into rotation/boost parts:
/// J = (E^{23}, -E^{13}, E^{12}), M^i = E^{i4} (labels 0..3 of the
/// defect picture map to 1..4 here via 0 -> 4). Then Pf = M.J exactly.
BivectorSplit jm_split(FiberElement const &A);

/// Inverse of jm_split.
FiberElement jm_reassemble(BivectorSplit const &s);

} // namespace corner
