#pragma once

/**
 * Grassmann-extended Gaussian rationals.
 *
 * A GScalar is an element of the exterior algebra over Q[i] on up to 64
 * anticommuting generators, together with a declared integer Z-degree.
 * Generators carry no intrinsic degree; the object invariant is that the
 * cardinality of every stored monomial agrees with the declared degree
 * mod 2 (parity is the grading mod two).
 *
 * All sign conventions of the library reduce to the two mask helpers
 * below (`grassmann_sign` for products, `split_sign` for factoring a
 * monomial); everything downstream is mechanical.
 *
 * Generator indices 0..31 seed random test fields, indices 32..63 are
 * reserved for nilpotent parameters used by the variational calculus
 * (directional derivatives, two-form slots). Parameters are allocated
 * through ParamScope, which is thread-local and RAII-released.
 */

#include "corner/error.hpp"
#include "corner/rational.hpp"
#include <bit>
#include <cstdint>
#include <map>
#include <vector>

namespace corner {

using Mask = uint64_t;

/// Sign of theta_A * theta_B relative to the sorted monomial theta_{A|B}.
/// Returns 0 when the masks overlap (nilpotence).
inline int grassmann_sign(Mask a, Mask b)
{
	if (a & b)
		return 0;
	int inversions = 0;
	Mask bb = b;
	while (bb)
	{
		int bit = std::countr_zero(bb);
		bb &= bb - 1;
		inversions += std::popcount(a >> (bit + 1));
	}
	return (inversions & 1) ? -1 : 1;
}

/// Sign s with theta_m = s * theta_bits * theta_{m minus bits}; bits must
/// be a subset of m.
inline int split_sign(Mask bits, Mask m)
{
	return grassmann_sign(bits, m & ~bits);
}

class GScalar {
  public:
	GScalar() : degree_(0) {}
	explicit GScalar(GaussianRational c, int degree = 0) : degree_(degree)
	{
		if (!c.is_zero())
			terms_[0] = std::move(c);
		require(degree % 2 == 0 || terms_.empty(), Err::DegreeMismatch,
		        "body term needs even declared degree");
	}
	GScalar(long n) : GScalar(GaussianRational(n)) {}

	/// Single generator theta_i with declared degree (odd; usually +1/-1).
	static GScalar theta(int i, int degree = 1)
	{
		require(degree % 2 != 0, Err::DegreeMismatch,
		        "generator degree must be odd");
		GScalar s;
		s.degree_ = degree;
		s.terms_[Mask(1) << i] = GaussianRational(1);
		return s;
	}

	static GScalar monomial(Mask m, GaussianRational c, int degree)
	{
		GScalar s;
		s.degree_ = degree;
		if (!c.is_zero())
			s.terms_[m] = std::move(c);
		s.check_parity();
		return s;
	}

	int degree() const { return degree_; }
	/// Whether the declared degree describes every stored monomial.
	/// Variational internals form graded-inhomogeneous sums; signs are
	/// intrinsic to the monomial masks and never consult the degree.
	bool homogeneous() const { return homog_; }
	bool is_zero() const { return terms_.empty(); }
	size_t term_count() const { return terms_.size(); }
	std::map<Mask, GaussianRational> const &terms() const { return terms_; }

	/// Coefficient of the empty monomial.
	GaussianRational body() const
	{
		auto it = terms_.find(0);
		return it == terms_.end() ? GaussianRational() : it->second;
	}

	GaussianRational coeff(Mask m) const
	{
		auto it = terms_.find(m);
		return it == terms_.end() ? GaussianRational() : it->second;
	}

	GScalar conj() const
	{
		GScalar r;
		r.degree_ = degree_;
		r.homog_ = homog_;
		for (auto &[m, c] : terms_)
			r.terms_[m] = c.conj();
		return r;
	}

	GScalar operator-() const
	{
		GScalar r;
		r.degree_ = degree_;
		r.homog_ = homog_;
		for (auto &[m, c] : terms_)
			r.terms_[m] = -c;
		return r;
	}

	GScalar &operator+=(GScalar const &o)
	{
		if (o.is_zero())
			return *this;
		if (is_zero())
		{
			degree_ = o.degree_;
			homog_ = o.homog_;
		}
		else if (degree_ != o.degree_ || !o.homog_)
			homog_ = false;
		for (auto &[m, c] : o.terms_)
		{
			auto it = terms_.find(m);
			if (it == terms_.end())
				terms_[m] = c;
			else
			{
				it->second += c;
				if (it->second.is_zero())
					terms_.erase(it);
			}
		}
		return *this;
	}
	GScalar &operator-=(GScalar const &o) { return *this += -o; }

	friend GScalar operator+(GScalar a, GScalar const &b) { return a += b; }
	friend GScalar operator-(GScalar a, GScalar const &b) { return a -= b; }

	friend GScalar operator*(GScalar const &a, GScalar const &b)
	{
		GScalar r;
		r.degree_ = a.degree_ + b.degree_;
		r.homog_ = a.homog_ && b.homog_;
		if (a.is_zero() || b.is_zero())
			return r;
		for (auto &[ma, ca] : a.terms_)
			for (auto &[mb, cb] : b.terms_)
			{
				int s = grassmann_sign(ma, mb);
				if (s == 0)
					continue;
				GaussianRational c = ca * cb;
				if (s < 0)
					c = -c;
				Mask m = ma | mb;
				auto it = r.terms_.find(m);
				if (it == r.terms_.end())
				{
					if (!c.is_zero())
						r.terms_[m] = std::move(c);
				}
				else
				{
					it->second += c;
					if (it->second.is_zero())
						r.terms_.erase(it);
				}
			}
		return r;
	}

	friend GScalar operator*(GaussianRational const &c, GScalar s)
	{
		return s.scale(c);
	}
	friend GScalar operator*(GScalar s, GaussianRational const &c)
	{
		return s.scale(c);
	}

	GScalar scale(GaussianRational const &c) const
	{
		GScalar r;
		r.degree_ = degree_;
		r.homog_ = homog_;
		if (c.is_zero())
			return r;
		for (auto &[m, x] : terms_)
			r.terms_[m] = x * c;
		return r;
	}
	GScalar operator/(GaussianRational const &c) const
	{
		return scale(c.inverse());
	}

	friend bool operator==(GScalar const &a, GScalar const &b)
	{
		if (a.is_zero() && b.is_zero())
			return true;
		return a.degree_ == b.degree_ && a.terms_ == b.terms_;
	}

	/// Coefficient of theta_bits: keeps terms whose mask contains bits,
	/// strips them with the factoring sign, shifts the declared degree
	/// down by bits_degree.
	GScalar extract(Mask bits, int bits_degree) const
	{
		GScalar r;
		r.degree_ = degree_ - bits_degree;
		r.homog_ = homog_;
		for (auto &[m, c] : terms_)
		{
			if ((m & bits) != bits)
				continue;
			int s = split_sign(bits, m);
			r.terms_[m & ~bits] = s < 0 ? -c : c;
		}
		return r;
	}

	/// Part of the scalar not involving any of the given generator bits.
	GScalar without(Mask bits) const
	{
		GScalar r;
		r.degree_ = degree_;
		r.homog_ = homog_;
		for (auto &[m, c] : terms_)
			if ((m & bits) == 0)
				r.terms_[m] = c;
		return r;
	}

	bool depends_on(Mask bits) const
	{
		for (auto &[m, c] : terms_)
			if (m & bits)
				return true;
		return false;
	}

	std::string str() const;

	void set_degree(int d)
	{
		degree_ = d;
		homog_ = true;
		check_parity();
	}

  private:
	void check_parity() const
	{
		if (!homog_)
			return;
		for (auto &[m, c] : terms_)
			require(((std::popcount(m) ^ degree_) & 1) == 0,
			        Err::DegreeMismatch, "monomial parity mismatch");
	}

	std::map<Mask, GaussianRational> terms_;
	int degree_;
	bool homog_ = true;
};

/// Thread-local arena for variational parameter generators (indices >= 32).
class ParamScope {
  public:
	ParamScope()
	{
		base_ = next();
	}
	~ParamScope() { next() = base_; }
	ParamScope(ParamScope const &) = delete;
	ParamScope &operator=(ParamScope const &) = delete;

	/// Fresh odd generator index.
	int fresh()
	{
		int i = next()++;
		require(i < 64, Err::Internal, "parameter generator pool exhausted");
		return i;
	}

	/// Even nilpotent parameter t = theta_a theta_b of declared degree 0
	/// (degrees +1 and -1). Central, t^2 = 0.
	GScalar even_nilpotent()
	{
		int a = fresh(), b = fresh();
		return GScalar::theta(a, 1) * GScalar::theta(b, -1);
	}

	/// Odd parameter of declared degree d (odd).
	GScalar odd_param(int d = 1) { return GScalar::theta(fresh(), d); }

  private:
	static int &next()
	{
		thread_local int counter = 32;
		return counter;
	}
	int base_;
};

} // namespace corner
