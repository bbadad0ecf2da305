#pragma once

/**
 * Exact Gaussian-rational arithmetic.
 *
 * All coefficients in this library are elements of Q[i] with GMP-backed
 * rational parts. No floating point is used anywhere in the exact lane.
 */

#include "corner/error.hpp"
#include <gmpxx.h>
#include <optional>
#include <string>

namespace corner {

using Rational = mpq_class;

inline Rational rat(long num, long den = 1)
{
	Rational r(num, den);
	r.canonicalize();
	return r;
}

/// Parse "a", "-a/b" etc. Throws ConfigError on malformed input.
inline Rational parse_rational(std::string const &s)
{
	Rational r;
	if (r.set_str(s, 10) != 0)
		fail(Err::ConfigError, "cannot parse rational '" + s + "'");
	r.canonicalize();
	return r;
}

/// Exact square root if the rational is a perfect square.
std::optional<Rational> rational_sqrt(Rational const &x);

struct GaussianRational
{
	Rational re, im;

	GaussianRational() : re(0), im(0) {}
	GaussianRational(long n) : re(n, 1), im(0) {}
	GaussianRational(Rational r) : re(std::move(r)), im(0) {}
	GaussianRational(Rational r, Rational i)
	    : re(std::move(r)), im(std::move(i))
	{}

	static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

	bool is_zero() const { return re == 0 && im == 0; }
	bool is_real() const { return im == 0; }

	GaussianRational conj() const { return {re, Rational(-im)}; }

	/// |z|^2, a nonnegative rational.
	Rational norm2() const { return re * re + im * im; }

	GaussianRational operator-() const { return {Rational(-re), Rational(-im)}; }

	GaussianRational &operator+=(GaussianRational const &o)
	{
		re += o.re;
		im += o.im;
		return *this;
	}
	GaussianRational &operator-=(GaussianRational const &o)
	{
		re -= o.re;
		im -= o.im;
		return *this;
	}
	GaussianRational &operator*=(GaussianRational const &o)
	{
		Rational r = re * o.re - im * o.im;
		Rational i = re * o.im + im * o.re;
		re = std::move(r);
		im = std::move(i);
		return *this;
	}
	GaussianRational &operator/=(GaussianRational const &o)
	{
		if (o.is_zero())
			fail(Err::Internal, "division by zero in Q[i]");
		Rational n = o.norm2();
		Rational r = (re * o.re + im * o.im) / n;
		Rational i = (im * o.re - re * o.im) / n;
		re = std::move(r);
		im = std::move(i);
		return *this;
	}

	friend GaussianRational operator+(GaussianRational a, GaussianRational const &b) { return a += b; }
	friend GaussianRational operator-(GaussianRational a, GaussianRational const &b) { return a -= b; }
	friend GaussianRational operator*(GaussianRational a, GaussianRational const &b) { return a *= b; }
	friend GaussianRational operator/(GaussianRational a, GaussianRational const &b) { return a /= b; }
	friend bool operator==(GaussianRational const &a, GaussianRational const &b)
	{
		return a.re == b.re && a.im == b.im;
	}

	GaussianRational inverse() const
	{
		GaussianRational one(1);
		return one / *this;
	}

	/// Canonical text form "a/b + c/d i" (pure-real values print as "a/b").
	std::string str() const;

	double to_double_re() const { return re.get_d(); }
	double to_double_im() const { return im.get_d(); }
};

/// Exact square root inside Q[i], when one exists.
std::optional<GaussianRational> gaussian_sqrt(GaussianRational const &z);

std::string rational_str(Rational const &r);
GaussianRational parse_gaussian(std::string const &s);

} // namespace corner
