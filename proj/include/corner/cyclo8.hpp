#pragma once

/**
 * The cyclotomic field Q(zeta_8), used when spectral fields are evaluated
 * exactly at the points of an 8x8 torus grid: e^{ik.x} at x = 2pi p / 8
 * is a power of zeta_8. Elements are stored as a + b z + c z^2 + d z^3
 * with z^4 = -1; the Gaussian rationals embed via i = z^2.
 */

#include "corner/rational.hpp"
#include <array>
#include <optional>

namespace corner {

struct Cyclo8
{
	std::array<Rational, 4> c{Rational(0), Rational(0), Rational(0), Rational(0)};

	Cyclo8() = default;
	Cyclo8(long n) { c[0] = n; }
	explicit Cyclo8(Rational r) { c[0] = std::move(r); }
	explicit Cyclo8(GaussianRational const &z)
	{
		c[0] = z.re;
		c[2] = z.im;
	}

	static Cyclo8 zeta_pow(long k)
	{
		k = ((k % 8) + 8) % 8;
		Cyclo8 r;
		if (k < 4)
			r.c[size_t(k)] = 1;
		else
			r.c[size_t(k - 4)] = -1;
		return r;
	}

	bool is_zero() const
	{
		return c[0] == 0 && c[1] == 0 && c[2] == 0 && c[3] == 0;
	}
	bool is_rational() const { return c[1] == 0 && c[2] == 0 && c[3] == 0; }

	Cyclo8 operator-() const
	{
		Cyclo8 r;
		for (int i = 0; i < 4; ++i)
			r.c[i] = -c[i];
		return r;
	}
	Cyclo8 &operator+=(Cyclo8 const &o)
	{
		for (int i = 0; i < 4; ++i)
			c[i] += o.c[i];
		return *this;
	}
	Cyclo8 &operator-=(Cyclo8 const &o)
	{
		for (int i = 0; i < 4; ++i)
			c[i] -= o.c[i];
		return *this;
	}
	friend Cyclo8 operator+(Cyclo8 a, Cyclo8 const &b) { return a += b; }
	friend Cyclo8 operator-(Cyclo8 a, Cyclo8 const &b) { return a -= b; }
	friend Cyclo8 operator*(Cyclo8 const &a, Cyclo8 const &b)
	{
		Cyclo8 r;
		for (int i = 0; i < 4; ++i)
		{
			if (a.c[i] == 0)
				continue;
			for (int j = 0; j < 4; ++j)
			{
				if (b.c[j] == 0)
					continue;
				int k = i + j;
				Rational v = a.c[i] * b.c[j];
				if (k >= 4)
				{
					k -= 4;
					v = -v;
				}
				r.c[size_t(k)] += v;
			}
		}
		return r;
	}
	friend bool operator==(Cyclo8 const &a, Cyclo8 const &b)
	{
		return a.c == b.c;
	}

	/// Complex conjugation: z -> z^{-1} = -z^3.
	Cyclo8 conj() const
	{
		Cyclo8 r;
		r.c[0] = c[0];
		r.c[1] = -c[3];
		r.c[2] = -c[2];
		r.c[3] = -c[1];
		return r;
	}

	Cyclo8 inverse() const;
	friend Cyclo8 operator/(Cyclo8 const &a, Cyclo8 const &b)
	{
		return a * b.inverse();
	}

	/// Exact sign of the real part (real part is c0 + (c1 - c3)/sqrt(2)).
	int real_sign() const;

	double to_double_re() const;
	double to_double_im() const;
	std::string str() const;
};

/// Square root within Q(zeta_8), when one exists.
std::optional<Cyclo8> cyclo_sqrt(Cyclo8 const &v);

} // namespace corner
