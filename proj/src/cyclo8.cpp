#include "corner/cyclo8.hpp"
#include "corner/error.hpp"
#include <cmath>
#include <sstream>

namespace corner {

namespace {

// Q(zeta_8) = Q(i)[z] / (z^2 - i): split x = A + B z with A, B in Q(i).
void split_qi(Cyclo8 const &x, GaussianRational &A, GaussianRational &B)
{
	A = GaussianRational(x.c[0], x.c[2]);
	B = GaussianRational(x.c[1], x.c[3]);
}

Cyclo8 join_qi(GaussianRational const &A, GaussianRational const &B)
{
	Cyclo8 r;
	r.c[0] = A.re;
	r.c[2] = A.im;
	r.c[1] = B.re;
	r.c[3] = B.im;
	return r;
}

} // namespace

Cyclo8 Cyclo8::inverse() const
{
	require(!is_zero(), Err::Internal, "division by zero in Q(zeta_8)");
	// 1/(A + Bz) = (A - Bz) / (A^2 - i B^2)
	GaussianRational A, B;
	split_qi(*this, A, B);
	GaussianRational den = A * A - GaussianRational::i() * B * B;
	if (!den.is_zero())
	{
		GaussianRational inv = den.inverse();
		return join_qi(A * inv, -(B * inv));
	}
	// A^2 = i B^2 with nonzero element: fall back to the full norm
	// via conjugates: x^{-1} = conj products / N(x).
	Cyclo8 x1 = *this;
	// Galois conjugates z -> z^3, z^5, z^7
	auto galois = [&](int k) {
		Cyclo8 r;
		for (int i = 0; i < 4; ++i)
		{
			if (c[size_t(i)] == 0)
				continue;
			Cyclo8 t = Cyclo8::zeta_pow(long(i) * k);
			for (int j = 0; j < 4; ++j)
				r.c[size_t(j)] += c[size_t(i)] * t.c[size_t(j)];
		}
		return r;
	};
	Cyclo8 prod = galois(3) * galois(5) * galois(7);
	Cyclo8 norm = x1 * prod;
	require(norm.is_rational() && norm.c[0] != 0, Err::Internal,
	        "norm computation failed");
	Rational inv = 1 / norm.c[0];
	Cyclo8 r;
	for (int i = 0; i < 4; ++i)
		r.c[size_t(i)] = prod.c[size_t(i)] * inv;
	return r;
}

int Cyclo8::real_sign() const
{
	// real part = c0 + (c1 - c3) / sqrt(2)
	Rational a = c[0], b = c[1] - c[3];
	if (b == 0)
		return a == 0 ? 0 : (a > 0 ? 1 : -1);
	if (a == 0)
		return b > 0 ? 1 : -1;
	// compare a with -b/sqrt(2): sign of a + b/sqrt2; square comparison
	Rational a2 = a * a, b2 = b * b / 2;
	if (a > 0 && b > 0)
		return 1;
	if (a < 0 && b < 0)
		return -1;
	// opposite signs: |a| vs |b|/sqrt2
	if (a2 == b2)
		return 0;
	bool abs_a_wins = a2 > b2;
	return abs_a_wins ? (a > 0 ? 1 : -1) : (b > 0 ? 1 : -1);
}

double Cyclo8::to_double_re() const
{
	double s = std::sqrt(0.5);
	return c[0].get_d() + (c[1].get_d() - c[3].get_d()) * s;
}

double Cyclo8::to_double_im() const
{
	double s = std::sqrt(0.5);
	return c[2].get_d() + (c[1].get_d() + c[3].get_d()) * s;
}

std::string Cyclo8::str() const
{
	std::ostringstream os;
	os << c[0].get_str() << " + " << c[1].get_str() << " z + "
	   << c[2].get_str() << " z2 + " << c[3].get_str() << " z3";
	return os.str();
}

std::optional<Cyclo8> cyclo_sqrt(Cyclo8 const &v)
{
	if (v.is_zero())
		return Cyclo8(0);
	GaussianRational V0, V1;
	split_qi(v, V0, V1);
	if (V1.is_zero())
	{
		// x = A or x = B z: A^2 = V0 or i B^2 = V0
		if (auto a = gaussian_sqrt(V0))
			return join_qi(*a, GaussianRational(0));
		if (auto b = gaussian_sqrt(V0 * (-GaussianRational::i())))
			return join_qi(GaussianRational(0), *b);
		return std::nullopt;
	}
	// (A + Bz)^2 = A^2 + i B^2 + 2AB z: B = V1/(2A),
	// A^4 - V0 A^2 + i V1^2/4 = 0.
	GaussianRational disc = V0 * V0 -
	                        GaussianRational::i() * V1 * V1;
	auto droot = gaussian_sqrt(disc);
	if (!droot)
		return std::nullopt;
	for (int sign = 0; sign < 2; ++sign)
	{
		GaussianRational a2 = (V0 + (sign ? -*droot : *droot)) /
		                      GaussianRational(2);
		if (a2.is_zero())
			continue;
		auto a = gaussian_sqrt(a2);
		if (!a)
			continue;
		GaussianRational b = V1 / (GaussianRational(2) * *a);
		Cyclo8 cand = join_qi(*a, b);
		if (cand * cand == v)
			return cand;
	}
	return std::nullopt;
}

} // namespace corner
