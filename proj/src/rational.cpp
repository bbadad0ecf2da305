#include "corner/rational.hpp"

namespace corner {

std::optional<Rational> rational_sqrt(Rational const &x)
{
	if (x < 0)
		return std::nullopt;
	if (x == 0)
		return Rational(0);
	mpz_class num = x.get_num(), den = x.get_den();
	if (mpz_perfect_square_p(num.get_mpz_t()) == 0 ||
	    mpz_perfect_square_p(den.get_mpz_t()) == 0)
		return std::nullopt;
	mpz_class rn, rd;
	mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
	mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
	Rational r(rn, rd);
	r.canonicalize();
	return r;
}

std::optional<GaussianRational> gaussian_sqrt(GaussianRational const &z)
{
	// sqrt(a+bi) = x+yi with x^2 = (a+r)/2, y = b/(2x), r = |z|.
	if (z.is_zero())
		return GaussianRational(0);
	auto r = rational_sqrt(z.norm2());
	if (!r)
		return std::nullopt;
	if (z.im == 0)
	{
		if (z.re > 0)
		{
			auto x = rational_sqrt(z.re);
			if (x)
				return GaussianRational(*x);
			return std::nullopt;
		}
		auto y = rational_sqrt(Rational(-z.re));
		if (y)
			return GaussianRational(Rational(0), *y);
		return std::nullopt;
	}
	Rational half_sum = (z.re + *r) / 2;
	auto x = rational_sqrt(half_sum);
	if (!x || *x == 0)
		return std::nullopt;
	Rational y = z.im / (2 * (*x));
	GaussianRational cand(*x, y);
	if (cand * cand == z)
		return cand;
	return std::nullopt;
}

std::string rational_str(Rational const &r)
{
	return r.get_str();
}

std::string GaussianRational::str() const
{
	if (im == 0)
		return rational_str(re);
	if (re == 0)
		return rational_str(im) + " i";
	std::string s = rational_str(re);
	if (im > 0)
		s += " + " + rational_str(im) + " i";
	else
		s += " - " + rational_str(Rational(-im)) + " i";
	return s;
}

GaussianRational parse_gaussian(std::string const &s)
{
	// Accepts "a/b", "a/b + c/d i", "a/b - c/d i", "c/d i".
	auto trim = [](std::string t) {
		size_t b = t.find_first_not_of(" \t");
		size_t e = t.find_last_not_of(" \t");
		if (b == std::string::npos)
			return std::string();
		return t.substr(b, e - b + 1);
	};
	std::string t = trim(s);
	if (t.empty())
		fail(Err::ConfigError, "empty scalar literal");
	bool has_i = false;
	if (t.back() == 'i')
	{
		has_i = true;
		t = trim(t.substr(0, t.size() - 1));
	}
	// split on the last top-level " + " or " - "
	size_t pos = std::string::npos;
	int sign = 1;
	for (size_t p = 1; p + 1 < t.size(); ++p)
	{
		if (t[p - 1] == ' ' && (t[p] == '+' || t[p] == '-') && t[p + 1] == ' ')
		{
			pos = p;
			sign = t[p] == '+' ? 1 : -1;
		}
	}
	if (pos == std::string::npos)
	{
		Rational r = parse_rational(t);
		return has_i ? GaussianRational(Rational(0), r) : GaussianRational(r);
	}
	if (!has_i)
		fail(Err::ConfigError, "two-part scalar must end in i: '" + s + "'");
	Rational re = parse_rational(trim(t.substr(0, pos - 1)));
	Rational im = parse_rational(trim(t.substr(pos + 2)));
	if (sign < 0)
		im = -im;
	return GaussianRational(re, im);
}

} // namespace corner
