#include "corner/forms.hpp"
#include <sstream>

namespace corner {

SpectralForm combine(SpectralForm const &a, SpectralForm const &b,
                     FiberOp const &op, int result_fiber_degree)
{
	require(a.form_degree() + b.form_degree() <= 2, Err::DegreeOverflow,
	        "base wedge past top degree");
	SpectralForm r(a.form_degree() + b.form_degree(), result_fiber_degree,
	               a.ghost_degree() + b.ghost_degree());
	for (auto &[ka, ca] : a.terms())
		for (auto &[kb, cb] : b.terms())
		{
			int s = grassmann_sign(ka.cmask, kb.cmask);
			if (s == 0)
				continue;
			FiberElement f = op(ca, cb);
			if (f.is_zero())
				continue;
			FKey key{ka.k1 + kb.k1, ka.k2 + kb.k2,
			         uint8_t(ka.cmask | kb.cmask)};
			r.add(key, s < 0 ? -f : f);
		}
	return r;
}

SpectralForm wedge(SpectralForm const &a, SpectralForm const &b)
{
	require(a.fiber_degree() + b.fiber_degree() <= 4, Err::DegreeOverflow,
	        "fiber wedge past top degree");
	return combine(a, b,
	               [](FiberElement const &u, FiberElement const &v) {
		               return wedge_fiber(u, v);
	               },
	               a.fiber_degree() + b.fiber_degree());
}

SpectralForm bracket_form(SpectralForm const &a, SpectralForm const &b,
                          Metric const &g)
{
	return combine(a, b,
	               [&g](FiberElement const &u, FiberElement const &v) {
		               return so31_bracket(u, v, g);
	               },
	               2);
}

SpectralForm action_form(SpectralForm const &x, SpectralForm const &a,
                         Metric const &g)
{
	return combine(x, a,
	               [&g](FiberElement const &u, FiberElement const &v) {
		               return so31_action(u, v, g);
	               },
	               a.fiber_degree());
}

SpectralForm exterior_d(SpectralForm const &a)
{
	require(a.form_degree() < 2, Err::DegreeOverflow,
	        "d of a top form");
	SpectralForm r(a.form_degree() + 1, a.fiber_degree(), a.ghost_degree());
	for (auto &[k, c] : a.terms())
		for (int mu = 1; mu <= 2; ++mu)
		{
			long kmu = mu == 1 ? k.k1 : k.k2;
			if (kmu == 0)
				continue;
			uint8_t mbit = uint8_t(1) << (mu - 1);
			int s = grassmann_sign(mbit, k.cmask);
			if (s == 0)
				continue;
			GaussianRational factor(Rational(0), Rational(kmu));
			if (s < 0)
				factor = -factor;
			r.add(FKey{k.k1, k.k2, uint8_t(mbit | k.cmask)}, factor * c);
		}
	return r;
}

SpectralForm cov_d(Connection const &omega, SpectralForm const &a,
                   Metric const &g)
{
	SpectralForm r = exterior_d(a);
	r += action_form(omega.base, a, g);
	return r;
}

SpectralForm curvature(Connection const &omega, Metric const &g)
{
	SpectralForm r = exterior_d(omega.base);
	r += bracket_form(omega.base, omega.base, g) / GaussianRational(2);
	return r;
}

SpectralForm contract(VectorField const &xi, SpectralForm const &a)
{
	require(a.form_degree() >= 1, Err::DegreeUnderflow,
	        "interior product of a scalar");
	SpectralForm r(a.form_degree() - 1, a.fiber_degree(),
	               a.ghost_degree() + xi.ghost_degree());
	for (auto &[k, c] : a.terms())
		for (int mu = 1; mu <= 2; ++mu)
		{
			uint8_t mbit = uint8_t(1) << (mu - 1);
			if (!(k.cmask & mbit))
				continue;
			int s = split_sign(mbit, k.cmask);
			SpectralForm const &comp = xi.comp(mu);
			for (auto &[kx, cx] : comp.terms())
			{
				// coefficient times xi^mu from the right
				FiberElement f(c.fiber_degree(),
				               c.ghost_degree() + cx.ghost_degree());
				GScalar x = cx.coeff(0);
				for (auto &[m, cc] : c.terms())
					f.add(m, cc * x);
				if (f.is_zero())
					continue;
				r.add(FKey{k.k1 + kx.k1, k.k2 + kx.k2,
				           uint8_t(k.cmask & ~mbit)},
				      s < 0 ? -f : f);
			}
		}
	return r;
}

SpectralForm lie_derivative(Connection const &omega, VectorField const &xi,
                            SpectralForm const &a, Metric const &g)
{
	SpectralForm r(a.form_degree(), a.fiber_degree(),
	               a.ghost_degree() + xi.ghost_degree());
	if (a.form_degree() < 2)
		r += contract(xi, cov_d(omega, a, g));
	if (a.form_degree() >= 1)
	{
		SpectralForm inner = contract(xi, a);
		r += cov_d(omega, inner, g);
	}
	return r;
}

SpectralForm partial_mu(SpectralForm const &a, int mu)
{
	SpectralForm r(a.form_degree(), a.fiber_degree(), a.ghost_degree());
	for (auto &[k, c] : a.terms())
	{
		long kmu = mu == 1 ? k.k1 : k.k2;
		if (kmu == 0)
			continue;
		r.add(k, GaussianRational(Rational(0), Rational(kmu)) * c);
	}
	return r;
}

VectorField vf_bracket(VectorField const &x, VectorField const &y)
{
	VectorField r;
	for (int mu = 1; mu <= 2; ++mu)
	{
		SpectralForm acc(0, 0, x.ghost_degree() + y.ghost_degree());
		for (int nu = 1; nu <= 2; ++nu)
		{
			acc += combine(x.comp(nu), partial_mu(y.comp(mu), nu),
			               [](FiberElement const &u, FiberElement const &v) {
				               return wedge_fiber(u, v);
			               },
			               0);
			acc -= combine(y.comp(nu), partial_mu(x.comp(mu), nu),
			               [](FiberElement const &u, FiberElement const &v) {
				               return wedge_fiber(u, v);
			               },
			               0);
		}
		(mu == 1 ? r.c1 : r.c2) = acc;
	}
	return r;
}

GScalar integrate(SpectralForm const &a)
{
	require(a.form_degree() == 2, Err::NotTopForm, "integrand must be a 2-form");
	require(a.fiber_degree() == 4 || a.fiber_degree() == 0, Err::NotTopFiber,
	        "integrand must have fiber degree 4 or be scalar-valued");
	FiberElement c = a.coeff(FKey{0, 0, 0b11});
	if (a.fiber_degree() == 4)
		return c.coeff(0b1111);
	return c.coeff(0);
}

SpectralForm pfaffian_density(SpectralForm const &E)
{
	require(E.form_degree() == 2 && E.fiber_degree() == 2, Err::DegreeMismatch,
	        "Pfaffian density needs a (2,2) form");
	SpectralForm r(2, 0, 2 * E.ghost_degree());
	for (auto &[ka, ca] : E.terms())
		for (auto &[kb, cb] : E.terms())
		{
			GScalar p = wedge_fiber(ca, cb).coeff(0b1111) / GaussianRational(2);
			if (p.is_zero())
				continue;
			FiberElement f(0, p.degree());
			f.add(0, p);
			r.add(FKey{ka.k1 + kb.k1, ka.k2 + kb.k2, 0b11}, f);
		}
	return r;
}

SpectralForm SpectralForm::extract(Mask bits, int bits_degree) const
{
	SpectralForm r(i_, j_, g_ - bits_degree);
	for (auto &[k, c] : terms_)
	{
		FiberElement f(j_, g_ - bits_degree);
		for (auto &[m, cc] : c.terms())
		{
			GScalar x = cc.extract(bits, bits_degree);
			if (!x.is_zero())
				f.add(m, x);
		}
		if (!f.is_zero())
			r.add(k, f);
	}
	return r;
}

SpectralForm SpectralForm::conj_mirror() const
{
	SpectralForm r(i_, j_, g_);
	for (auto &[k, c] : terms_)
		r.add(FKey{-k.k1, -k.k2, k.cmask}, c.conj());
	return r;
}

bool SpectralForm::is_real() const
{
	return *this == conj_mirror();
}

std::string SpectralForm::str() const
{
	if (terms_.empty())
		return "0";
	std::ostringstream os;
	bool first = true;
	for (auto &[k, c] : terms_)
	{
		if (!first)
			os << "  +  ";
		first = false;
		os << "e^{i(" << k.k1 << "," << k.k2 << ").x}";
		for (int mu = 1; mu <= 2; ++mu)
			if (k.cmask & (1 << (mu - 1)))
				os << " dx" << mu;
		os << " * " << c.str();
	}
	return os.str();
}

SpectralForm draw_real_form(Rng &rng, int i, int j, int nmodes, int kmax)
{
	SpectralForm r(i, j, 0);
	int modes = int(draw_int(rng, 1, nmodes));
	for (int t = 0; t < modes; ++t)
	{
		int k1 = int(draw_int(rng, -kmax, kmax));
		int k2 = int(draw_int(rng, -kmax, kmax));
		for (uint8_t cmask = 0; cmask < 4; ++cmask)
		{
			if (std::popcount(cmask) != i)
				continue;
			FiberElement re = draw_fiber(rng, j, 0);
			if (k1 == 0 && k2 == 0)
			{
				r.add(FKey{0, 0, cmask}, re);
				continue;
			}
			FiberElement im = draw_fiber(rng, j, 0);
			FiberElement c(j, 0);
			for (auto &[m, cc] : re.terms())
				c.add(m, cc);
			for (auto &[m, cc] : im.terms())
				c.add(m, GaussianRational::i() * cc);
			r.add(FKey{k1, k2, cmask}, c);
			r.add(FKey{-k1, -k2, cmask}, c.conj());
		}
	}
	return r;
}

SpectralForm draw_field(Rng &rng, FieldGens &gens, int i, int j, int g,
                        int nmodes, int kmax)
{
	if (g == 0)
		return draw_real_form(rng, i, j, nmodes, kmax);
	SpectralForm r(i, j, g);
	int blocks = 2;
	for (int b = 0; b < blocks; ++b)
	{
		GScalar seed(1);
		int left = std::abs(g);
		int dir = g > 0 ? 1 : -1;
		while (left > 0)
		{
			seed = seed * GScalar::theta(gens.fresh(), dir);
			--left;
		}
		r += seed * draw_real_form(rng, i, j, nmodes, kmax);
	}
	return r;
}

VectorField draw_vector_field(Rng &rng, FieldGens &gens, int g, int nmodes,
                              int kmax)
{
	if (g == 0)
		return VectorField(draw_real_form(rng, 0, 0, nmodes, kmax),
		                   draw_real_form(rng, 0, 0, nmodes, kmax));
	VectorField r;
	r.c1 = SpectralForm(0, 0, g);
	r.c2 = SpectralForm(0, 0, g);
	for (int b = 0; b < 2; ++b)
	{
		GScalar seed(1);
		int left = std::abs(g);
		int dir = g > 0 ? 1 : -1;
		while (left > 0)
		{
			seed = seed * GScalar::theta(gens.fresh(), dir);
			--left;
		}
		r.c1 += seed * draw_real_form(rng, 0, 0, nmodes, kmax);
		r.c2 += seed * draw_real_form(rng, 0, 0, nmodes, kmax);
	}
	return r;
}

} // namespace corner
