#include "corner/fiber.hpp"
#include <sstream>

namespace corner {

FiberElement wedge_fiber(FiberElement const &u, FiberElement const &v)
{
	require(u.fiber_degree() + v.fiber_degree() <= 4, Err::DegreeOverflow,
	        "fiber wedge past top degree");
	FiberElement r(u.fiber_degree() + v.fiber_degree(),
	               u.ghost_degree() + v.ghost_degree());
	for (auto &[ma, ca] : u.terms())
		for (auto &[mb, cb] : v.terms())
		{
			int s = grassmann_sign(ma, mb);
			if (s == 0)
				continue;
			GScalar c = ca * cb;
			r.add(ma | mb, s < 0 ? -c : c);
		}
	return r;
}

namespace {

// Antisymmetric component u^{ab} (a != b, indices 1..4) of a degree-2
// element stored on strictly increasing index pairs.
GScalar bicomp(FiberElement const &u, int a, int b)
{
	if (a == b)
		return GScalar();
	FMask m = (FMask(1) << (a - 1)) | (FMask(1) << (b - 1));
	GScalar c = u.coeff(m);
	if (a > b)
		return -c;
	return c;
}

} // namespace

FiberElement so31_bracket(FiberElement const &u, FiberElement const &v,
                          Metric const &g)
{
	require(u.fiber_degree() == 2 && v.fiber_degree() == 2,
	        Err::DegreeMismatch, "so(3,1) bracket needs degree-2 arguments");
	FiberElement r(2, u.ghost_degree() + v.ghost_degree());
	for (int a = 1; a <= 4; ++a)
		for (int b = a + 1; b <= 4; ++b)
		{
			GScalar acc;
			for (int c = 1; c <= 4; ++c)
			{
				GScalar t = bicomp(u, a, c) * bicomp(v, c, b) -
				            bicomp(u, c, b) * bicomp(v, a, c);
				if (g.eta(c) < 0)
					t = -t;
				acc += t;
			}
			r.add((FMask(1) << (a - 1)) | (FMask(1) << (b - 1)), acc);
		}
	return r;
}

FiberElement so31_action(FiberElement const &x, FiberElement const &u,
                         Metric const &g)
{
	require(x.fiber_degree() == 2, Err::DegreeMismatch,
	        "action needs a degree-2 first argument");
	FiberElement r(u.fiber_degree(), x.ghost_degree() + u.ghost_degree());
	for (auto &[mu, cu] : u.terms())
	{
		FMask mm = mu;
		while (mm)
		{
			int bit = std::countr_zero(mm);
			mm &= mm - 1;
			int i = bit + 1;
			// x . e_i = sum_a eta_i x^{ai} e_a
			for (int a = 1; a <= 4; ++a)
			{
				GScalar comp = bicomp(x, a, i);
				if (comp.is_zero())
					continue;
				if (g.eta(i) < 0)
					comp = -comp;
				// replace e_i by e_a inside the monomial
				FMask rest = mu & ~(FMask(1) << bit);
				FMask abit = FMask(1) << (a - 1);
				if (rest & abit)
					continue;
				// sign: move e_i out of position, then e_a in.
				int s = split_sign(FMask(1) << bit, mu) *
				        grassmann_sign(abit, rest);
				GScalar c = comp * cu;
				r.add(abit | rest, s < 0 ? -c : c);
			}
		}
	}
	return r;
}

GScalar invariant_pairing(FiberElement const &u, FiberElement const &v)
{
	require(u.fiber_degree() == 2 && v.fiber_degree() == 2,
	        Err::DegreeMismatch, "pairing needs degree-2 arguments");
	return wedge_fiber(u, v).coeff(0b1111);
}

GScalar pfaffian(FiberElement const &E)
{
	require(E.fiber_degree() == 2, Err::DegreeMismatch,
	        "Pfaffian needs a degree-2 argument");
	GScalar p = wedge_fiber(E, E).coeff(0b1111);
	return p / GaussianRational(2);
}

BivectorSplit jm_split(FiberElement const &A)
{
	require(A.fiber_degree() == 2, Err::DegreeMismatch,
	        "jm_split needs a degree-2 argument");
	for (auto &[m, c] : A.terms())
		require(!c.depends_on(~Mask(0)), Err::OddCoefficients,
		        "jm_split needs theta-free input");
	BivectorSplit s;
	s.J[0] = bicomp(A, 2, 3);
	s.J[1] = -bicomp(A, 1, 3);
	s.J[2] = bicomp(A, 1, 2);
	for (int i = 1; i <= 3; ++i)
		s.M[i - 1] = bicomp(A, i, 4);
	return s;
}

FiberElement jm_reassemble(BivectorSplit const &s)
{
	FiberElement r(2, 0);
	r.add(0b0110, s.J[0]);         // e23
	r.add(0b0101, -s.J[1]);        // e13
	r.add(0b0011, s.J[2]);         // e12
	r.add(0b1001, s.M[0]);         // e14
	r.add(0b1010, s.M[1]);         // e24
	r.add(0b1100, s.M[2]);         // e34
	return r;
}

std::string FiberElement::str() const
{
	if (terms_.empty())
		return "0";
	std::ostringstream os;
	bool first = true;
	for (auto &[m, c] : terms_)
	{
		if (!first)
			os << " + ";
		first = false;
		os << "(" << c.str() << ") e[";
		FMask mm = m;
		while (mm)
		{
			int bit = std::countr_zero(mm);
			mm &= mm - 1;
			os << (bit + 1);
		}
		os << "]";
	}
	return os.str();
}

} // namespace corner
