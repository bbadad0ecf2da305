#include "corner/fiber.hpp"
#include "corner/linalg.hpp"
#include "corner/rng.hpp"
#include "doctest.h"

using namespace corner;

namespace {

FiberElement e(std::initializer_list<int> idx) { return FiberElement::basis(idx); }

// Independent oracle: map a theta-free bivector to the 4x4 matrix
// u^a_b = u^{ac} eta_{cb}, take the matrix commutator, map back.
QMatrix to_matrix(FiberElement const &u, Metric const &g)
{
	QMatrix m(4, 4);
	for (int a = 1; a <= 4; ++a)
		for (int b = 1; b <= 4; ++b)
		{
			GaussianRational comp;
			if (a != b)
			{
				FMask mask = (FMask(1) << (a - 1)) | (FMask(1) << (b - 1));
				comp = u.coeff(mask).body();
				if (a > b)
					comp = -comp;
			}
			if (g.eta(b) < 0)
				comp = -comp;
			m.at(a - 1, b - 1) = comp;
		}
	return m;
}

FiberElement from_matrix(QMatrix const &m, Metric const &g)
{
	FiberElement u(2, 0);
	for (int a = 1; a <= 4; ++a)
		for (int b = a + 1; b <= 4; ++b)
		{
			GaussianRational comp = m.at(a - 1, b - 1);
			if (g.eta(b) < 0)
				comp = -comp;
			FMask mask = (FMask(1) << (a - 1)) | (FMask(1) << (b - 1));
			u.add(mask, GScalar(comp));
		}
	return u;
}

} // namespace

TEST_CASE("wedge basics")
{
	CHECK(wedge_fiber(e({1}), e({2})) == e({1, 2}));
	CHECK(wedge_fiber(e({1}), e({1})).is_zero());
	CHECK(wedge_fiber(e({1, 2}), e({3, 4})) == e({1, 2, 3, 4}));
	CHECK(wedge_fiber(e({2}), e({1})) == FiberElement::basis({1, 2}, GaussianRational(-1)));
	CHECK_THROWS_AS(wedge_fiber(e({1, 2, 3}), e({2, 4})), Error);
}

TEST_CASE("bracket matches matrix commutator oracle")
{
	Metric g = Metric::lorentzian();
	CHECK(so31_bracket(e({1, 2}), e({1, 2})).is_zero());

	Rng rng(99);
	for (int trial = 0; trial < 200; ++trial)
	{
		FiberElement u = draw_fiber(rng, 2), v = draw_fiber(rng, 2);
		QMatrix mu = to_matrix(u, g), mv = to_matrix(v, g);
		QMatrix comm(4, 4);
		QMatrix ab = mu * mv, ba = mv * mu;
		for (int i = 0; i < 4; ++i)
			for (int j = 0; j < 4; ++j)
				comm.at(i, j) = ab.at(i, j) - ba.at(i, j);
		CHECK(so31_bracket(u, v, g) == from_matrix(comm, g));
	}

	// frozen instance from the oracle: [e12, e23] = +e13 (spacelike block)
	CHECK(so31_bracket(e({1, 2}), e({2, 3}), g) ==
	      FiberElement::basis({1, 3}, GaussianRational(1)));
	// and one touching the timelike index: [e14, e24] = +e12 with eta_44=-1
	CHECK(so31_bracket(e({1, 4}), e({2, 4}), g) ==
	      FiberElement::basis({1, 2}, GaussianRational(1)));
}

TEST_CASE("bracket axioms exact on random triples")
{
	Metric g = Metric::lorentzian();
	Rng rng(1234);
	for (int trial = 0; trial < 1000; ++trial)
	{
		FiberElement u = draw_fiber(rng, 2), v = draw_fiber(rng, 2),
		             w = draw_fiber(rng, 2);
		CHECK(so31_bracket(u, v, g) == -so31_bracket(v, u, g));
		FiberElement jac = so31_bracket(u, so31_bracket(v, w, g), g) +
		                   so31_bracket(w, so31_bracket(u, v, g), g) +
		                   so31_bracket(v, so31_bracket(w, u, g), g);
		CHECK(jac.is_zero());
	}
	// Jacobi over (e12, e23, e13)
	FiberElement a = e({1, 2}), b = e({2, 3}), c = e({1, 3});
	FiberElement jac = so31_bracket(a, so31_bracket(b, c, g), g) +
	                   so31_bracket(c, so31_bracket(a, b, g), g) +
	                   so31_bracket(b, so31_bracket(c, a, g), g);
	CHECK(jac.is_zero());
}

TEST_CASE("graded bracket on odd arguments")
{
	Metric g = Metric::lorentzian();
	Rng rng(555);
	for (int trial = 0; trial < 100; ++trial)
	{
		// odd bivectors c = th0 X + th1 Y
		FiberElement c(2, 1);
		FiberElement X = draw_fiber(rng, 2), Y = draw_fiber(rng, 2);
		c += GScalar::theta(0) * X;
		c += GScalar::theta(1) * Y;
		// [c,c] = 2 th0 th1 [X,Y]
		FiberElement lhs = so31_bracket(c, c, g);
		FiberElement rhs = (GScalar::theta(0) * GScalar::theta(1)) *
		                   so31_bracket(X, Y, g);
		rhs += rhs;
		CHECK(lhs == rhs);
		// graded antisymmetry against an even element
		FiberElement u = draw_fiber(rng, 2);
		CHECK(so31_bracket(c, u, g) == -so31_bracket(u, c, g));
	}
}

TEST_CASE("derivation action agrees with bracket on degree 2")
{
	Metric g = Metric::lorentzian();
	Rng rng(77);
	for (int trial = 0; trial < 200; ++trial)
	{
		FiberElement x = draw_fiber(rng, 2), u = draw_fiber(rng, 2);
		CHECK(so31_action(x, u, g) == so31_bracket(x, u, g));
		// Leibniz over the fiber wedge: x.(v w) = (x.v) w + v (x.w)
		FiberElement v = draw_fiber(rng, 1), w = draw_fiber(rng, 1);
		FiberElement lhs = so31_action(x, wedge_fiber(v, w), g);
		FiberElement rhs = wedge_fiber(so31_action(x, v, g), w) +
		                   wedge_fiber(v, so31_action(x, w, g));
		CHECK(lhs == rhs);
		// invariance of the pairing: <[x,u],v> + <u,[x,v]> = 0
		FiberElement u2 = draw_fiber(rng, 2), v2 = draw_fiber(rng, 2);
		GScalar inv = invariant_pairing(so31_bracket(x, u2, g), v2) +
		              invariant_pairing(u2, so31_bracket(x, v2, g));
		CHECK(inv.is_zero());
	}
}

TEST_CASE("pairing values and nondegeneracy")
{
	CHECK(invariant_pairing(e({1, 2}), e({3, 4})) == GScalar(1));
	CHECK(invariant_pairing(e({1, 2}), e({1, 2})).is_zero());
	CHECK(invariant_pairing(e({1, 3}), e({2, 4})) == GScalar(-1));

	// Gram matrix on the 6-element basis has rank 6
	std::vector<FMask> basis;
	for (FMask m = 0; m < 16; ++m)
		if (std::popcount(m) == 2)
			basis.push_back(m);
	QMatrix gram(6, 6);
	for (size_t i = 0; i < 6; ++i)
		for (size_t j = 0; j < 6; ++j)
		{
			FiberElement a(2, 0), b(2, 0);
			a.add(basis[i], GScalar(1));
			b.add(basis[j], GScalar(1));
			gram.at(i, j) = invariant_pairing(a, b).body();
		}
	CHECK(rank(gram) == 6);
}

TEST_CASE("pfaffian")
{
	CHECK(pfaffian(wedge_fiber(e({1}), e({2}))).is_zero());
	CHECK(pfaffian(FiberElement(2, 0)).is_zero());
	CHECK(pfaffian(e({1, 2}) + e({3, 4})) == GScalar(1));

	Rng rng(2024);
	for (int trial = 0; trial < 1000; ++trial)
	{
		FiberElement u = draw_vector(rng), v = draw_vector(rng);
		CHECK(pfaffian(wedge_fiber(u, v)).is_zero());
	}
}

TEST_CASE("jm split")
{
	auto A = e({1, 2});
	auto s = jm_split(A);
	CHECK(s.J[2] == GScalar(1));
	CHECK(s.J[0].is_zero());
	CHECK(s.J[1].is_zero());
	CHECK(s.M[0].is_zero());
	CHECK(s.M[1].is_zero());
	CHECK(s.M[2].is_zero());

	auto z = jm_split(FiberElement(2, 0));
	for (int i = 0; i < 3; ++i)
	{
		CHECK(z.J[i].is_zero());
		CHECK(z.M[i].is_zero());
	}

	Rng rng(31415);
	for (int trial = 0; trial < 1000; ++trial)
	{
		FiberElement A2 = draw_fiber(rng, 2);
		auto sp = jm_split(A2);
		CHECK(jm_reassemble(sp) == A2);
		// Pf(A) = M.J and Pf(A) = (J+^2 - J-^2)/4, both exact
		GScalar mj;
		for (int i = 0; i < 3; ++i)
			mj += sp.M[i] * sp.J[i];
		CHECK(pfaffian(A2) == mj);
		GScalar jp2, jm2;
		for (int i = 0; i < 3; ++i)
		{
			GScalar p = sp.J[i] + sp.M[i], m = sp.J[i] - sp.M[i];
			jp2 += p * p;
			jm2 += m * m;
		}
		CHECK(pfaffian(A2) == (jp2 - jm2) / GaussianRational(4));
	}

	FiberElement odd(2, 1);
	odd += GScalar::theta(0) * e({1, 2});
	CHECK_THROWS_AS(jm_split(odd), Error);
}
