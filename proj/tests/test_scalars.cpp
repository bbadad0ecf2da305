#include "corner/gscalar.hpp"
#include "corner/rng.hpp"
#include "doctest.h"

using namespace corner;

TEST_CASE("gaussian rational basics")
{
	GaussianRational a(rat(1, 2), rat(3, 4));
	GaussianRational b(rat(-2), rat(1, 3));
	CHECK((a * b) * a.inverse() == b);
	CHECK(a * a.conj() == GaussianRational(a.norm2()));
	CHECK((a / b) * b == a);
	CHECK(GaussianRational::i() * GaussianRational::i() == GaussianRational(-1));
	CHECK(parse_gaussian("1/2 + 3/4 i") == a);
	CHECK(parse_gaussian(a.str()) == a);
	CHECK(parse_gaussian("-5") == GaussianRational(-5));
	CHECK(parse_gaussian("7/3 i") == GaussianRational(Rational(0), rat(7, 3)));
}

TEST_CASE("rational and gaussian square roots")
{
	CHECK(*rational_sqrt(rat(9, 4)) == rat(3, 2));
	CHECK(!rational_sqrt(rat(2)).has_value());
	auto s = gaussian_sqrt(GaussianRational(Rational(0), Rational(2)));
	REQUIRE(s.has_value());
	CHECK(*s * *s == GaussianRational(Rational(0), Rational(2)));
	CHECK(!gaussian_sqrt(GaussianRational(2)).has_value());
	auto z = GaussianRational(rat(3), rat(4));
	auto w = gaussian_sqrt(z * z);
	REQUIRE(w.has_value());
	CHECK(*w * *w == z * z);
}

TEST_CASE("anticommutation and nilpotence")
{
	GScalar t1 = GScalar::theta(0);
	GScalar t2 = GScalar::theta(1);
	CHECK(t1 * t2 == GScalar::monomial(0b11, GaussianRational(1), 2));
	CHECK(t2 * t1 == GScalar::monomial(0b11, GaussianRational(-1), 2));
	CHECK((t1 * t1).is_zero());

	// (1 + t1 t2)^2 = 1 + 2 t1 t2, with t1 t2 taken at declared degree 0
	GScalar expect = GScalar(1) + GScalar::monomial(0b11, GaussianRational(2), 0);
	GScalar tt = GScalar::monomial(0b11, GaussianRational(1), 0);
	GScalar y = GScalar(1) + tt;
	CHECK(y * y == expect);
}

TEST_CASE("body projection")
{
	// 3 + 5 th0 -> 3 (odd part invisible to the body)
	GScalar b = GScalar::monomial(0b1, GaussianRational(5), 1);
	CHECK(GScalar(3).body() == GaussianRational(3));
	CHECK(b.body().is_zero());
	// th0 th1 -> 0
	GScalar c = GScalar::monomial(0b11, GaussianRational(1), 0);
	CHECK(c.body().is_zero());
	// (2+i) + (1-i) th2 -> 2+i
	GScalar d = GScalar(GaussianRational(Rational(2), Rational(1)));
	GScalar odd = GScalar::monomial(0b100, GaussianRational(Rational(1), Rational(-1)), 1);
	CHECK(d.body() == GaussianRational(Rational(2), Rational(1)));
	CHECK(odd.body().is_zero());
}

TEST_CASE("graded ring properties on random triples")
{
	Rng rng(12345);
	std::vector<int> gens = {0, 1, 2, 3, 4, 5};
	for (int trial = 0; trial < 1000; ++trial)
	{
		int da = draw_int(rng, 0, 3), db = draw_int(rng, 0, 3),
		    dc = draw_int(rng, 0, 3);
		GScalar a = draw_gscalar(rng, da, gens);
		GScalar b = draw_gscalar(rng, db, gens);
		GScalar c = draw_gscalar(rng, dc, gens);

		// associativity
		CHECK((a * b) * c == a * (b * c));
		// graded commutativity ab = (-1)^{|a||b|} ba
		GScalar ba = b * a;
		if ((da & 1) && (db & 1))
			ba = -ba;
		CHECK(a * b == ba);
		// degree additivity
		if (!(a * b).is_zero())
			CHECK((a * b).degree() == da + db);
		// body is a ring homomorphism
		CHECK((a * b).body() == a.body() * b.body());
		CHECK((a + a).body() == a.body() + a.body());
	}
}

TEST_CASE("extraction signs")
{
	// th0 th1 th2: coefficient of th1 is +th0 th2 reordered: th1 th0 th2 sign
	GScalar m = GScalar::monomial(0b111, GaussianRational(1), 3);
	GScalar e = m.extract(0b010, 1);
	// th_{012} = s th1 th_{02}, s = sign(th1 th0 th2 -> th0 th1 th2) = -1
	CHECK(e == GScalar::monomial(0b101, GaussianRational(-1), 2));

	// even nilpotent parameter behaves like a central dual number
	ParamScope ps;
	GScalar t = ps.even_nilpotent();
	CHECK((t * t).is_zero());
	Rng rng(7);
	GScalar a = draw_gscalar(rng, 1, {0, 1, 2});
	CHECK(t * a == a * t);
}

TEST_CASE("param scope allocation is scoped")
{
	int before, inside;
	{
		ParamScope ps;
		before = ps.fresh();
	}
	{
		ParamScope ps;
		inside = ps.fresh();
	}
	CHECK(before == inside);
}
