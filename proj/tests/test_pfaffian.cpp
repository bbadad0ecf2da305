#include "corner/pfaffian.hpp"
#include "doctest.h"

using namespace corner;

namespace {

FiberElement e(std::initializer_list<int> idx) { return FiberElement::basis(idx); }

} // namespace

TEST_CASE("cyclo8 field")
{
	Rng rng(5);
	for (int t = 0; t < 200; ++t)
	{
		Cyclo8 a, b;
		for (int i = 0; i < 4; ++i)
		{
			a.c[i] = draw_int(rng, -5, 5);
			b.c[i] = draw_int(rng, -5, 5);
		}
		// ring sanity against the complex embedding
		Cyclo8 ab = a * b;
		double re = a.to_double_re() * b.to_double_re() -
		            a.to_double_im() * b.to_double_im();
		CHECK(std::abs(ab.to_double_re() - re) < 1e-9);
		if (!a.is_zero())
		{
			CHECK(a * a.inverse() == Cyclo8(1));
			CHECK((b / a) * a == b);
		}
		CHECK((a.conj() * a).conj() == a.conj() * a);
		// sqrt of a square always exists and squares back
		auto r = cyclo_sqrt(a * a);
		REQUIRE(r.has_value());
		CHECK(*r * *r == a * a);
		// real sign agrees with the embedding
		int s = a.real_sign();
		double d = a.to_double_re();
		if (std::abs(d) > 1e-9)
			CHECK(s == (d > 0 ? 1 : -1));
	}
	CHECK(Cyclo8::zeta_pow(8) == Cyclo8(1));
	CHECK(Cyclo8::zeta_pow(4) == Cyclo8(-1));
	CHECK(Cyclo8::zeta_pow(2) == Cyclo8(GaussianRational::i()));
}

TEST_CASE("sqrt of nonsquares is rejected")
{
	CHECK(!cyclo_sqrt(Cyclo8(3)).has_value());
	CHECK(!cyclo_sqrt(Cyclo8(5)).has_value());
	// but 2 is a square in Q(zeta8): (z - z^3)^2 = 2
	auto r = cyclo_sqrt(Cyclo8(2));
	REQUIRE(r.has_value());
	CHECK(*r * *r == Cyclo8(2));
}

TEST_CASE("psi map")
{
	auto E = wedge_fiber(e({1}), e({2}));
	QMatrix m = psi_map(E);
	// annihilates e1 and e2
	std::vector<GaussianRational> v1 = {GaussianRational(1), GaussianRational(0),
	                                    GaussianRational(0), GaussianRational(0)};
	std::vector<GaussianRational> v2 = {GaussianRational(0), GaussianRational(1),
	                                    GaussianRational(0), GaussianRational(0)};
	for (auto &c : m.apply(v1))
		CHECK(c.is_zero());
	for (auto &c : m.apply(v2))
		CHECK(c.is_zero());
	// antisymmetric
	for (int i = 0; i < 4; ++i)
		for (int j = 0; j < 4; ++j)
			CHECK(m.at(size_t(i), size_t(j)) == -m.at(size_t(j), size_t(i)));
	// zero input
	QMatrix z = psi_map(FiberElement(2, 0));
	for (int i = 0; i < 4; ++i)
		for (int j = 0; j < 4; ++j)
			CHECK(z.at(size_t(i), size_t(j)).is_zero());
	// full rank when Pf != 0
	CHECK(rank(psi_map(e({1, 2}) + e({3, 4}))) == 4);
}

TEST_CASE("kernel of psi")
{
	auto basis = kernel_of_psi(wedge_fiber(e({1}), e({2})));
	CHECK(basis.size() == 2);
	// span contains e1 and e2
	std::vector<GaussianRational> v1 = {GaussianRational(1), GaussianRational(0),
	                                    GaussianRational(0), GaussianRational(0)};
	CHECK(in_span(basis, v1));

	auto E2 = wedge_fiber(e({1}) + e({3}), e({2}));
	auto b2 = kernel_of_psi(E2);
	std::vector<GaussianRational> v13 = {GaussianRational(1), GaussianRational(0),
	                                     GaussianRational(1), GaussianRational(0)};
	CHECK(in_span(b2, v13));

	CHECK_THROWS_AS(kernel_of_psi(e({1, 2}) + e({3, 4})), Error);
	CHECK_THROWS_AS(kernel_of_psi(FiberElement(2, 0)), Error);
}

TEST_CASE("factorization")
{
	auto E = GaussianRational(3) * wedge_fiber(e({1}), e({2}));
	auto f = factor(E);
	CHECK(GaussianRational(f.lambda) * wedge_fiber(f.e1, f.e2) == E);
	CHECK(f.lambda == GaussianRational(3));

	Rng rng(777);
	int successes = 0;
	for (int t = 0; t < 1000; ++t)
	{
		FiberElement u = draw_vector(rng), v = draw_vector(rng);
		FiberElement E2 = wedge_fiber(u, v);
		if (E2.is_zero())
			continue;
		auto f2 = factor(E2);
		CHECK(GaussianRational(f2.lambda) * wedge_fiber(f2.e1, f2.e2) == E2);
		++successes;
	}
	CHECK(successes > 900);

	// the converse: Pf != 0 always rejects
	for (int t = 0; t < 200; ++t)
	{
		Rng rng3{uint64_t(t)};
		FiberElement E3 = draw_fiber(rng3, 2);
		if (pfaffian(E3).is_zero())
			continue;
		CHECK_THROWS_AS(factor(E3), Error);
	}
}

TEST_CASE("gauge distribution")
{
	CHECK(k_distribution_dim(e({1}), e({2})) == 3);
	Rng rng(123);
	for (int t = 0; t < 100; ++t)
	{
		FiberElement u = draw_vector(rng), v = draw_vector(rng);
		if (wedge_fiber(u, v).is_zero())
			continue;
		CHECK(k_distribution_dim(u, v) == 3);

		// rotation (e2, -e1) and scaling (e1, -e2) solve the equation
		auto check_member = [&](FiberElement const &x1, FiberElement const &x2) {
			FiberElement r = wedge_fiber(u, x2) + wedge_fiber(x1, v);
			CHECK(r.is_zero());
		};
		check_member(v, -u);
		check_member(u, -v);

		// generic traceless motion preserves the wedge to first order
		long a = draw_int(rng), b = draw_int(rng), c = draw_int(rng);
		FiberElement x1 = GaussianRational(a) * u + GaussianRational(b) * v;
		FiberElement x2 = GaussianRational(c) * u + GaussianRational(-a) * v;
		check_member(x1, x2);
	}
	CHECK_THROWS_AS(k_distribution_dim(e({1}), e({1})), Error);
}

namespace {

// build the spectral coframe e_mu = f e0_mu + alpha_mu eps_m + beta_mu eps_n
SpectralForm assemble_leg(SpectralForm const &f, SpectralForm const &alpha,
                          SpectralForm const &beta, FiberElement const &e0,
                          FiberElement const &em, FiberElement const &en,
                          int mu)
{
	SpectralForm leg(1, 1, 0);
	auto lift = [&](SpectralForm const &s, FiberElement const &dir) {
		for (auto &[k, c] : s.terms())
		{
			FiberElement val(1, 0);
			for (auto &[m, cc] : dir.terms())
				val.add(m, c.coeff(0) * cc);
			if (!val.is_zero())
				leg.add(FKey{k.k1, k.k2, uint8_t(1) << (mu - 1)}, val);
		}
	};
	lift(f, e0);
	lift(alpha, em);
	lift(beta, en);
	return leg;
}

} // namespace

TEST_CASE("bundle factorization round trip")
{
	Rng rng(31337);
	FiberElement em = e({3}), en = e({4});
	std::array<FiberElement, 2> e0 = {e({1}), e({2})};

	for (int t = 0; t < 5; ++t)
	{
		// nowhere-zero f: large constant plus a small oscillation
		SpectralForm f(0, 0, 0);
		{
			FiberElement c0(0, 0);
			c0.add(0, GScalar(GaussianRational(10 + draw_int(rng, 0, 5))));
			f.add(FKey{0, 0, 0}, c0);
			FiberElement osc(0, 0);
			osc.add(0, GScalar(GaussianRational(1)));
			f.add(FKey{1, 0, 0}, osc);
			f.add(FKey{-1, 0, 0}, osc);
		}
		SpectralForm alpha1 = draw_real_form(rng, 0, 0, 2, 1);
		SpectralForm alpha2 = draw_real_form(rng, 0, 0, 2, 1);
		SpectralForm beta1 = draw_real_form(rng, 0, 0, 2, 1);
		SpectralForm beta2 = draw_real_form(rng, 0, 0, 2, 1);

		SpectralForm leg1 = assemble_leg(f, alpha1, beta1, e0[0], em, en, 1);
		SpectralForm leg2 = assemble_leg(f, alpha2, beta2, e0[1], em, en, 2);
		SpectralForm coframe = leg1 + leg2;
		SpectralForm E = wedge(coframe, coframe) / GaussianRational(2);

		auto bf = bundle_factor(E, em, en, e0, 8);
		CHECK(bf.all_exact);
		CHECK(bf.samples.size() == 64);
	}

	// constant admissible E = e12: f = 1, alpha = beta = 0 at every sample
	SpectralForm Ec(2, 2, 0);
	Ec.add(FKey{0, 0, 0b11}, e({1, 2}));
	auto bc = bundle_factor(Ec, em, en, e0, 8);
	CHECK(bc.all_exact);
	for (auto &s : bc.samples)
	{
		CHECK(s.f == Cyclo8(1));
		CHECK(s.alpha[0].is_zero());
		CHECK(s.alpha[1].is_zero());
		CHECK(s.beta[0].is_zero());
		CHECK(s.beta[1].is_zero());
	}

	// transversality failure: f vanishing at a sample
	SpectralForm fz(0, 0, 0);
	{
		FiberElement two(0, 0);
		two.add(0, GScalar(GaussianRational(2)));
		fz.add(FKey{0, 0, 0}, two);
		FiberElement mone(0, 0);
		mone.add(0, GScalar(GaussianRational(-1)));
		fz.add(FKey{1, 0, 0}, mone);
		fz.add(FKey{-1, 0, 0}, mone);
	}
	SpectralForm z(0, 0, 0);
	SpectralForm l1 = assemble_leg(fz, z, z, e0[0], em, en, 1);
	SpectralForm l2 = assemble_leg(fz, z, z, e0[1], em, en, 2);
	SpectralForm Ez = wedge(l1 + l2, l1 + l2) / GaussianRational(2);
	CHECK_THROWS_AS(bundle_factor(Ez, em, en, e0, 8), Error);
}

TEST_CASE("kernel plane transversality at samples")
{
	// With E = 1/2 e e admissible, the plane spanned by the legs is
	// transversal to span{eps_m, eps_n}: check rank 4 over the sample
	// field for one draw.
	Rng rng(5050);
	FiberElement em = e({3}), en = e({4});
	std::array<FiberElement, 2> e0 = {e({1}), e({2})};
	SpectralForm f(0, 0, 0);
	FiberElement c0(0, 0);
	c0.add(0, GScalar(GaussianRational(7)));
	f.add(FKey{0, 0, 0}, c0);
	SpectralForm a1 = draw_real_form(rng, 0, 0, 2, 1);
	SpectralForm b1 = draw_real_form(rng, 0, 0, 2, 1);
	SpectralForm leg1 = assemble_leg(f, a1, b1, e0[0], em, en, 1);
	SpectralForm leg2 = assemble_leg(f, b1, a1, e0[1], em, en, 2);
	SpectralForm E = wedge(leg1 + leg2, leg1 + leg2) / GaussianRational(2);
	auto bf = bundle_factor(E, em, en, e0, 4);
	for (auto &s : bf.samples)
	{
		Matrix<Cyclo8> m(4, 4);
		// legs e1, e2 from the factorization plus eps_m, eps_n
		for (int row = 0; row < 4; ++row)
		{
			Cyclo8 l1v = row == 0 ? s.f : Cyclo8(0);
			l1v += row == 2 ? s.alpha[0] : Cyclo8(0);
			l1v += row == 3 ? s.beta[0] : Cyclo8(0);
			Cyclo8 l2v = row == 1 ? s.f : Cyclo8(0);
			l2v += row == 2 ? s.alpha[1] : Cyclo8(0);
			l2v += row == 3 ? s.beta[1] : Cyclo8(0);
			m.at(size_t(row), 0) = l1v;
			m.at(size_t(row), 1) = l2v;
			m.at(size_t(row), 2) = Cyclo8(row == 2 ? 1 : 0);
			m.at(size_t(row), 3) = Cyclo8(row == 3 ? 1 : 0);
		}
		CHECK(rank(m) == 4);
	}
}
