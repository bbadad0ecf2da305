#include "corner/wmaps.hpp"
#include "doctest.h"

using namespace corner;

namespace {

struct Arrow
{
	int i, j;
	bool inj, surj;
};

// boundary table: hooked (injective) and two-headed (surjective) cells
std::vector<Arrow> const boundary_arrows = {
    {0, 0, true, false}, {0, 1, true, false}, {0, 2, true, false},
    {0, 3, false, true}, {1, 0, true, false}, {1, 1, true, false},
    {1, 2, false, true}, {1, 3, false, true}, {2, 0, true, false},
    {2, 1, false, true}, {2, 2, false, true}, {2, 3, false, true},
};

// corner table: (0,2) and (1,1) carry a plain arrow (neither)
std::vector<Arrow> const corner_arrows = {
    {0, 0, true, false}, {0, 1, true, false}, {0, 2, false, false},
    {0, 3, false, true}, {1, 0, true, false}, {1, 1, false, false},
    {1, 2, false, true}, {1, 3, false, true},
};

PointForm draw_pointform(Rng &rng, int d, int i, int j)
{
	PointForm r(d, i, j);
	for (auto &[cm, fm] : point_basis(d, i, j))
		r.add(cm, fm, draw_gaussian_rational(rng));
	return r;
}

} // namespace

TEST_CASE("dimensions and standard-frame entries")
{
	auto frame = FiberFrame::standard_corner();
	QMatrix w = assemble_w(frame, 1, 2);
	CHECK(w.cols() == 12);
	CHECK(w.rows() == 4);
	// standard frame: all entries in {0, +-1}
	for (size_t r = 0; r < w.rows(); ++r)
		for (size_t c = 0; c < w.cols(); ++c)
		{
			GaussianRational v = w.at(r, c);
			CHECK(v.im == 0);
			CHECK((v.re == 0 || v.re == 1 || v.re == -1));
		}
	auto rep = classify(frame, 0, 0);
	CHECK(rep.domain_dim == 1);
	CHECK(rep.codomain_dim == 8);
	CHECK(rep.injective);
}

TEST_CASE("arrow tables over random nondegenerate frames")
{
	Rng rng(808);
	for (int trial = 0; trial < 25; ++trial)
	{
		FiberFrame fb = draw_frame(rng, 3);
		for (auto &a : boundary_arrows)
		{
			auto rep = classify(fb, a.i, a.j);
			CHECK(rep.injective == a.inj);
			CHECK(rep.surjective == a.surj);
		}
		FiberFrame fc = draw_frame(rng, 2);
		for (auto &a : corner_arrows)
		{
			auto rep = classify(fc, a.i, a.j);
			CHECK(rep.injective == a.inj);
			CHECK(rep.surjective == a.surj);
		}
	}
}

TEST_CASE("frozen corner ranks")
{
	Rng rng(11);
	for (int trial = 0; trial < 10; ++trial)
	{
		FiberFrame f = draw_frame(rng, 2);
		auto r12 = classify(f, 1, 2);
		CHECK(r12.rank == 4);
		CHECK(r12.kernel_dim == 8);
		auto r11 = classify(f, 1, 1);
		CHECK(r11.rank == 5);
		CHECK(r11.codomain_dim == 6);
		auto r02 = classify(f, 0, 2);
		CHECK(r02.rank == 5);
		CHECK(r02.codomain_dim == 8);
	}
}

TEST_CASE("pseudo-inverse")
{
	Rng rng(42);
	for (int trial = 0; trial < 20; ++trial)
	{
		FiberFrame f = draw_frame(rng, 2);
		QMatrix w = assemble_w(f, 1, 2);

		// round trip: target in the image
		PointForm x = draw_pointform(rng, 2, 1, 2);
		auto wx = w.apply(pointform_vectorize(x));
		PointForm target = pointform_from_vector(2, 2, 3, wx);
		auto sol = w_pseudo_inverse(f, 1, 2, target);
		CHECK(sol.in_image);
		CHECK(w.apply(pointform_vectorize(sol.preimage)) == wx);

		// preimage of zero is zero
		auto z = w_pseudo_inverse(f, 1, 2, PointForm(2, 2, 3));
		CHECK(z.preimage.is_zero());
		CHECK(z.in_image);

		// any true preimage differs from the canonical one by a kernel member
		std::vector<GaussianRational> diff = pointform_vectorize(x);
		auto canon = pointform_vectorize(sol.preimage);
		for (size_t n = 0; n < diff.size(); ++n)
			diff[n] -= canon[n];
		std::vector<std::vector<GaussianRational>> kernel;
		for (auto &k : sol.kernel)
			kernel.push_back(pointform_vectorize(k));
		CHECK(in_span(kernel, diff));

		// corner (1,1): generic targets fall outside the image
		PointForm t2 = draw_pointform(rng, 2, 2, 2);
		auto s2 = w_pseudo_inverse(f, 1, 1, t2);
		CHECK(!s2.in_image);
		// W(preimage) equals the projection of the target
		QMatrix w11 = assemble_w(f, 1, 1);
		auto proj = image_projection(w11, pointform_vectorize(t2));
		CHECK(w11.apply(pointform_vectorize(s2.preimage)) == proj);
	}
}

TEST_CASE("rank is frame independent")
{
	Rng rng(314);
	for (int i = 0; i <= 1; ++i)
		for (int j = 0; j <= 3; ++j)
		{
			size_t r0 = classify(draw_frame(rng, 2), i, j).rank;
			for (int t = 0; t < 5; ++t)
				CHECK(classify(draw_frame(rng, 2), i, j).rank == r0);
		}
}

TEST_CASE("splitting of the boundary inverse")
{
	Rng rng(2718);
	for (int trial = 0; trial < 20; ++trial)
	{
		FiberFrame f = draw_frame(rng, 2);
		int i = 1, j = 2;
		PointForm e = f.coframe();
		PointForm em(2, 0, 1);
		for (auto &[m, c] : f.e_m->terms())
			em.add(0, m, c.body());

		// consistent data: X = e gamma, X_m = e gamma_m + e_m gamma
		PointForm gamma = draw_pointform(rng, 2, i, j);
		PointForm gamma_m = draw_pointform(rng, 2, i - 1, j);
		PointForm X = pointform_wedge(e, gamma);
		PointForm X_m = pointform_add(pointform_wedge(e, gamma_m),
		                              pointform_wedge(em, gamma));
		auto sol = split_w_inverse(f, i, j, X, X_m);
		CHECK(sol.exact);
		// reconstruction: e gamma' = X and e gamma_m' + e_m gamma' = X_m
		CHECK(pointform_wedge(e, sol.gamma).c == X.c);
		CHECK(pointform_add(pointform_wedge(e, sol.gamma_m),
		                    pointform_wedge(em, sol.gamma)).c == X_m.c);

		// zero input
		auto z = split_w_inverse(f, i, j, PointForm(2, i + 1, j + 1),
		                         PointForm(2, i, j + 1));
		CHECK(z.gamma.is_zero());
		CHECK(z.gamma_m.is_zero());

		// generic target: residual equals (1 - pi_I) X
		PointForm Xg = draw_pointform(rng, 2, i + 1, j + 1);
		PointForm Xmg = draw_pointform(rng, 2, i, j + 1);
		auto sg = split_w_inverse(f, i, j, Xg, Xmg);
		QMatrix w1 = assemble_left_w(f, i, j);
		auto proj = image_projection(w1, pointform_vectorize(Xg));
		CHECK(w1.apply(pointform_vectorize(sg.gamma)) == proj);
	}
}

TEST_CASE("constraint component analysis")
{
	Rng rng(4242);
	for (int trial = 0; trial < 10; ++trial)
	{
		FiberFrame f = trial == 0 ? FiberFrame::standard_corner()
		                          : draw_orthonormal_corner_frame(rng);
		PointForm de = draw_pointform(rng, 2, 2, 1);
		PointForm dem = draw_pointform(rng, 2, 1, 1);
		auto rep = constraint_component_analysis(f, de, dem);
		CHECK(rep.omega_fixed_count == 4);
		CHECK(rep.omega_matches_listed);
		CHECK(rep.omega_values_match);
		CHECK(rep.gamma_fixed_count == 4);
		CHECK(rep.gamma_matches_listed);
	}
}

TEST_CASE("pre-corner singularity report")
{
	Rng rng(99);
	size_t dim0 = 0;
	for (int trial = 0; trial < 10; ++trial)
	{
		FiberFrame f = draw_frame(rng, 2);
		auto rep = precorner_kernel_report(f);
		CHECK(rep.deficiency_11 == 1);
		CHECK(rep.deficiency_02 == 3);
		CHECK(rep.singular);
		if (trial == 0)
			dim0 = rep.tangent_kernel_dim;
		CHECK(rep.tangent_kernel_dim == dim0);
	}
	// brute-force frozen value of the regular tangent kernel
	CHECK(dim0 == 14);
}

TEST_CASE("degenerate frames are rejected")
{
	FiberFrame f = FiberFrame::standard_corner();
	f.e[1] = f.e[0]; // e1 = e2
	CHECK(!f.nondegenerate());
	CHECK_THROWS_AS(assemble_w(f, 1, 1), Error);
	CHECK_THROWS_AS(precorner_kernel_report(f), Error);
}
