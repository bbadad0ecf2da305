#include "corner/linalg.hpp"
#include "corner/rng.hpp"
#include "doctest.h"

using namespace corner;

namespace {

QMatrix random_matrix(Rng &rng, size_t r, size_t c)
{
	QMatrix m(r, c);
	for (size_t i = 0; i < r; ++i)
		for (size_t j = 0; j < c; ++j)
			m.at(i, j) = draw_gaussian_rational(rng, true);
	return m;
}

} // namespace

TEST_CASE("rref rank and nullspace")
{
	QMatrix m(3, 4);
	// rows: (1,2,3,4), (2,4,6,8), (0,1,1,0)
	long rows[3][4] = {{1, 2, 3, 4}, {2, 4, 6, 8}, {0, 1, 1, 0}};
	for (int i = 0; i < 3; ++i)
		for (int j = 0; j < 4; ++j)
			m.at(i, j) = GaussianRational(rows[i][j]);
	CHECK(rank(m) == 2);
	auto ns = nullspace(m);
	CHECK(ns.size() == 2);
	for (auto &v : ns)
	{
		auto y = m.apply(v);
		for (auto &c : y)
			CHECK(c.is_zero());
	}
}

TEST_CASE("rank-nullity on random matrices")
{
	Rng rng(42);
	for (int trial = 0; trial < 100; ++trial)
	{
		size_t r = size_t(draw_int(rng, 1, 7)), c = size_t(draw_int(rng, 1, 7));
		QMatrix m = random_matrix(rng, r, c);
		CHECK(rank(m) + nullspace(m).size() == c);
		// rank(A) == rank(A^H)
		CHECK(rank(m) == rank(m.conj_transpose()));
	}
}

TEST_CASE("canonical solve round trip")
{
	Rng rng(7);
	for (int trial = 0; trial < 100; ++trial)
	{
		size_t r = size_t(draw_int(rng, 1, 6)), c = size_t(draw_int(rng, 1, 6));
		QMatrix m = random_matrix(rng, r, c);
		std::vector<GaussianRational> x(c);
		for (auto &v : x)
			v = draw_gaussian_rational(rng);
		auto b = m.apply(x);
		auto sol = solve_canonical(m, b);
		CHECK(sol.in_image);
		CHECK(m.apply(sol.x) == b);
		// canonical solution is zero on free columns
		QMatrix mc = m;
		auto pivots = rref(mc);
		std::vector<bool> is_pivot(c, false);
		for (size_t p : pivots)
			is_pivot[p] = true;
		for (size_t j = 0; j < c; ++j)
			if (!is_pivot[j])
				CHECK(sol.x[j].is_zero());
	}
}

TEST_CASE("least-residual projection")
{
	// A = [1 0; 0 1; 0 0] column space z=0; b=(1,2,3) projects to (1,2,0)
	QMatrix a(3, 2);
	a.at(0, 0) = GaussianRational(1);
	a.at(1, 1) = GaussianRational(1);
	std::vector<GaussianRational> b = {GaussianRational(1), GaussianRational(2),
	                                   GaussianRational(3)};
	auto sol = solve_projected(a, b);
	CHECK(!sol.in_image);
	auto pb = image_projection(a, b);
	CHECK(pb[0] == GaussianRational(1));
	CHECK(pb[1] == GaussianRational(2));
	CHECK(pb[2].is_zero());
	CHECK(a.apply(sol.x) == pb);

	// residual is Hermitian-orthogonal to the column space
	Rng rng(11);
	for (int trial = 0; trial < 50; ++trial)
	{
		QMatrix m = random_matrix(rng, 5, 3);
		std::vector<GaussianRational> t(5);
		for (auto &v : t)
			v = draw_gaussian_rational(rng, true);
		auto proj = image_projection(m, t);
		std::vector<GaussianRational> res(5);
		for (size_t i = 0; i < 5; ++i)
			res[i] = t[i] - proj[i];
		auto lhs = m.conj_transpose().apply(res);
		for (auto &c : lhs)
			CHECK(c.is_zero());
		// idempotence
		CHECK(image_projection(m, proj) == proj);
	}
}

TEST_CASE("span membership")
{
	std::vector<std::vector<GaussianRational>> span = {
	    {GaussianRational(1), GaussianRational(0), GaussianRational(2)},
	    {GaussianRational(0), GaussianRational(1), GaussianRational(-1)}};
	CHECK(in_span(span, {GaussianRational(2), GaussianRational(3),
	                     GaussianRational(1)}));
	CHECK(!in_span(span, {GaussianRational(0), GaussianRational(0),
	                      GaussianRational(1)}));
}
