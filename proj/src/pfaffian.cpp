#include "corner/pfaffian.hpp"

namespace corner {

namespace {

int eps_sign(int a, int b, int c, int d)
{
	int perm[4] = {a, b, c, d};
	int sign = 1;
	for (int i = 0; i < 4; ++i)
		for (int j = i + 1; j < 4; ++j)
		{
			if (perm[i] == perm[j])
				return 0;
			if (perm[i] > perm[j])
			{
				std::swap(perm[i], perm[j]);
				sign = -sign;
			}
		}
	return sign;
}

GaussianRational bicomp_body(FiberElement const &u, int a, int b)
{
	if (a == b)
		return GaussianRational();
	FMask m = (FMask(1) << (a - 1)) | (FMask(1) << (b - 1));
	GaussianRational c = u.coeff(m).body();
	if (a > b)
		c = -c;
	return c;
}

void require_theta_free(FiberElement const &E)
{
	for (auto &[m, c] : E.terms())
		require(!c.depends_on(~Mask(0)), Err::OddCoefficients,
		        "theta-free input required");
}

} // namespace

QMatrix psi_map(FiberElement const &E)
{
	require(E.fiber_degree() == 2, Err::DegreeMismatch,
	        "psi needs a degree-2 argument");
	require_theta_free(E);
	QMatrix m(4, 4);
	for (int a = 1; a <= 4; ++a)
		for (int b = 1; b <= 4; ++b)
		{
			GaussianRational v;
			for (int c = 1; c <= 4; ++c)
				for (int d = c + 1; d <= 4; ++d)
				{
					int s = eps_sign(a, b, c, d);
					if (s == 0)
						continue;
					GaussianRational t = bicomp_body(E, c, d);
					v += s < 0 ? -t : t;
				}
			m.at(size_t(a - 1), size_t(b - 1)) = v;
		}
	return m;
}

std::vector<std::vector<GaussianRational>> kernel_of_psi(FiberElement const &E)
{
	require(!E.is_zero(), Err::ZeroInput, "psi kernel of the zero bivector");
	require(pfaffian(E).is_zero(), Err::NonzeroPfaffian,
	        "psi kernel is trivial when Pf(E) != 0");
	auto basis = nullspace(psi_map(E));
	require(basis.size() == 2, Err::Internal,
	        "kernel of psi_E must be two-dimensional");
	return basis;
}

namespace {

FiberElement vector_from(std::vector<GaussianRational> const &v)
{
	FiberElement r(1, 0);
	for (int a = 0; a < 4; ++a)
		r.add(FMask(1) << a, GScalar(v[size_t(a)]));
	return r;
}

} // namespace

Factorization factor(FiberElement const &E)
{
	auto basis = kernel_of_psi(E);
	Factorization f;
	f.e1 = vector_from(basis[0]);
	f.e2 = vector_from(basis[1]);
	FiberElement w = wedge_fiber(f.e1, f.e2);
	// lambda from the first nonzero component; exactness checked across all
	GaussianRational lambda;
	for (auto &[m, c] : w.terms())
	{
		GaussianRational ec = E.coeff(m).body();
		if (!c.body().is_zero())
		{
			lambda = ec / c.body();
			break;
		}
	}
	require(!lambda.is_zero(), Err::Internal, "degenerate kernel wedge");
	FiberElement check = lambda * w;
	require(check == E, Err::Internal, "factorization must reproduce E");
	f.lambda = lambda;
	return f;
}

size_t k_distribution_dim(FiberElement const &e1, FiberElement const &e2)
{
	require(e1.fiber_degree() == 1 && e2.fiber_degree() == 1,
	        Err::DegreeMismatch, "degree-1 arguments expected");
	require(!wedge_fiber(e1, e2).is_zero(), Err::DependentInput,
	        "independent vectors expected");
	// unknowns (X1, X2) in V x V; equations e1 ^ X2 + X1 ^ e2 = 0 in L2V
	QMatrix m(6, 8);
	std::vector<FMask> rows;
	for (FMask mm = 0; mm < 16; ++mm)
		if (std::popcount(mm) == 2)
			rows.push_back(mm);
	for (int a = 0; a < 4; ++a)
	{
		FiberElement basis_vec(1, 0);
		basis_vec.add(FMask(1) << a, GScalar(1));
		FiberElement c1 = wedge_fiber(basis_vec, e2); // X1 slot
		FiberElement c2 = wedge_fiber(e1, basis_vec); // X2 slot
		for (size_t r = 0; r < rows.size(); ++r)
		{
			m.at(r, size_t(a)) = c1.coeff(rows[r]).body();
			m.at(r, size_t(4 + a)) = c2.coeff(rows[r]).body();
		}
	}
	return nullspace(m).size();
}

std::array<Cyclo8, 6> sample_bivector(SpectralForm const &E, int grid, int p,
                                      int q)
{
	require(E.form_degree() == 2 && E.fiber_degree() == 2, Err::DegreeMismatch,
	        "(2,2) form expected");
	require(grid > 0 && 8 % grid == 0, Err::ConfigError,
	        "grid must divide 8 for exact sampling");
	int step = 8 / grid;
	std::array<Cyclo8, 6> out{};
	std::vector<FMask> rows;
	for (FMask mm = 0; mm < 16; ++mm)
		if (std::popcount(mm) == 2)
			rows.push_back(mm);
	for (auto &[k, c] : E.terms())
	{
		long expo = (long(k.k1) * p + long(k.k2) * q) * step;
		Cyclo8 phase = Cyclo8::zeta_pow(expo);
		for (size_t r = 0; r < rows.size(); ++r)
		{
			GaussianRational v = c.coeff(rows[r]).body();
			if (v.is_zero())
				continue;
			out[r] += phase * Cyclo8(v);
		}
	}
	return out;
}

BundleFactorization bundle_factor(SpectralForm const &E,
                                  FiberElement const &eps_m,
                                  FiberElement const &eps_n,
                                  std::array<FiberElement, 2> const &e0,
                                  int grid)
{
	require(E.form_degree() == 2 && E.fiber_degree() == 2 &&
	            E.ghost_degree() == 0,
	        Err::DegreeMismatch, "(2,2,0) field expected");

	// change of basis from the standard fiber basis to (e0_1, e0_2, m, n)
	QMatrix basis(4, 4);
	std::array<FiberElement, 4> legs = {e0[0], e0[1], eps_m, eps_n};
	for (int col = 0; col < 4; ++col)
		for (int row = 0; row < 4; ++row)
			basis.at(size_t(row), size_t(col)) =
			    legs[size_t(col)].coeff(FMask(1) << row).body();
	require(rank(basis) == 4, Err::DegenerateFrame,
	        "reference legs must span the fiber");

	std::vector<FMask> rows;
	for (FMask mm = 0; mm < 16; ++mm)
		if (std::popcount(mm) == 2)
			rows.push_back(mm);

	// index pairs of the adapted-basis bivector components
	auto pair_index = [&](int a, int b) {
		// a < b in 0..3 labeling (e0_1, e0_2, m, n)
		static const std::pair<int, int> pairs[6] = {{0, 1}, {0, 2}, {0, 3},
		                                             {1, 2}, {1, 3}, {2, 3}};
		for (int n2 = 0; n2 < 6; ++n2)
			if (pairs[n2].first == a && pairs[n2].second == b)
				return n2;
		fail(Err::Internal, "bad pair");
	};

	// transition for bivector components: adapted^{AB} from standard.
	// Solve basis * x = standard vector for each sampled value instead of
	// forming the inverse explicitly.
	BundleFactorization out;
	out.grid = grid;
	out.all_exact = true;

	for (int p = 0; p < grid; ++p)
		for (int q = 0; q < grid; ++q)
		{
			auto comp = sample_bivector(E, grid, p, q);
			// assemble the sampled bivector in the adapted basis: solve
			// Lambda^2(basis) * adapted = comp
			QMatrix big(6, 6);
			for (int col = 0; col < 6; ++col)
			{
				static const std::pair<int, int> pairs[6] = {
				    {0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
				FiberElement w =
				    wedge_fiber(legs[size_t(pairs[col].first)],
				                legs[size_t(pairs[col].second)]);
				for (size_t r = 0; r < rows.size(); ++r)
					big.at(r, size_t(col)) = w.coeff(rows[r]).body();
			}
			// solve over Q(zeta8): lift rational matrix, cyclo rhs
			Matrix<Cyclo8> bigc(6, 6);
			for (size_t r = 0; r < 6; ++r)
				for (size_t c2 = 0; c2 < 6; ++c2)
					bigc.at(r, c2) = Cyclo8(big.at(r, c2));
			std::vector<Cyclo8> rhs(comp.begin(), comp.end());
			auto sol = solve_canonical(bigc, rhs);
			require(sol.in_image, Err::Internal, "basis change failed");
			auto const &A = sol.x; // adapted components, indexed by pairs

			// Pfaffian and transversality at the sample
			Cyclo8 pf = A[size_t(pair_index(0, 1))] * A[size_t(pair_index(2, 3))] -
			            A[size_t(pair_index(0, 2))] * A[size_t(pair_index(1, 3))] +
			            A[size_t(pair_index(0, 3))] * A[size_t(pair_index(1, 2))];
			require(pf.is_zero(), Err::PfaffianNonzeroAtPoint,
			        "Pf(E) != 0 at a sample point");
			Cyclo8 e12 = A[size_t(pair_index(0, 1))];
			require(!e12.is_zero(), Err::TransversalityFailureAtPoint,
			        "E eps_m eps_n = 0 at a sample point");
			require(e12.real_sign() > 0, Err::OrientationMismatch,
			        "orientation of the reference legs disagrees with E");

			// f^2 = E^{12}; alpha_2 = E^{1m}/f, beta_2 = E^{1n}/f,
			// alpha_1 = -E^{2m}/f, beta_1 = -E^{2n}/f
			auto froot = cyclo_sqrt(e12);
			require(froot.has_value(), Err::Internal,
			        "sample value admits no square root in Q(zeta_8)");
			Cyclo8 f = *froot;
			if (f.real_sign() < 0)
				f = -f;
			BundleSample s;
			s.p = p;
			s.q = q;
			s.f = f;
			s.alpha[1] = A[size_t(pair_index(0, 2))] / f;
			s.beta[1] = A[size_t(pair_index(0, 3))] / f;
			s.alpha[0] = -(A[size_t(pair_index(1, 2))] / f);
			s.beta[0] = -(A[size_t(pair_index(1, 3))] / f);
			// exact reconstruction check of the remaining component
			Cyclo8 mn = s.alpha[0] * s.beta[1] - s.beta[0] * s.alpha[1];
			s.reconstructed = (mn == A[size_t(pair_index(2, 3))]);
			out.all_exact = out.all_exact && s.reconstructed;
			out.samples.push_back(std::move(s));
		}
	return out;
}

} // namespace corner
