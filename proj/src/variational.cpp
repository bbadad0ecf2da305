#include "corner/variational.hpp"
#include "corner/linalg.hpp"
#include <algorithm>
#include <set>

namespace corner {

Config shifted(Config const &cfg, GScalar const &s, Tangent const &Z)
{
	Config out = cfg;
	for (auto &[name, zc] : Z.fields)
	{
		auto it = out.fields.find(name);
		if (it == out.fields.end())
			continue;
		require(it->second.size() == zc.size(), Err::Internal,
		        "tangent component mismatch for " + name);
		for (size_t c = 0; c < zc.size(); ++c)
			it->second[c] += s * zc[c];
	}
	return out;
}

GScalar dir_deriv(Functional const &F, Config const &cfg, Tangent const &Z)
{
	ParamScope ps;
	GScalar t = ps.even_nilpotent();
	Mask bits = t.terms().begin()->first;
	GScalar v = F(shifted(cfg, t, Z));
	return v.extract(bits, 0);
}

namespace {

SpectralForm form_dir_deriv(std::function<SpectralForm(Config const &)> const &X,
                            Config const &cfg, Tangent const &Z)
{
	ParamScope ps;
	GScalar t = ps.even_nilpotent();
	Mask bits = t.terms().begin()->first;
	return X(shifted(cfg, t, Z)).extract(bits, 0);
}

} // namespace

GScalar eval_two_form(TwoFormExpr const &expr, Config const &cfg,
                      Tangent const &Y, Tangent const &Z)
{
	ParamScope ps;
	GScalar s1 = ps.odd_param(1);
	GScalar s2 = ps.odd_param(1);
	Mask b1 = s1.terms().begin()->first;
	Mask b2 = s2.terms().begin()->first;

	Config delta;
	for (auto &[name, val] : cfg.fields)
	{
		FieldValue dv;
		for (size_t c = 0; c < val.size(); ++c)
		{
			SpectralForm d(val[c].form_degree(), val[c].fiber_degree(),
			               val[c].ghost_degree() + 1);
			auto ity = Y.fields.find(name);
			if (ity != Y.fields.end())
				d += s1 * ity->second[c];
			auto itz = Z.fields.find(name);
			if (itz != Z.fields.end())
				d += s2 * itz->second[c];
			dv.push_back(std::move(d));
		}
		delta.set(name, std::move(dv));
	}

	VarCtx ctx{cfg, std::move(delta),
	           [&cfg, &Y, &Z, s1, s2](std::function<SpectralForm(Config const &)> const &X) {
		           SpectralForm dy = form_dir_deriv(X, cfg, Y);
		           SpectralForm dz = form_dir_deriv(X, cfg, Z);
		           return s1 * dy + s2 * dz;
	           }};
	GScalar v = expr(ctx);
	return v.extract(b1 | b2, 2);
}

Config zero_config(std::vector<FieldSpec> const &roster)
{
	Config cfg;
	for (auto &f : roster)
	{
		FieldValue v;
		for (size_t c = 0; c < f.components(); ++c)
			v.emplace_back(f.comp_i(), f.comp_j(), f.g);
		cfg.set(f.name, std::move(v));
	}
	return cfg;
}

Tangent coordinate_tangent(std::vector<FieldSpec> const &roster,
                           Coordinate const &c)
{
	Tangent t = zero_config(roster);
	for (auto &f : roster)
	{
		if (f.name != c.field)
			continue;
		SpectralForm s(f.comp_i(), f.comp_j(), f.g);
		FiberElement fe(f.comp_j(), f.g);
		GaussianRational one =
		    c.imaginary ? GaussianRational::i() : GaussianRational(1);
		fe.add(c.fmask, GScalar(one, f.g));
		s.add(c.key, fe);
		auto v = t.at(f.name);
		v[c.comp] = std::move(s);
		t.set(f.name, std::move(v));
	}
	return t;
}

std::vector<Coordinate> enumerate_coordinates(std::vector<FieldSpec> const &roster,
                                              std::vector<std::pair<int, int>> const &window)
{
	std::vector<Coordinate> out;
	for (auto &f : roster)
	{
		int ci = f.comp_i(), cj = f.comp_j();
		for (size_t comp = 0; comp < f.components(); ++comp)
			for (auto &[k1, k2] : window)
				for (uint8_t cm = 0; cm < 4; ++cm)
				{
					if (std::popcount(cm) != ci)
						continue;
					for (FMask fm = 0; fm < 16; ++fm)
					{
						if (std::popcount(fm) != cj)
							continue;
						for (int im = 0; im < 2; ++im)
							out.push_back(Coordinate{
							    f.name, comp,
							    FKey{k1, k2, cm}, fm, im == 1});
					}
				}
	}
	return out;
}

std::vector<std::pair<int, int>> frequency_window(Config const &cfg, int depth)
{
	std::set<std::pair<int, int>> base = {{0, 0}};
	for (auto &[name, val] : cfg.fields)
		for (auto &comp : val)
			for (auto &[k, c] : comp.terms())
			{
				base.insert({k.k1, k.k2});
				base.insert({-k.k1, -k.k2});
			}
	std::set<std::pair<int, int>> acc = {{0, 0}};
	for (int d = 0; d < depth; ++d)
	{
		std::set<std::pair<int, int>> next = acc;
		for (auto &[a1, a2] : acc)
			for (auto &[b1, b2] : base)
				next.insert({a1 + b1, a2 + b2});
		acc = std::move(next);
	}
	return {acc.begin(), acc.end()};
}

namespace {

// Eliminate A x = b with rational A and GScalar b; returns nullopt when
// inconsistent. Free variables are set to zero.
std::optional<std::vector<GScalar>> solve_gscalar_system(QMatrix a,
                                                         std::vector<GScalar> b)
{
	size_t rows = a.rows(), cols = a.cols();
	size_t row = 0;
	std::vector<size_t> pivots;
	for (size_t col = 0; col < cols && row < rows; ++col)
	{
		size_t p = row;
		while (p < rows && a.at(p, col).is_zero())
			++p;
		if (p == rows)
			continue;
		if (p != row)
		{
			for (size_t j = 0; j < cols; ++j)
				std::swap(a.at(p, j), a.at(row, j));
			std::swap(b[p], b[row]);
		}
		GaussianRational inv = a.at(row, col).inverse();
		for (size_t j = col; j < cols; ++j)
			a.at(row, j) = a.at(row, j) * inv;
		b[row] = b[row].scale(inv);
		for (size_t i = 0; i < rows; ++i)
		{
			if (i == row || a.at(i, col).is_zero())
				continue;
			GaussianRational f = a.at(i, col);
			for (size_t j = col; j < cols; ++j)
				a.at(i, j) = a.at(i, j) - f * a.at(row, j);
			b[i] -= b[row].scale(f);
		}
		pivots.push_back(col);
		++row;
	}
	for (size_t r = row; r < rows; ++r)
		if (!b[r].is_zero())
			return std::nullopt;
	std::vector<GScalar> x(cols);
	for (size_t r = 0; r < pivots.size(); ++r)
		x[pivots[r]] = b[r];
	return x;
}

} // namespace

Tangent solve_hamiltonian(TwoFormExpr const &omega,
                          std::vector<FieldSpec> const &roster,
                          Functional const &F, Config const &cfg,
                          std::vector<std::pair<int, int>> const &window,
                          Rng &verify_rng, FieldGens &verify_gens)
{
	// coordinate labels without the frequency (pairing is translation
	// invariant for the constant two-forms this solver supports)
	struct Slot
	{
		std::string field;
		size_t comp;
		uint8_t cm;
		FMask fm;
		int g;
	};
	std::vector<Slot> slots;
	for (auto &f : roster)
		for (size_t comp = 0; comp < f.components(); ++comp)
			for (uint8_t cm = 0; cm < 4; ++cm)
			{
				if (std::popcount(cm) != f.comp_i())
					continue;
				for (FMask fm = 0; fm < 16; ++fm)
					if (std::popcount(fm) == f.comp_j())
						slots.push_back({f.name, comp, cm, fm, f.g});
			}

	// pairing table at a probe frequency: gram[a][b] = omega(E_a at k0,
	// E_b at -k0); constant two-forms make this k-independent
	size_t n = slots.size();
	FKey probe{1, 2, 0};
	QMatrix gram(n, n);
	bool any = false;
	for (size_t a = 0; a < n; ++a)
	{
		Coordinate ca{slots[a].field, slots[a].comp,
		              FKey{probe.k1, probe.k2, slots[a].cm}, slots[a].fm, false};
		Tangent ta = coordinate_tangent(roster, ca);
		for (size_t b2 = 0; b2 < n; ++b2)
		{
			if (int(std::popcount(slots[a].cm)) +
			        int(std::popcount(slots[b2].cm)) != 2)
				continue;
			Coordinate cb{slots[b2].field, slots[b2].comp,
			              FKey{-probe.k1, -probe.k2, slots[b2].cm},
			              slots[b2].fm, false};
			Tangent tb = coordinate_tangent(roster, cb);
			GScalar v = eval_two_form(omega, cfg, ta, tb);
			gram.at(a, b2) = v.body();
			if (!v.body().is_zero())
				any = true;
		}
	}
	require(any, Err::NotHamiltonian, "two-form pairs no coordinates");

	// right-hand sides: dF along each coordinate at each window frequency
	Tangent X = zero_config(roster);
	for (auto &[k1, k2] : window)
	{
		std::vector<GScalar> rhs(n);
		bool nonzero = false;
		for (size_t b2 = 0; b2 < n; ++b2)
		{
			Coordinate cb{slots[b2].field, slots[b2].comp,
			              FKey{-k1, -k2, slots[b2].cm}, slots[b2].fm, false};
			rhs[b2] = dir_deriv(F, cfg, coordinate_tangent(roster, cb));
			if (!rhs[b2].is_zero())
				nonzero = true;
		}
		if (!nonzero)
			continue;
		// omega(X, E_b) with X at frequency +k pairing E_b at -k:
		// rows indexed by b, columns by the slot of X
		QMatrix m(n, n);
		for (size_t b2 = 0; b2 < n; ++b2)
			for (size_t a = 0; a < n; ++a)
				m.at(b2, a) = gram.at(a, b2);
		auto sol = solve_gscalar_system(m, rhs);
		require(sol.has_value(), Err::NotHamiltonian,
		        "no Hamiltonian vector field at this frequency");
		for (size_t a = 0; a < n; ++a)
		{
			if ((*sol)[a].is_zero())
				continue;
			auto v = X.at(slots[a].field);
			SpectralForm &target = v[slots[a].comp];
			FiberElement fe(std::popcount(slots[a].fm),
			                (*sol)[a].degree());
			fe.add(slots[a].fm, (*sol)[a]);
			SpectralForm add(target.form_degree(), target.fiber_degree(),
			                 (*sol)[a].degree());
			add.add(FKey{k1, k2, slots[a].cm}, fe);
			target += add;
			X.set(slots[a].field, std::move(v));
		}
	}

	// verification against random directions
	for (int t = 0; t < 3; ++t)
	{
		Tangent Z;
		for (auto &f : roster)
		{
			FieldValue v;
			for (size_t c = 0; c < f.components(); ++c)
				v.push_back(draw_field(verify_rng, verify_gens, f.comp_i(),
				                       f.comp_j(), f.g, 2, 1));
			Z.set(f.name, std::move(v));
		}
		GScalar lhs = eval_two_form(omega, cfg, X, Z);
		GScalar rhs = dir_deriv(F, cfg, Z);
		require(lhs == rhs, Err::NotHamiltonian,
		        "solver verification failed");
	}
	return X;
}

} // namespace corner
