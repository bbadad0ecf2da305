#include "corner/theory.hpp"

namespace corner {

GScalar Theory::action(Config const &cfg) const
{
	SpectralForm d = action_density(cfg);
	return d.is_zero() ? GScalar() : integrate(d);
}

SpectralForm Theory::action_density(Config const &cfg) const
{
	SpectralForm acc(2, 4, 2);
	for (size_t t = 0; t < terms.size(); ++t)
	{
		SpectralForm d = terms[t].density(*this, cfg);
		if (term_signs[t] < 0)
			d = -d;
		acc += d;
	}
	return acc;
}

Config Theory::project(std::string const &pol, Config cfg) const
{
	auto it = polarizations.find(pol);
	require(it != polarizations.end(), Err::UnknownPolarization,
	        "unknown polarization " + pol + " for theory " + name);
	for (auto &f : it->second)
	{
		auto &spec0 = spec(f);
		FieldValue v;
		for (size_t c = 0; c < spec0.components(); ++c)
			v.emplace_back(spec0.comp_i(), spec0.comp_j(), spec0.g);
		cfg.set(f, std::move(v));
	}
	return cfg;
}

Connection Theory::conn(Config const &cfg, std::string const &field) const
{
	return Connection(ref.base + cfg.form(field));
}

FieldSpec const &Theory::spec(std::string const &name) const
{
	for (auto &f : roster)
		if (f.name == name)
			return f;
	fail(Err::Internal, "unknown field " + name);
}

Config Theory::draw(Rng &rng, FieldGens &gens, int nmodes, int kmax) const
{
	Config cfg;
	for (auto &f : roster)
	{
		FieldValue v;
		if (f.kind == FieldKind::Vector)
		{
			VectorField vf = draw_vector_field(rng, gens, f.g, nmodes, kmax);
			v.push_back(vf.c1);
			v.push_back(vf.c2);
		}
		else if (f.kind == FieldKind::CoVector)
		{
			for (int c = 0; c < 2; ++c)
				v.push_back(draw_field(rng, gens, 2, 4, f.g, nmodes, kmax));
		}
		else
			v.push_back(draw_field(rng, gens, f.i, f.j, f.g, nmodes, kmax));
		cfg.set(f.name, std::move(v));
	}
	return cfg;
}

Theory Theory::with_mutated_sign(size_t term_index) const
{
	require(term_index < terms.size(), Err::ConfigError, "no such action term");
	Theory t = *this;
	t.term_signs[term_index] = -t.term_signs[term_index];
	return t;
}

SpectralForm constant_section(int fiber_index)
{
	SpectralForm s(0, 1, 0);
	FiberElement f(1, 0);
	f.add(FMask(1) << (fiber_index - 1), GScalar(1));
	s.add(FKey{0, 0, 0}, f);
	return s;
}

Connection draw_reference(Rng &rng, int nmodes, int kmax)
{
	return Connection(draw_real_form(rng, 1, 2, nmodes, kmax));
}

Connection flat_reference()
{
	return Connection(SpectralForm(1, 2, 0));
}

// ---------------------------------------------------------------------------
// electromagnetism: trivial corner structure, real-valued fields (j = 0)

Theory make_em()
{
	Theory t;
	t.name = "em";
	t.roster = {
	    {"c", FieldKind::Form, 0, 0, 1},
	    {"B", FieldKind::Form, 2, 0, 0},
	};
	t.omega = [](VarCtx const &ctx) {
		return integrate(wedge(ctx.delta.form("c"), ctx.delta.form("B")));
	};
	t.coh_field = [](Theory const &th, Config const &) {
		Tangent q = zero_config(th.roster);
		return q;
	};
	t.has_coh_field = true;
	t.polarizations["B"] = {"c"};
	t.polarizations["ghost"] = {"B"};
	return t;
}

// ---------------------------------------------------------------------------
// Yang-Mills corner: fields c (0,2,1) and B (2,2,0), S = 1/2 B[c,c]

Theory make_ym(Connection A0)
{
	Theory t;
	t.name = "ym";
	t.ref = std::move(A0);
	t.roster = {
	    {"c", FieldKind::Form, 0, 2, 1},
	    {"B", FieldKind::Form, 2, 2, 0},
	};
	t.omega = [](VarCtx const &ctx) {
		return integrate(wedge(ctx.delta.form("c"), ctx.delta.form("B")));
	};
	t.terms = {{"B[c,c]/2", [](Theory const &th, Config const &cfg) {
		            SpectralForm cc = bracket_form(cfg.form("c"), cfg.form("c"),
		                                           th.metric);
		            return wedge(cfg.form("B"), cc) / GaussianRational(2);
	            }}};
	t.term_signs = {1};
	t.coh_field = [](Theory const &th, Config const &cfg) {
		Tangent q = zero_config(th.roster);
		SpectralForm c = cfg.form("c");
		q.set("c", {bracket_form(c, c, th.metric) / GaussianRational(2)});
		q.set("B", {bracket_form(c, cfg.form("B"), th.metric)});
		return q;
	};
	t.has_coh_field = true;
	t.polarizations["B"] = {"c"};
	t.polarizations["ghost"] = {"B"};
	return t;
}

// ---------------------------------------------------------------------------
// Chern-Simons corner: c (0,2,1), a = A - A0 (1,2,0)

Theory make_cs(Connection A0)
{
	Theory t;
	t.name = "cs";
	t.ref = std::move(A0);
	t.roster = {
	    {"c", FieldKind::Form, 0, 2, 1},
	    {"a", FieldKind::Form, 1, 2, 0},
	};
	t.omega = [](VarCtx const &ctx) {
		return integrate(wedge(ctx.delta.form("c"), ctx.delta.form("a")));
	};
	t.terms = {
	    {"c dA0 c/2",
	     [](Theory const &th, Config const &cfg) {
		     return wedge(cfg.form("c"), cov_d(th.ref, cfg.form("c"), th.metric)) /
		            GaussianRational(2);
	     }},
	    {"c[a,c]/2",
	     [](Theory const &th, Config const &cfg) {
		     SpectralForm ac = bracket_form(cfg.form("a"), cfg.form("c"), th.metric);
		     return wedge(cfg.form("c"), ac) / GaussianRational(2);
	     }},
	};
	t.term_signs = {1, 1};
	t.coh_field = [](Theory const &th, Config const &cfg) {
		Tangent q = zero_config(th.roster);
		Connection A = th.conn(cfg, "a");
		SpectralForm c = cfg.form("c");
		q.set("c", {bracket_form(c, c, th.metric) / GaussianRational(2)});
		q.set("a", {cov_d(A, c, th.metric)});
		return q;
	};
	t.has_coh_field = true;
	t.polarizations["a"] = {"c"};
	t.polarizations["ghost"] = {"a"};
	return t;
}

// ---------------------------------------------------------------------------
// BF corner theory in superfield variables

Theory make_bf(Connection A0, GaussianRational lambda)
{
	Theory t;
	t.name = "bf";
	t.ref = std::move(A0);
	t.lambda = std::move(lambda);
	t.roster = {
	    {"c", FieldKind::Form, 0, 2, 1},
	    {"a", FieldKind::Form, 1, 2, 0},
	    {"Bp", FieldKind::Form, 2, 2, -1},
	    {"phi", FieldKind::Form, 0, 2, 2},
	    {"tau", FieldKind::Form, 1, 2, 1},
	    {"B", FieldKind::Form, 2, 2, 0},
	};
	t.omega = [](VarCtx const &ctx) {
		GScalar v = integrate(wedge(ctx.delta.form("B"), ctx.delta.form("c")));
		v += integrate(wedge(ctx.delta.form("tau"), ctx.delta.form("a")));
		v += integrate(wedge(ctx.delta.form("phi"), ctx.delta.form("Bp")));
		return v;
	};
	t.terms = {
	    {"B[c,c]/2",
	     [](Theory const &th, Config const &cfg) {
		     SpectralForm cc = bracket_form(cfg.form("c"), cfg.form("c"), th.metric);
		     return wedge(cfg.form("B"), cc) / GaussianRational(2);
	     }},
	    {"tau dA c",
	     [](Theory const &th, Config const &cfg) {
		     Connection A = th.conn(cfg, "a");
		     return wedge(cfg.form("tau"), cov_d(A, cfg.form("c"), th.metric));
	     }},
	    {"phi FA",
	     [](Theory const &th, Config const &cfg) {
		     Connection A = th.conn(cfg, "a");
		     return wedge(cfg.form("phi"), curvature(A, th.metric));
	     }},
	    {"phi[c,Bp]",
	     [](Theory const &th, Config const &cfg) {
		     SpectralForm cb = bracket_form(cfg.form("c"), cfg.form("Bp"), th.metric);
		     return wedge(cfg.form("phi"), cb);
	     }},
	    {"lam tau tau/2",
	     [](Theory const &th, Config const &cfg) {
		     return th.lambda *
		            (wedge(cfg.form("tau"), cfg.form("tau")) / GaussianRational(2));
	     }},
	    {"lam B phi",
	     [](Theory const &th, Config const &cfg) {
		     return th.lambda * wedge(cfg.form("B"), cfg.form("phi"));
	     }},
	};
	t.term_signs.assign(t.terms.size(), 1);
	t.coh_field = [](Theory const &th, Config const &cfg) {
		Metric const &g = th.metric;
		Connection A = th.conn(cfg, "a");
		SpectralForm c = cfg.form("c"), phi = cfg.form("phi"),
		             tau = cfg.form("tau"), B = cfg.form("B"),
		             Bp = cfg.form("Bp");
		SpectralForm FA = curvature(A, g);
		Tangent q = zero_config(th.roster);
		q.set("c", {bracket_form(c, c, g) / GaussianRational(2) +
		            th.lambda * phi});
		q.set("a", {cov_d(A, c, g) + th.lambda * tau});
		q.set("Bp", {FA + th.lambda * B + bracket_form(c, Bp, g)});
		q.set("phi", {bracket_form(c, phi, g)});
		q.set("tau", {cov_d(A, phi, g) + bracket_form(c, tau, g)});
		q.set("B", {cov_d(A, tau, g) + bracket_form(c, B, g) +
		            bracket_form(phi, Bp, g)});
		return q;
	};
	t.has_coh_field = true;
	t.polarizations["B"] = {"c", "a", "Bp"};       // h = functionals of (phi, tau, B)
	t.polarizations["ghost"] = {"phi", "tau", "B"}; // h = functionals of (c, a, Bp)
	t.polarizations["AB"] = {"c", "phi", "tau"};   // h = functionals of (a, B, Bp)
	return t;
}

// ---------------------------------------------------------------------------
// tangent corner theory (BF-like): fields E, P, c, xi

Theory make_tangent(Connection omega0)
{
	Theory t;
	t.name = "tangent";
	t.ref = std::move(omega0);
	t.eps_m = constant_section(3);
	t.eps_n = constant_section(4);
	t.roster = {
	    {"c", FieldKind::Form, 0, 2, 1},
	    {"E", FieldKind::Form, 2, 2, 0},
	    {"xi", FieldKind::Vector, 0, 0, 1},
	    {"P", FieldKind::CoVector, 2, 4, 0},
	};
	t.omega = [](VarCtx const &ctx) {
		GScalar v = integrate(wedge(ctx.delta.form("c"), ctx.delta.form("E")));
		for (size_t mu = 0; mu < 2; ++mu)
			v -= integrate(wedge(ctx.delta.form("xi", mu),
			                     ctx.delta.form("P", mu)));
		return v;
	};
	t.terms = {
	    {"[c,c]E/2",
	     [](Theory const &th, Config const &cfg) {
		     SpectralForm cc = bracket_form(cfg.form("c"), cfg.form("c"), th.metric);
		     return wedge(cc, cfg.form("E")) / GaussianRational(2);
	     }},
	    {"i_xi E d0 c",
	     [](Theory const &th, Config const &cfg) {
		     VectorField xi = cfg.vector("xi");
		     return wedge(contract(xi, cfg.form("E")),
		                  cov_d(th.ref, cfg.form("c"), th.metric));
	     }},
	    {"-i_[xi,xi] P/2",
	     [](Theory const &th, Config const &cfg) {
		     VectorField br = vf_bracket(cfg.vector("xi"), cfg.vector("xi"));
		     SpectralForm acc(2, 4, 2);
		     for (size_t mu = 0; mu < 2; ++mu)
			     acc += wedge(br.comp(int(mu) + 1), cfg.form("P", mu));
		     return -(acc / GaussianRational(2));
	     }},
	    {"E i_xi i_xi F0/2",
	     [](Theory const &th, Config const &cfg) {
		     VectorField xi = cfg.vector("xi");
		     SpectralForm F0 = curvature(th.ref, th.metric);
		     return wedge(cfg.form("E"), contract(xi, contract(xi, F0))) /
		            GaussianRational(2);
	     }},
	};
	t.term_signs.assign(t.terms.size(), 1);
	t.polarizations["Exi"] = {"c", "P"}; // h = functionals of (E, xi)
	t.polarizations["EP"] = {"c", "xi"}; // h = functionals of (E, P)
	return t;
}

} // namespace corner
