#include "corner/engine.hpp"

namespace corner {

bool hamiltonian_check(Theory const &th, NamedFunctional const &f,
                       Config const &cfg, Rng &rng, FieldGens &gens,
                       int trials)
{
	require(f.has_ham, Err::MissingHamiltonianField,
	        f.label + " carries no Hamiltonian vector field");
	Tangent X = f.ham(cfg);
	for (int t = 0; t < trials; ++t)
	{
		Tangent Z;
		for (auto &spec : th.roster)
		{
			FieldValue v;
			for (size_t c = 0; c < spec.components(); ++c)
				v.push_back(draw_field(rng, gens, spec.comp_i(), spec.comp_j(),
				                       spec.g, 2, 1));
			Z.set(spec.name, std::move(v));
		}
		GScalar lhs = eval_two_form(th.omega, cfg, X, Z);
		GScalar rhs = dir_deriv(f.eval, cfg, Z);
		if (!(lhs == rhs))
			return false;
	}
	return true;
}

Tangent q_field(Theory const &th, Config const &cfg)
{
	require(th.has_coh_field, Err::MissingHamiltonianField,
	        "theory " + th.name + " has no registered cohomological field");
	return th.coh_field(th, cfg);
}

Functional bracket_with_action(Theory const &th, NamedFunctional const &f)
{
	auto eval = f.eval;
	Theory const *tp = &th;
	return [tp, eval](Config const &cfg) {
		Tangent Q = q_field(*tp, cfg);
		return dir_deriv(eval, cfg, Q);
	};
}

Functional d_nullary(Theory const &th, std::string pol)
{
	Theory const *tp = &th;
	return [tp, pol](Config const &cfg) {
		return tp->action(tp->project(pol, cfg));
	};
}

Functional d_unary(Theory const &th, std::string pol, NamedFunctional f)
{
	Functional h = bracket_with_action(th, f);
	Theory const *tp = &th;
	return [tp, pol, h](Config const &cfg) {
		return h(tp->project(pol, cfg));
	};
}

Functional d_binary(Theory const &th, std::string pol, NamedFunctional f,
                    NamedFunctional g)
{
	require(g.has_ham, Err::MissingHamiltonianField,
	        "second bracket argument needs a Hamiltonian field: " + g.label);
	Functional h = bracket_with_action(th, f); // {S,f}, degree |f|+1
	Theory const *tp = &th;
	// {h,g} = -(-1)^{(|h|+1)(|g|+1)} X_g(h) with |h| = |f|+1
	bool flip = (((f.ghost) * (g.ghost + 1)) % 2 + 2) % 2 == 1;
	auto gh = g.ham;
	return [tp, pol, h, gh, flip](Config const &cfg) {
		Config pc = tp->project(pol, cfg);
		Tangent Xg = gh(pc);
		GScalar v = dir_deriv(h, pc, Xg);
		return flip ? v : -v;
	};
}

SpectralForm contract_basis(int mu, SpectralForm const &a)
{
	require(a.form_degree() >= 1, Err::DegreeUnderflow, "scalar contraction");
	SpectralForm r(a.form_degree() - 1, a.fiber_degree(), a.ghost_degree());
	uint8_t mbit = uint8_t(1) << (mu - 1);
	for (auto &[k, c] : a.terms())
	{
		if (!(k.cmask & mbit))
			continue;
		int s = split_sign(mbit, k.cmask);
		r.add(FKey{k.k1, k.k2, uint8_t(k.cmask & ~mbit)}, s < 0 ? -c : c);
	}
	return r;
}

// --- BF families -----------------------------------------------------------

namespace {

// sign conventions of the explicit Hamiltonian fields; calibrated against
// iota_X omega = dF for the two-form conventions of this library
constexpr int SGN_BF_J = 1;
constexpr int SGN_BF_M = 1;
constexpr int SGN_BF_K = 1;

SpectralForm maybe_neg(SpectralForm f, int s)
{
	return s < 0 ? -f : f;
}

} // namespace

NamedFunctional bf_J(Theory const &th, SpectralForm alpha)
{
	NamedFunctional f;
	f.label = "J";
	f.family = "J";
	f.ghost = 0;
	Metric g = th.metric;
	f.eval = [alpha](Config const &cfg) {
		return integrate(wedge(alpha, cfg.form("B")));
	};
	Theory const *tp = &th;
	f.ham = [tp, alpha](Config const &) {
		Tangent X = zero_config(tp->roster);
		X.set("c", {maybe_neg(alpha, SGN_BF_J)});
		return X;
	};
	f.has_ham = true;
	(void)g;
	return f;
}

NamedFunctional bf_M(Theory const &th, SpectralForm beta)
{
	NamedFunctional f;
	f.label = "M";
	f.family = "M";
	f.ghost = 1;
	f.eval = [beta](Config const &cfg) {
		return integrate(wedge(beta, cfg.form("tau")));
	};
	Theory const *tp = &th;
	f.ham = [tp, beta](Config const &) {
		Tangent X = zero_config(tp->roster);
		X.set("a", {maybe_neg(beta, SGN_BF_M)});
		return X;
	};
	f.has_ham = true;
	return f;
}

NamedFunctional bf_K(Theory const &th, SpectralForm gamma)
{
	NamedFunctional f;
	f.label = "K";
	f.family = "K";
	f.ghost = 2;
	f.eval = [gamma](Config const &cfg) {
		return integrate(wedge(gamma, cfg.form("phi")));
	};
	Theory const *tp = &th;
	f.ham = [tp, gamma](Config const &) {
		Tangent X = zero_config(tp->roster);
		X.set("Bp", {maybe_neg(gamma, SGN_BF_K)});
		return X;
	};
	f.has_ham = true;
	return f;
}

NamedFunctional bf_C(Theory const &th, SpectralForm mu)
{
	NamedFunctional f;
	f.label = "C";
	f.family = "C";
	f.ghost = 2;
	f.eval = [mu](Config const &cfg) {
		SpectralForm dens =
		    wedge(cfg.form("tau"), cfg.form("tau")) / GaussianRational(2) +
		    wedge(cfg.form("B"), cfg.form("phi"));
		return integrate(wedge(mu, dens));
	};
	Theory const *tp = &th;
	f.ham = [tp, mu](Config const &cfg) {
		Tangent X = zero_config(tp->roster);
		X.set("a", {maybe_neg(wedge(mu, cfg.form("tau")), SGN_BF_M)});
		X.set("c", {maybe_neg(wedge(mu, cfg.form("phi")), SGN_BF_J)});
		X.set("Bp", {maybe_neg(wedge(mu, cfg.form("B")), SGN_BF_K)});
		return X;
	};
	f.has_ham = true;
	return f;
}

NamedFunctional bf_D(Theory const &th, SpectralForm nu)
{
	NamedFunctional f;
	f.label = "D";
	f.family = "D";
	f.ghost = 3;
	f.eval = [nu](Config const &cfg) {
		return integrate(wedge(nu, wedge(cfg.form("tau"), cfg.form("phi"))));
	};
	Theory const *tp = &th;
	f.ham = [tp, nu](Config const &cfg) {
		Tangent X = zero_config(tp->roster);
		X.set("a", {maybe_neg(wedge(nu, cfg.form("phi")), SGN_BF_M)});
		X.set("Bp", {maybe_neg(wedge(nu, cfg.form("tau")), SGN_BF_K)});
		return X;
	};
	f.has_ham = true;
	return f;
}

NamedFunctional bf_E(Theory const &th, SpectralForm rho)
{
	NamedFunctional f;
	f.label = "E";
	f.family = "E";
	f.ghost = 4;
	f.eval = [rho](Config const &cfg) {
		return integrate(wedge(rho, wedge(cfg.form("phi"), cfg.form("phi")))) /
		       GaussianRational(2);
	};
	Theory const *tp = &th;
	f.ham = [tp, rho](Config const &cfg) {
		Tangent X = zero_config(tp->roster);
		X.set("Bp", {maybe_neg(wedge(rho, cfg.form("phi")), SGN_BF_K)});
		return X;
	};
	f.has_ham = true;
	return f;
}

// --- tangent families -------------------------------------------------------

NamedFunctional tg_J(Theory const &th, SpectralForm phi)
{
	NamedFunctional f;
	f.label = "J";
	f.family = "J";
	f.ghost = 0;
	f.eval = [phi](Config const &cfg) {
		return integrate(wedge(phi, cfg.form("E")));
	};
	Theory const *tp = &th;
	f.ham = [tp, phi](Config const &) {
		Tangent X = zero_config(tp->roster);
		X.set("c", {phi});
		return X;
	};
	f.has_ham = true;
	return f;
}

NamedFunctional tg_M(Theory const &th, SpectralForm Y)
{
	NamedFunctional f;
	f.label = "M";
	f.family = "M";
	f.ghost = 1;
	f.eval = [Y](Config const &cfg) {
		return integrate(wedge(Y, contract(cfg.vector("xi"), cfg.form("E"))));
	};
	Theory const *tp = &th;
	f.ham = [tp, Y](Config const &cfg) {
		Tangent X = zero_config(tp->roster);
		X.set("c", {contract(cfg.vector("xi"), Y)});
		FieldValue P;
		for (int mu = 1; mu <= 2; ++mu)
			P.push_back(wedge(Y, contract_basis(mu, cfg.form("E"))));
		X.set("P", std::move(P));
		return X;
	};
	f.has_ham = true;
	return f;
}

NamedFunctional tg_K(Theory const &th, SpectralForm Z)
{
	NamedFunctional f;
	f.label = "K";
	f.family = "K";
	f.ghost = 2;
	f.eval = [Z](Config const &cfg) {
		VectorField xi = cfg.vector("xi");
		return integrate(wedge(Z, contract(xi, contract(xi, cfg.form("E"))))) /
		       GaussianRational(2);
	};
	Theory const *tp = &th;
	f.ham = [tp, Z](Config const &cfg) {
		VectorField xi = cfg.vector("xi");
		Tangent X = zero_config(tp->roster);
		X.set("c", {contract(xi, contract(xi, Z)) / GaussianRational(2)});
		FieldValue P;
		for (int mu = 1; mu <= 2; ++mu)
			P.push_back(wedge(Z, contract(xi, contract_basis(mu, cfg.form("E")))));
		X.set("P", std::move(P));
		return X;
	};
	f.has_ham = true;
	return f;
}

NamedFunctional tg_F(Theory const &th, VectorField X0)
{
	NamedFunctional f;
	f.label = "F";
	f.family = "F";
	f.ghost = 0;
	f.eval = [X0](Config const &cfg) {
		GScalar v;
		for (int mu = 1; mu <= 2; ++mu)
			v += integrate(wedge(X0.comp(mu), cfg.form("P", size_t(mu - 1))));
		return v;
	};
	Theory const *tp = &th;
	f.ham = [tp, X0](Config const &) {
		Tangent X = zero_config(tp->roster);
		X.set("xi", {X0.c1, X0.c2});
		return X;
	};
	f.has_ham = true;
	return f;
}

NamedFunctional ym_B(Theory const &th, SpectralForm param)
{
	NamedFunctional f;
	f.label = "intB";
	f.family = "B";
	f.ghost = 0;
	f.eval = [param](Config const &cfg) {
		return integrate(wedge(param, cfg.form("B")));
	};
	Theory const *tp = &th;
	f.ham = [tp, param](Config const &) {
		Tangent X = zero_config(tp->roster);
		X.set("c", {param});
		return X;
	};
	f.has_ham = true;
	return f;
}

NamedFunctional cs_a(Theory const &th, SpectralForm param)
{
	NamedFunctional f;
	f.label = "inta";
	f.family = "a";
	f.ghost = 0;
	f.eval = [param](Config const &cfg) {
		return integrate(wedge(param, cfg.form("a")));
	};
	Theory const *tp = &th;
	f.ham = [tp, param](Config const &) {
		Tangent X = zero_config(tp->roster);
		X.set("c", {param});
		return X;
	};
	f.has_ham = true;
	return f;
}

} // namespace corner
