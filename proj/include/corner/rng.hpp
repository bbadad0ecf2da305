#pragma once

/**
 * Seeded random draws for verification campaigns.
 *
 * All draws are exact: integer coefficients in [-9,9], at most a handful
 * of Fourier modes with |k| <= 2, reality enforced by mirroring. Odd
 * fields are seeded through anticommuting generators so that multilinear
 * identities are probed with honestly noncommuting inputs.
 */

#include "corner/fiber.hpp"
#include "corner/gscalar.hpp"
#include <random>

namespace corner {

using Rng = std::mt19937_64;

inline long draw_int(Rng &rng, long lo = -9, long hi = 9)
{
	return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline long draw_nonzero_int(Rng &rng, long lo = -9, long hi = 9)
{
	long v = 0;
	while (v == 0)
		v = draw_int(rng, lo, hi);
	return v;
}

inline GaussianRational draw_gaussian_rational(Rng &rng, bool complex_part = false)
{
	GaussianRational g(draw_int(rng));
	if (complex_part)
		g.im = draw_int(rng);
	return g;
}

/// Random GScalar of the given degree: a sum of up to `nterms` monomials
/// in the generators listed in `gens`, each with the right parity.
inline GScalar draw_gscalar(Rng &rng, int degree, std::vector<int> const &gens,
                            int nterms = 3)
{
	GScalar acc;
	int want_parity = ((degree % 2) + 2) % 2;
	for (int t = 0; t < nterms; ++t)
	{
		Mask m = 0;
		int size = 0;
		for (int g : gens)
			if (draw_int(rng, 0, 1))
			{
				m |= Mask(1) << g;
				++size;
			}
		if ((size & 1) != want_parity)
		{
			if (!gens.empty())
			{
				Mask flip = Mask(1) << gens[size_t(draw_int(rng, 0, long(gens.size()) - 1))];
				m ^= flip;
				size += (m & flip) ? 1 : -1;
			}
			if ((size & 1) != want_parity)
				continue;
		}
		acc += GScalar::monomial(m, draw_gaussian_rational(rng), degree);
	}
	if (acc.is_zero() && want_parity == 0)
		acc += GScalar(GaussianRational(draw_nonzero_int(rng)), degree);
	return acc;
}

/// Random fiber element of the given degree with theta-free integer
/// coefficients.
inline FiberElement draw_fiber(Rng &rng, int fiber_degree, int ghost = 0)
{
	FiberElement r(fiber_degree, ghost);
	for (FMask m = 0; m < 16; ++m)
	{
		if (std::popcount(m) != fiber_degree)
			continue;
		GaussianRational c = draw_gaussian_rational(rng);
		if (!c.is_zero())
			r.add(m, GScalar(c, ghost));
	}
	return r;
}

/// Random degree-1 fiber element, nonzero.
inline FiberElement draw_vector(Rng &rng)
{
	for (;;)
	{
		FiberElement v = draw_fiber(rng, 1, 0);
		if (!v.is_zero())
			return v;
	}
}

} // namespace corner
