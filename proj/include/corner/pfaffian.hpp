#pragma once

/**
 * Pure-tensor analysis of bivectors: the Hodge pairing map psi_E, its
 * kernel, the factorization E = lambda e1^e2 on the Pf(E) = 0 locus, the
 * gauge distribution along which the factorization moves, and the
 * bundle-level factorization of a spectral field at exact sample points.
 */

#include "corner/cyclo8.hpp"
#include "corner/fiber.hpp"
#include "corner/forms.hpp"
#include "corner/linalg.hpp"
#include <array>
#include <vector>

namespace corner {

/// Matrix of v -> (*E) . v on theta-free degree-2 input; antisymmetric.
QMatrix psi_map(FiberElement const &E);

/// Exact kernel basis of psi_E; exactly two vectors when E != 0 and
/// Pf(E) = 0 (errors ZeroInput / NonzeroPfaffian otherwise).
std::vector<std::vector<GaussianRational>> kernel_of_psi(FiberElement const &E);

struct Factorization
{
	FiberElement e1, e2; // degree-1, theta-free
	GaussianRational lambda;
};

/// E = lambda e1^e2 with (e1, e2) the canonical kernel basis of psi_E.
Factorization factor(FiberElement const &E);

/// Dimension of {(X1, X2) : e1^X2 + X1^e2 = 0}, the tangent directions
/// along which the factorization is non-unique.
size_t k_distribution_dim(FiberElement const &e1, FiberElement const &e2);

/// A fiber vector over the sample field Q(zeta_8).
using CVec = std::array<Cyclo8, 4>;

struct BundleSample
{
	int p = 0, q = 0;     // grid position
	Cyclo8 f;             // nowhere-zero coefficient of the reference leg
	std::array<Cyclo8, 2> alpha, beta; // 1-form components
	bool reconstructed = false;        // 1/2 e^e = E exactly at the sample
};

struct BundleFactorization
{
	int grid = 8;
	std::vector<BundleSample> samples;
	bool all_exact = false;
};

/// Pointwise factorization E = 1/2 e^e with e = f e0 + alpha eps_m +
/// beta eps_n on an n x n grid (n | 8), exact over Q(zeta_8).
BundleFactorization bundle_factor(SpectralForm const &E,
                                  FiberElement const &eps_m,
                                  FiberElement const &eps_n,
                                  std::array<FiberElement, 2> const &e0,
                                  int grid = 8);

/// Sample a (2,2,0) spectral form's fiber coefficient at grid point (p,q).
std::array<Cyclo8, 6> sample_bivector(SpectralForm const &E, int grid, int p,
                                      int q);

} // namespace corner
