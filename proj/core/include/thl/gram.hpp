#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "thl/eval_params.hpp"
#include "thl/homfly.hpp"
#include "thl/laurent.hpp"
#include "thl/tangle.hpp"
#include "thl/tangle_build.hpp"
#include "thl/thompson.hpp"

namespace thl {

using Complex = std::complex<double>;
using Matrix = std::vector<std::vector<Complex>>;

/// Eigenvalues of a Hermitian matrix, ascending, via cyclic Jacobi rotations.
/// Throws NonHermitian when max |m[i][j] - conj(m[j][i])| exceeds `tol`
/// (the mean of the two triangles is what gets diagonalised), and
/// NoConvergence if the off-diagonal mass refuses to die within the sweep
/// bound.  Exact arithmetic aside, 12x12 finishes in a handful of sweeps.
std::vector<double> hermitian_eigenvalues(Matrix m, double tol = 1e-8);

/// Largest |m[i][j] - conj(m[j][i])| over all entries.
double hermitian_defect(const Matrix& m);

/// Skein polynomial of the element's closed diagram together with the leaf
/// count of the reduced representative; the pair determines the normalised
/// value at every parameter point.
std::pair<LaurentPoly, int> phi_polynomial(const GroupElement& g,
                                           SkeinEngine& engine,
                                           Convention conv = Convention::standard);

/// Normalised diagram invariant phi(g) = P(L(g)) / delta^(n-1) evaluated at
/// `prm`, with n the reduced leaf count.  phi(identity) = 1, and the value
/// does not depend on the representative handed in.
Complex phi(const GroupElement& g, const EvalParams& prm, SkeinEngine& engine,
            Convention conv = Convention::standard);

/// Gram matrix m[i][j] = phi(family[i]^-1 * family[j]) of a family of
/// oriented elements.
Matrix element_gram(const std::vector<GroupElement>& family,
                    const EvalParams& prm, SkeinEngine& engine,
                    Convention conv = Convention::standard);

/// Exact pairing of two top-boundary tangles over the same sign row:
/// P(close(star(right) stacked on left)).  Conjugating both sides by the
/// same crossing cancels by a poke move, so the value never changes.
LaurentPoly pairing_polynomial(const Tangle& left, const Tangle& right,
                               SkeinEngine& engine);

/// Inner product delta^(1 - n/2) * pairing evaluated at `prm`, where n is
/// the boundary length; the crossingless matching has norm 1.
Complex tangle_inner(const Tangle& left, const Tangle& right,
                     const EvalParams& prm, SkeinEngine& engine);

/// Gram matrix of top-boundary tangles sharing one sign row.
Matrix tangle_gram(const std::vector<Tangle>& family, const EvalParams& prm,
                   SkeinEngine& engine);

/// Spectral summary of one Gram matrix at one parameter point.
struct SpectrumReport {
  EvalParams params;
  double defect = 0.0;              ///< Hermitian defect of the raw matrix
  std::vector<double> eigenvalues;  ///< ascending
  double min_eigenvalue() const { return eigenvalues.front(); }
  double max_eigenvalue() const { return eigenvalues.back(); }
};

/// Gram spectrum of an element family at one parameter point.
SpectrumReport element_spectrum(const std::vector<GroupElement>& family,
                                const EvalParams& prm, SkeinEngine& engine,
                                Convention conv = Convention::standard);

}  // namespace thl
