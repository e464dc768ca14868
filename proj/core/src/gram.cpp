#include "thl/gram.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <utility>

#include "thl/errors.hpp"

namespace thl {

namespace {

double frobenius(const Matrix& m) {
  double sum = 0.0;
  for (const auto& row : m)
    for (const Complex& v : row) sum += std::norm(v);
  return std::sqrt(sum);
}

double off_diagonal(const Matrix& m) {
  double sum = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (i != j) sum += std::norm(m[i][j]);
  return std::sqrt(sum);
}

// One plane rotation U in the (p, q) plane with U^H m U zeroing m[p][q].
// For the Hermitian 2x2 block [[alpha, ge^{it}], [ge^{-it}, beta]] the
// rotation is the classical real one conjugated by the phase e^{-it}.
void rotate(Matrix& m, std::size_t p, std::size_t q) {
  const Complex gamma = m[p][q];
  const double g = std::abs(gamma);
  if (g == 0.0) return;
  const Complex phase = gamma / g;
  const double tau = (std::real(m[q][q]) - std::real(m[p][p])) / (2.0 * g);
  const double t = (tau >= 0 ? 1.0 : -1.0) /
                   (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const std::size_t n = m.size();
  const Complex ph_conj = std::conj(phase);
  for (std::size_t i = 0; i < n; ++i) {
    const Complex aip = m[i][p], aiq = m[i][q];
    m[i][p] = c * aip - s * ph_conj * aiq;
    m[i][q] = s * aip + c * ph_conj * aiq;
  }
  for (std::size_t j = 0; j < n; ++j) {
    const Complex apj = m[p][j], aqj = m[q][j];
    m[p][j] = c * apj - s * phase * aqj;
    m[q][j] = s * apj + c * phase * aqj;
  }
  m[p][q] = m[q][p] = 0.0;
  m[p][p] = std::real(m[p][p]);
  m[q][q] = std::real(m[q][q]);
}

}  // namespace

double hermitian_defect(const Matrix& m) {
  double worst = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != m.size())
      throw DimensionMismatch("hermitian_defect: matrix is not square");
    for (std::size_t j = 0; j <= i; ++j)
      worst = std::max(worst, std::abs(m[i][j] - std::conj(m[j][i])));
  }
  return worst;
}

std::vector<double> hermitian_eigenvalues(Matrix m, double tol) {
  const std::size_t n = m.size();
  if (n == 0) return {};
  if (hermitian_defect(m) > tol)
    throw NonHermitian("hermitian_eigenvalues: defect exceeds tolerance");
  for (std::size_t i = 0; i < n; ++i) {
    m[i][i] = std::real(m[i][i]);
    for (std::size_t j = 0; j < i; ++j) {
      const Complex mean = 0.5 * (m[i][j] + std::conj(m[j][i]));
      m[i][j] = mean;
      m[j][i] = std::conj(mean);
    }
  }

  const double target = 1e-12 * std::max(1.0, frobenius(m));
  constexpr int kMaxSweeps = 64;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal(m) <= target) {
      std::vector<double> eig(n);
      for (std::size_t i = 0; i < n; ++i) eig[i] = std::real(m[i][i]);
      std::sort(eig.begin(), eig.end());
      return eig;
    }
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) rotate(m, p, q);
  }
  throw NoConvergence("hermitian_eigenvalues: Jacobi sweeps exhausted");
}

std::pair<LaurentPoly, int> phi_polynomial(const GroupElement& g,
                                           SkeinEngine& engine,
                                           Convention conv) {
  const GroupElement rep = reduce(g);
  return {engine.polynomial(build_link(rep, conv)), rep.leaf_count()};
}

Complex phi(const GroupElement& g, const EvalParams& prm, SkeinEngine& engine,
            Convention conv) {
  auto [poly, leaves] = phi_polynomial(g, engine, conv);
  return evaluate(poly, prm) / std::pow(prm.delta, leaves - 1);
}

Matrix element_gram(const std::vector<GroupElement>& family,
                    const EvalParams& prm, SkeinEngine& engine,
                    Convention conv) {
  const std::size_t n = family.size();
  Matrix m(n, std::vector<Complex>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const GroupElement lhs = invert(family[i]);
    for (std::size_t j = 0; j < n; ++j)
      m[i][j] = phi(multiply(lhs, family[j]), prm, engine, conv);
  }
  return m;
}

LaurentPoly pairing_polynomial(const Tangle& left, const Tangle& right,
                               SkeinEngine& engine) {
  if (left.bottom.size() != 0 || right.bottom.size() != 0)
    throw NotApplicable("pairing needs top-boundary tangles");
  if (!(left.top == right.top))
    throw BoundaryMismatch("pairing: sign rows differ", 1);
  return engine.polynomial(close_tangle(stack(star(right), left)));
}

Complex tangle_inner(const Tangle& left, const Tangle& right,
                     const EvalParams& prm, SkeinEngine& engine) {
  const LaurentPoly poly = pairing_polynomial(left, right, engine);
  const int half = left.top.size() / 2;
  return evaluate(poly, prm) / std::pow(prm.delta, half - 1);
}

Matrix tangle_gram(const std::vector<Tangle>& family, const EvalParams& prm,
                   SkeinEngine& engine) {
  const std::size_t n = family.size();
  Matrix m(n, std::vector<Complex>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m[i][j] = tangle_inner(family[i], family[j], prm, engine);
  return m;
}

SpectrumReport element_spectrum(const std::vector<GroupElement>& family,
                                const EvalParams& prm, SkeinEngine& engine,
                                Convention conv) {
  SpectrumReport rep;
  rep.params = prm;
  Matrix m = element_gram(family, prm, engine, conv);
  rep.defect = hermitian_defect(m);
  rep.eigenvalues = hermitian_eigenvalues(std::move(m));
  return rep;
}

}  // namespace thl
