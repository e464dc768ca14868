#include "thl/eval_params.hpp"

#include <cmath>
#include <numbers>

#include "thl/errors.hpp"

namespace thl {

EvalParams EvalParams::at(int r, int k) {
  if (r < 2) throw NotApplicable("root order must be at least 2");
  EvalParams prm;
  prm.r = r;
  prm.k = k;
  const double step = std::numbers::pi / r;
  prm.a = std::polar(1.0, -2.0 * k * step);
  prm.z = {0.0, 2.0 * std::sin(step)};
  prm.delta = -std::sin(2.0 * k * step) / std::sin(step);
  return prm;
}

std::complex<double> cpow(std::complex<double> base, int e) {
  std::complex<double> out{1.0, 0.0};
  std::complex<double> acc = e < 0 ? 1.0 / base : base;
  for (unsigned n = e < 0 ? unsigned(-long(e)) : unsigned(e); n > 0; n >>= 1) {
    if (n & 1) out *= acc;
    acc *= acc;
  }
  return out;
}

std::complex<double> evaluate(const LaurentPoly& p, const EvalParams& prm) {
  std::complex<double> sum{0.0, 0.0};
  for (const auto& [key, c] : p.terms())
    sum += c.convert_to<double>() * cpow(prm.a, key.first) *
           cpow(prm.z, key.second);
  return sum;
}

}  // namespace thl
