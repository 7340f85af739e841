#include <cmath>

#include "rsi/errors.hpp"
#include "rsi/operators.hpp"
#include "rsi/specfun.hpp"

namespace rsi {

namespace {

constexpr double kPoleGuard = 1e-3;

cplx guarded_V(const Model& model, cplx x) {
  if (std::abs(s_eval(model, x)) <= kPoleGuard)
    throw PoleError("non-relativistic Hamiltonian: evaluation too close to a pole of V");
  return potential_V(model, x);
}

cplx potential_sum(const Model& model, std::span<const double> m, std::span<const cplx> X) {
  double g = model.params.g;
  cplx v = 0.0;
  for (std::size_t j = 0; j < X.size(); ++j)
    for (std::size_t k = j + 1; k < X.size(); ++k) {
      double gam = nonrel_coupling(m[j], m[k], g);
      if (gam != 0.0) v += gam * guarded_V(model, X[j] - X[k]);
    }
  return v;
}

}  // namespace

std::vector<double> nonrel_masses(NonRelKind kind, int N, int Nt, double g) {
  if (N < 0 || Nt < 0) throw ConfigError("nonrel_masses: sizes must be >= 0");
  std::vector<double> m(static_cast<std::size_t>(N), 1.0);
  if (kind == NonRelKind::Deformed) m.insert(m.end(), static_cast<std::size_t>(Nt), -1.0 / g);
  return m;
}

double nonrel_coupling(double mJ, double mK, double g) {
  return (mJ + mK) * g * (mJ * mK * g - 1.0);
}

cplx apply_H_nonrel(const Model& model, std::span<const double> masses, const ConfigFunction& f,
                    std::span<const cplx> X) {
  if (masses.size() != X.size()) throw ConfigError("apply_H_nonrel: size mismatch");
  double h = 10.0 * model.numerics.fd_step;
  if (!(h > 1e-8)) throw DomainError("apply_H_nonrel: finite-difference step too small");
  std::vector<cplx> Y(X.begin(), X.end());
  cplx f0 = f(X);
  cplx lap = 0.0;
  for (std::size_t j = 0; j < X.size(); ++j) {
    auto d2 = [&](double step) {
      Y[j] = X[j] + step;
      cplx fp = f(Y);
      Y[j] = X[j] - step;
      cplx fm = f(Y);
      Y[j] = X[j];
      return (fp - 2.0 * f0 + fm) / (step * step);
    };
    cplx second = (4.0 * d2(h / 2.0) - d2(h)) / 3.0;
    lap -= second / masses[j];
  }
  return lap + potential_sum(model, masses, X) * f0;
}

cplx apply_H_nonrel_logd(const Model& model, std::span<const double> masses,
                         std::span<const cplx> X, std::span<const cplx> dlog,
                         std::span<const cplx> d2log) {
  if (masses.size() != X.size() || dlog.size() != X.size() || d2log.size() != X.size())
    throw ConfigError("apply_H_nonrel_logd: size mismatch");
  cplx v = 0.0;
  for (std::size_t j = 0; j < X.size(); ++j) v -= (dlog[j] * dlog[j] + d2log[j]) / masses[j];
  return v + potential_sum(model, masses, X);
}

}  // namespace rsi
