#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "rsi/errors.hpp"
#include "rsi/specfun.hpp"

namespace rsi {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kTaylorTerms = 30;

void require_nonzero_real_part(cplx alpha) {
  if (alpha.real() == 0.0) throw DomainError("Gamma function: Re(alpha) must be nonzero");
}

// Power series in u = y^2 of sin(t)/t with t = c y.
std::vector<cplx> sinc_series(cplx c) {
  std::vector<cplx> out(kTaylorTerms);
  cplx c2 = c * c, term = 1.0;
  out[0] = 1.0;
  for (int n = 1; n < kTaylorTerms; ++n) {
    term *= -c2 / static_cast<double>((2 * n) * (2 * n + 1));
    out[n] = term;
  }
  return out;
}

// Power series in u = y^2 of sinh(t)/t with t = c y.
std::vector<cplx> sinhc_series(cplx c) {
  std::vector<cplx> out(kTaylorTerms);
  cplx c2 = c * c, term = 1.0;
  out[0] = 1.0;
  for (int n = 1; n < kTaylorTerms; ++n) {
    term *= c2 / static_cast<double>((2 * n) * (2 * n + 1));
    out[n] = term;
  }
  return out;
}

std::vector<cplx> mul(const std::vector<cplx>& u, const std::vector<cplx>& v) {
  std::vector<cplx> out(kTaylorTerms, 0.0);
  for (int i = 0; i < kTaylorTerms; ++i)
    for (int j = 0; i + j < kTaylorTerms; ++j) out[i + j] += u[i] * v[j];
  return out;
}

std::vector<cplx> div(const std::vector<cplx>& u, const std::vector<cplx>& v) {
  std::vector<cplx> out(kTaylorTerms, 0.0);
  for (int n = 0; n < kTaylorTerms; ++n) {
    cplx acc = u[n];
    for (int k = 1; k <= n; ++k) acc -= v[k] * out[n - k];
    out[n] = acc / v[0];
  }
  return out;
}

cplx trig_G1_positive(double r, cplx alpha, cplx x, const NumericsConfig& num) {
  cplx q = std::exp(-r * alpha);
  cplx z = std::exp(2.0 * I * r * x);
  return std::exp(-r * x * x / (2.0 * alpha) + qprod_log_f({z, q}, QRep::Auto, num));
}

cplx elliptic_G1_positive(double r, double a, cplx alpha, cplx x, const NumericsConfig& num) {
  cplx q = std::exp(-r * alpha);
  double p = std::exp(-r * a), p2 = p * p;
  cplx w = std::exp(2.0 * I * r * x), winv = 1.0 / w;
  double aq = std::abs(q);
  cplx logv = -r * x * x / (2.0 * alpha);
  double pl_lo = 1.0;  // p^(2l-2)
  for (int l = 1; l <= num.truncation_L; ++l) {
    double pl_hi = pl_lo * p2;  // p^(2l)
    logv += qprod_log_f({pl_lo * w, q}, QRep::Auto, num);
    logv -= qprod_log_f({pl_hi * winv, q}, QRep::Auto, num);
    double tail = aq * (pl_hi * std::abs(w) + pl_hi * p2 * std::abs(winv)) /
                  ((1.0 - p2) * (1.0 - aq * aq));
    if (tail < num.quad_abs_tol * 1e-2) return std::exp(logv);
    pl_lo = pl_hi;
  }
  throw TruncationError("elliptic Gamma: double product did not converge within truncation_L");
}

cplx hyperbolic_G1_positive(double a, cplx alpha, cplx x, const NumericsConfig& num) {
  cplx c = 2.0 * kPi * I / a;
  ModelParams p;
  p.a = a;
  auto s = [&](cplx z) { return s_eval(ModelCase::Hyperbolic, p, z, 0, num); };
  double ar = alpha.real();
  double bound = (a + ar) / 2.0 - a / 4.0;
  cplx y = x + I * a / 2.0;  // argument of G_R
  cplx fac = 1.0;
  int guard = 0;
  while (y.imag() > bound) {
    // G1(u) = c s(u - i alpha/2) G1(u - i alpha), u = y - ia/2
    fac *= c * s(y - I * a / 2.0 - I * alpha / 2.0);
    y -= I * alpha;
    if (++guard > 100000) throw DomainError("hyperbolic Gamma: argument too far from strip");
  }
  while (y.imag() < -bound) {
    cplx den = c * s(y - I * a / 2.0 + I * alpha / 2.0);
    if (den == 0.0) throw PoleError("hyperbolic Gamma: pole");
    fac /= den;
    y += I * alpha;
    if (++guard > 100000) throw DomainError("hyperbolic Gamma: argument too far from strip");
  }
  return fac * hyperbolic_GR(a, alpha, y, num);
}

cplx G1_natural(const Model& m, cplx x, cplx alpha) {
  require_nonzero_real_part(alpha);
  const ModelParams& p = m.params;
  switch (m.kase) {
    case ModelCase::Rational:
      return euler_gamma(0.5 + x / (I * alpha));
    case ModelCase::Trigonometric:
      if (alpha.real() > 0.0) return trig_G1_positive(p.r, alpha, x, m.numerics);
      return 1.0 / trig_G1_positive(p.r, -alpha, x, m.numerics);
    case ModelCase::Hyperbolic:
      if (alpha.real() > 0.0) return hyperbolic_G1_positive(p.a, alpha, x, m.numerics);
      return 1.0 / hyperbolic_G1_positive(p.a, -alpha, x, m.numerics);
    case ModelCase::Elliptic:
      if (alpha.real() > 0.0) return elliptic_G1_positive(p.r, p.a, alpha, x, m.numerics);
      return 1.0 / elliptic_G1_positive(p.r, p.a, -alpha, x, m.numerics);
  }
  return 0.0;
}

}  // namespace

cplx gamma_G(const Model& model, cplx x, cplx alpha, GammaFamily family) {
  switch (family) {
    case GammaFamily::G1: return G1_natural(model, x, alpha);
    case GammaFamily::G2: return G1_natural(model, -x, -alpha);
    case GammaFamily::G3: return 1.0 / G1_natural(model, x, -alpha);
    case GammaFamily::G4: return 1.0 / G1_natural(model, -x, alpha);
  }
  return 0.0;
}

cplx gamma_main(const Model& model, cplx x, cplx alpha) {
  require_nonzero_real_part(alpha);
  if (alpha.real() > 0.0) return G1_natural(model, x, alpha);
  return G1_natural(model, -x, -alpha);
}

cplx elliptic_constant(double r, double a, const NumericsConfig& num) {
  double p = std::exp(-2.0 * r * a), pl = 1.0;
  cplx c = -2.0 * I * r;
  for (int l = 1; l <= num.truncation_L; ++l) {
    pl *= p;
    c *= (1.0 - pl) * (1.0 - pl);
    if (2.0 * pl / (1.0 - p) < num.quad_abs_tol * 1e-2) return c;
  }
  throw TruncationError("elliptic constant: product did not converge within truncation_L");
}

cplx gamma_constant(const Model& model, cplx alpha) {
  require_nonzero_real_part(alpha);
  const ModelParams& p = model.params;
  switch (model.kase) {
    case ModelCase::Rational: return 1.0 / (I * alpha);
    case ModelCase::Trigonometric: return -2.0 * I * p.r;
    case ModelCase::Hyperbolic: return 2.0 * kPi * I / p.a;
    case ModelCase::Elliptic: return elliptic_constant(p.r, p.a, model.numerics);
  }
  return 0.0;
}

cplx gamma_main_constant(const Model& model, cplx alpha) {
  require_nonzero_real_part(alpha);
  if (alpha.real() > 0.0) return gamma_constant(model, alpha);
  return -gamma_constant(model, -alpha);
}

cplx gamma_functional_residual(const Model& model, cplx x, cplx alpha) {
  cplx ratio = gamma_main(model, x + I * alpha / 2.0, alpha) /
               gamma_main(model, x - I * alpha / 2.0, alpha);
  return ratio - gamma_main_constant(model, alpha) * s_eval(model, x, 0);
}

cplx hyperbolic_GR(double a, cplx alpha, cplx x, const NumericsConfig& num) {
  if (!(a > 0.0)) throw DomainError("hyperbolic_GR: a must be > 0");
  if (!(alpha.real() > 0.0)) throw DomainError("hyperbolic_GR: Re(alpha) must be > 0");
  double kappa = a + alpha.real() - 2.0 * std::abs(x.imag());
  if (!(kappa > 0.0)) throw DomainError("hyperbolic_GR: |Im x| must be < Re(a+alpha)/2");
  if (x == 0.0) return 1.0;

  double y0 = 0.5 / std::max({a, std::abs(alpha), std::abs(x), 1.0});
  cplx pref = x / (a * alpha);

  // [0, y0]: integrand = x/(a alpha) * sum_{k>=1} p_k y^(2k-2)
  auto S = sinc_series(2.0 * x);
  auto P = div(S, mul(sinhc_series(cplx(a)), sinhc_series(alpha)));
  cplx head = 0.0;
  double y2 = y0 * y0, ypow = y0;
  for (int k = 1; k < kTaylorTerms; ++k) {
    head += P[k] * ypow / static_cast<double>(2 * k - 1);
    ypow *= y2;
  }
  head *= pref;

  // [y0, Y]
  double Y = y0 + 40.0 / kappa;
  cplx sa = a + alpha;
  auto integrand = [&](double y) -> cplx {
    cplx e1 = std::exp(2.0 * I * x * y - sa * y);
    cplx e2 = std::exp(-2.0 * I * x * y - sa * y);
    cplx den = I * (1.0 - std::exp(-2.0 * a * y)) * (1.0 - std::exp(-2.0 * alpha * y));
    return (e1 - e2) / den / y;
  };
  // Kronrod error estimates are pessimistic here; a relative request of
  // 1e-12 already gives full double accuracy on these integrands.
  double err = 0.0;
  cplx body = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
      integrand, y0, Y, 12, std::max(100.0 * num.quad_abs_tol, 1e-13), &err);
  return std::exp(I * (head + body - pref / y0));
}

cplx trig_gamma_series(double r, cplx alpha, cplx x, const NumericsConfig& num) {
  require_nonzero_real_part(alpha);
  if (alpha.real() < 0.0) return 1.0 / trig_gamma_series(r, -alpha, x, num);
  double rate = r * (2.0 * x.imag() + alpha.real());
  if (!(rate > 0.0)) throw DomainError("trig_gamma_series: need Im x > -Re(alpha)/2");
  cplx e = std::exp(2.0 * I * r * x), en = 1.0;
  cplx sum = -r * x * x / (2.0 * alpha);
  int cap = 64 * num.truncation_L;
  for (int n = 1; n <= cap; ++n) {
    en *= e;
    double nn = static_cast<double>(n);
    // 1/(2 sinh(n r alpha)) = e^{-n r alpha}/(1 - e^{-2 n r alpha})
    cplx en_a = std::exp(-nn * r * alpha);
    sum += en * en_a / (nn * (1.0 - en_a * en_a));
    if (std::exp(-nn * rate) / (nn * (1.0 - std::exp(-rate))) < num.quad_abs_tol * 1e-2)
      return std::exp(sum);
  }
  throw TruncationError("trig_gamma_series: series did not converge");
}

cplx elliptic_gamma_series(double r, double a, cplx alpha, cplx x, const NumericsConfig& num) {
  require_nonzero_real_part(alpha);
  if (alpha.real() < 0.0) return 1.0 / elliptic_gamma_series(r, a, -alpha, x, num);
  double ar = alpha.real();
  double rate1 = r * (2.0 * x.imag() + ar);
  double rate2 = r * (2.0 * a + ar - 2.0 * x.imag());
  if (!(rate1 > 0.0 && rate2 > 0.0))
    throw DomainError("elliptic_gamma_series: need |Im x - a/2| < Re(a+alpha)/2");
  double rate = std::min(rate1, rate2);
  cplx sum = -r * x * x / (2.0 * alpha);
  int cap = 64 * num.truncation_L;
  for (int n = 1; n <= cap; ++n) {
    double nn = static_cast<double>(n);
    cplx w = 2.0 * I * nn * r * x;
    cplx B = nn * r * alpha;
    double A = nn * r * a;
    cplx num_ = std::exp(w - B) - std::exp(-2.0 * A - w - B);
    cplx den = (1.0 - std::exp(-2.0 * B)) * (1.0 - std::exp(-2.0 * A));
    sum += num_ / (nn * den);
    if (2.0 * std::exp(-nn * rate) / (nn * (1.0 - std::exp(-rate))) < num.quad_abs_tol * 1e-2)
      return std::exp(sum);
  }
  throw TruncationError("elliptic_gamma_series: series did not converge");
}

}  // namespace rsi
