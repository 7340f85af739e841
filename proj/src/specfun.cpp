#include "rsi/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "rsi/errors.hpp"

namespace rsi {

namespace {

constexpr double kPi = std::numbers::pi;

void check_order(int order) {
  if (order < 0 || order > 3) throw DomainError("s_eval: order must be in 0..3");
}

cplx elliptic_s(const ModelParams& p, const NumericsConfig& num, cplx x, int order) {
  double r = p.r;
  double q = std::exp(-2.0 * r * p.a);
  cplx w = std::exp(2.0 * I * r * x);
  cplx winv = 1.0 / w;
  double big = std::max(std::abs(w), std::abs(winv));

  cplx prod = 1.0, l1 = 0.0, l2 = 0.0, l3 = 0.0;
  double ql = 1.0;
  bool done = false;
  for (int l = 1; l <= num.truncation_L; ++l) {
    ql *= q;
    cplx up = ql * w, um = ql * winv;
    double norm = (1.0 - ql) * (1.0 - ql);
    prod *= (1.0 - up) * (1.0 - um) / norm;
    if (order > 0) {
      cplx dp = 1.0 - up, dm = 1.0 - um;
      l1 += 2.0 * I * r * (um / dm - up / dp);
      if (order > 1) l2 += 4.0 * r * r * (um / (dm * dm) + up / (dp * dp));
      if (order > 2)
        l3 += 4.0 * r * r * 2.0 * I * r *
              (up * (1.0 + up) / (dp * dp * dp) - um * (1.0 + um) / (dm * dm * dm));
    }
    if (ql * big / (1.0 - q) < num.quad_abs_tol) {
      done = true;
      break;
    }
  }
  if (!done) throw TruncationError("elliptic s: product did not converge within truncation_L");

  cplx sn = std::sin(r * x) / r, cs = std::cos(r * x);
  if (order == 0) return sn * prod;
  cplx P1 = prod * l1;
  if (order == 1) return cs * prod + sn * P1;
  cplx P2 = prod * (l1 * l1 + l2);
  if (order == 2) return -r * r * sn * prod + 2.0 * cs * P1 + sn * P2;
  cplx P3 = prod * (l1 * l1 * l1 + 3.0 * l1 * l2 + l3);
  return -r * r * cs * prod - 3.0 * r * r * sn * P1 + 3.0 * cs * P2 + sn * P3;
}

}  // namespace

cplx s_eval(ModelCase kase, const ModelParams& p, cplx x, int order,
            const NumericsConfig& numerics) {
  check_order(order);
  switch (kase) {
    case ModelCase::Rational:
      return order == 0 ? x : (order == 1 ? cplx(1.0) : cplx(0.0));
    case ModelCase::Trigonometric: {
      double r = p.r;
      if (!(r > 0.0)) throw ConfigError("trigonometric case needs r > 0");
      switch (order) {
        case 0: return std::sin(r * x) / r;
        case 1: return std::cos(r * x);
        case 2: return -r * std::sin(r * x);
        default: return -r * r * std::cos(r * x);
      }
    }
    case ModelCase::Hyperbolic: {
      double a = p.a;
      if (!(a > 0.0)) throw ConfigError("hyperbolic case needs a > 0");
      double k = kPi / a;
      switch (order) {
        case 0: return std::sinh(k * x) / k;
        case 1: return std::cosh(k * x);
        case 2: return k * std::sinh(k * x);
        default: return k * k * std::cosh(k * x);
      }
    }
    case ModelCase::Elliptic:
      if (!(p.r > 0.0) || !(p.a > 0.0)) throw ConfigError("elliptic case needs r > 0 and a > 0");
      return elliptic_s(p, numerics, x, order);
  }
  return 0.0;
}

cplx s_eval(const Model& model, cplx x, int order) {
  return s_eval(model.kase, model.params, x, order, model.numerics);
}

cplx s_eval_fd(const Model& model, cplx x, int order) {
  check_order(order);
  if (order == 0) return s_eval(model, x, 0);
  auto s = [&](cplx z) { return s_eval(model, z, 0); };
  auto diff = [&](double h) -> cplx {
    switch (order) {
      case 1: return (s(x + h) - s(x - h)) / (2.0 * h);
      case 2: return (s(x + h) - 2.0 * s(x) + s(x - h)) / (h * h);
      default: return (s(x + 2.0 * h) - 2.0 * s(x + h) + 2.0 * s(x - h) - s(x - 2.0 * h)) /
                      (2.0 * h * h * h);
    }
  };
  double h = model.numerics.fd_step * std::pow(10.0, order - 1);
  return (4.0 * diff(h / 2.0) - diff(h)) / 3.0;
}

double s_third_over_first(const Model& model) {
  return (s_eval(model, 0.0, 3) / s_eval(model, 0.0, 1)).real();
}

// ---------------------------------------------------------------------------

namespace {

struct QNorm {
  cplx Q;       // |Q| < 1
  bool inverse; // true when |q| > 1
};

QNorm normalize_q(cplx q) {
  double aq = std::abs(q);
  if (!(aq != 1.0) || !std::isfinite(aq) || aq == 0.0)
    throw DomainError("qprod_f: need 0 < |q| != 1");
  if (aq < 1.0) return {q, false};
  return {1.0 / q, true};
}

int product_terms(double az, double aQ, double tol) {
  if (az == 0.0) return 0;
  double k = std::ceil((std::log(tol * (1.0 - aQ * aQ)) - std::log(az)) / (2.0 * std::log(aQ))) + 1.0;
  return k >= 1e9 ? std::numeric_limits<int>::max() : std::max(1, static_cast<int>(k));
}

int series_terms(double azQ, double tol) {
  if (azQ >= 1.0) return std::numeric_limits<int>::max();
  if (azQ == 0.0) return 1;
  double n = std::ceil(std::log(tol * (1.0 - azQ)) / std::log(azQ)) + 1.0;
  return n >= 1e9 ? std::numeric_limits<int>::max() : std::max(1, static_cast<int>(n));
}

cplx log_series(const QNorm& qn, cplx z, const NumericsConfig& num) {
  cplx zQ = z * qn.Q;
  double azQ = std::abs(zQ);
  if (azQ >= 1.0) throw DomainError("qprod_f: LogSeries needs |z| < max(|q|, 1/|q|)");
  int cap = 64 * num.truncation_L;
  cplx sum = 0.0, pw = 1.0, Q2 = qn.Q * qn.Q, Q2n = 1.0;
  double apw = 1.0;
  for (int n = 1; n <= cap; ++n) {
    pw *= zQ;
    Q2n *= Q2;
    apw *= azQ;
    sum += pw / (static_cast<double>(n) * (1.0 - Q2n));
    if (apw / (static_cast<double>(n) * (1.0 - azQ)) < num.quad_abs_tol * 1e-2) {
      return qn.inverse ? -sum : sum;
    }
  }
  throw TruncationError("qprod_f: log series did not converge");
}

template <bool Log>
cplx product_form(const QNorm& qn, cplx z, const NumericsConfig& num) {
  cplx acc = Log ? cplx(0.0) : cplx(1.0);
  double az = std::abs(z);
  if (az == 0.0) return acc;
  double aQ = std::abs(qn.Q);
  cplx Q2 = qn.Q * qn.Q, qk = qn.Q;  // Q^(2k-1)
  double aqk = aQ;
  for (int k = 1; k <= num.truncation_L; ++k) {
    cplx factor = 1.0 - qk * z;
    if (factor == 0.0) {
      if (!qn.inverse) throw PoleError("qprod_f: pole of f(z;q)");
      if constexpr (Log) throw DomainError("qprod_log_f: zero of f(z;q)");
      return 0.0;
    }
    if constexpr (Log) {
      acc += qn.inverse ? std::log(factor) : -std::log(factor);
    } else {
      acc = qn.inverse ? acc * factor : acc / factor;
    }
    if (aqk * az / (1.0 - aQ * aQ) < num.quad_abs_tol * 1e-2) return acc;
    qk *= Q2;
    aqk *= aQ * aQ;
  }
  throw TruncationError("qprod_f: product did not reach its tail bound within truncation_L");
}

bool use_series(const QNorm& qn, cplx z, QRep rep, const NumericsConfig& num) {
  if (rep == QRep::LogSeries) return true;
  if (rep == QRep::Product) return false;
  double az = std::abs(z), aQ = std::abs(qn.Q);
  double tol = num.quad_abs_tol * 1e-2;
  int ns = series_terms(az * aQ, tol);
  int np = product_terms(az, aQ, tol);
  return ns < np && ns <= 64 * num.truncation_L;
}

}  // namespace

cplx qprod_f(QProductPoint pt, QRep rep, const NumericsConfig& numerics) {
  QNorm qn = normalize_q(pt.q);
  if (pt.z == 0.0) return 1.0;
  if (use_series(qn, pt.z, rep, numerics)) return std::exp(log_series(qn, pt.z, numerics));
  return product_form<false>(qn, pt.z, numerics);
}

cplx qprod_log_f(QProductPoint pt, QRep rep, const NumericsConfig& numerics) {
  QNorm qn = normalize_q(pt.q);
  if (pt.z == 0.0) return 0.0;
  if (use_series(qn, pt.z, rep, numerics)) return log_series(qn, pt.z, numerics);
  return product_form<true>(qn, pt.z, numerics);
}

// ---------------------------------------------------------------------------

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

}  // namespace

cplx log_gamma(cplx z) {
  if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real()))
    throw PoleError("euler_gamma: pole at non-positive integer " + std::to_string(z.real()));
  if (z.real() < 0.5) {
    cplx sn = std::sin(kPi * z);
    if (sn == 0.0) throw PoleError("euler_gamma: pole");
    return std::log(kPi) - std::log(sn) - log_gamma(1.0 - z);
  }
  z -= 1.0;
  cplx x = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) x += kLanczos[i] / (z + static_cast<double>(i));
  cplx t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

cplx euler_gamma(cplx z) { return std::exp(log_gamma(z)); }

}  // namespace rsi
