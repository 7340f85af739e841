#pragma once

#include "rsi/model.hpp"

namespace rsi {

/// s(x) and its derivatives up to third order.
///
/// Rational x, trigonometric sin(rx)/r, hyperbolic (a/pi) sinh(pi x/a), and
/// elliptic (1/r) sin(rx) prod_l (1-p^l w)(1-p^l/w)/(1-p^l)^2 with
/// p = exp(-2ra), w = exp(2irx). Elliptic derivatives are exact derivatives of
/// the truncated product.
cplx s_eval(const Model& model, cplx x, int order = 0);
cplx s_eval(ModelCase kase, const ModelParams& params, cplx x, int order = 0,
            const NumericsConfig& numerics = {});

/// Central finite differences of s with one Richardson level. The step is
/// numerics.fd_step scaled by 10^(order-1). Reference implementation for the derivatives above.
cplx s_eval_fd(const Model& model, cplx x, int order);

/// s'''(0)/s'(0).
double s_third_over_first(const Model& model);

// ---------------------------------------------------------------------------
// q-product

struct QProductPoint {
  cplx z;
  cplx q;
};

enum class QRep { Product, LogSeries, Auto };

/// f(z;q) = prod_k 1/(1 - q^(2k-1) z) for |q|<1 and prod_k (1 - q^-(2k-1) z)
/// for |q|>1. Auto picks whichever of the two representations converges in
/// fewer terms at this point.
cplx qprod_f(QProductPoint pt, QRep rep = QRep::Auto, const NumericsConfig& numerics = {});

/// log f(z;q) on the principal sheet of each factor (sum of logs).
cplx qprod_log_f(QProductPoint pt, QRep rep = QRep::Auto, const NumericsConfig& numerics = {});

// ---------------------------------------------------------------------------
// Euler Gamma

cplx euler_gamma(cplx z);
/// log Gamma(z); the imaginary part is not reduced to (-pi, pi].
cplx log_gamma(cplx z);

// ---------------------------------------------------------------------------
// Gamma functions G(x; alpha)

enum class GammaFamily { G1, G2, G3, G4 };

/// Family members from the natural solution G1 (for Re alpha < 0, G1 is the
/// natural extension 1/G1(x;-alpha) outside the rational case):
/// G2(x;a) = G1(-x;-a), G3(x;a) = 1/G1(x;-a), G4(x;a) = 1/G1(-x;a).
cplx gamma_G(const Model& model, cplx x, cplx alpha, GammaFamily family = GammaFamily::G1);

/// G(x;alpha) in the convention G(x;-alpha) = G(-x;alpha): G1 for
/// Re alpha > 0 and G1(-x;-alpha) otherwise. Used by all wave functions.
cplx gamma_main(const Model& model, cplx x, cplx alpha);

/// Constant c in G1(x+ia/2)/G1(x-ia/2) = c s(x) for the natural G1.
cplx gamma_constant(const Model& model, cplx alpha);
/// Constant of gamma_main.
cplx gamma_main_constant(const Model& model, cplx alpha);

/// gamma_main(x+i alpha/2)/gamma_main(x-i alpha/2) - c s(x).
cplx gamma_functional_residual(const Model& model, cplx x, cplx alpha);

/// Hyperbolic G_R(a, alpha; x) from its integral representation.
/// Requires |Im x| < Re(a+alpha)/2 and Re alpha > 0.
cplx hyperbolic_GR(double a, cplx alpha, cplx x, const NumericsConfig& numerics = {});

/// Trigonometric G1 from exp(-r x^2/2 alpha + sum_n e^{2inrx}/(2n sinh(n r alpha))).
cplx trig_gamma_series(double r, cplx alpha, cplx x, const NumericsConfig& numerics = {});

/// Elliptic G1 from exp(-r x^2/2 alpha + sum_n sinh(nra + 2inrx)/(2n sinh(n r alpha) sinh(n r a))).
/// Requires |Im x - a/2| < Re(a+alpha)/2.
cplx elliptic_gamma_series(double r, double a, cplx alpha, cplx x,
                           const NumericsConfig& numerics = {});

/// -2ir prod_l (1 - e^{-2lra})^2.
cplx elliptic_constant(double r, double a, const NumericsConfig& numerics = {});

}  // namespace rsi
