#include <doctest.h>

#include <numbers>

#include "helpers.hpp"
#include "oracle_values.hpp"
#include "rsi/errors.hpp"
#include "rsi/specfun.hpp"

using namespace rsi;
using testing::rel_err;

TEST_SUITE("specfun") {

TEST_CASE("s in closed-form cases") {
  ModelParams p;
  CHECK(s_eval(ModelCase::Rational, p, cplx(0, 2)) == cplx(0, 2));
  CHECK(rel_err(s_eval(ModelCase::Trigonometric, p, I * std::numbers::pi),
                cplx(0, 11.548739357257748)) < 1e-14);
  for (auto k : testing::kCases) CHECK(std::abs(s_eval(k, p, 0.0)) == 0.0);
  CHECK(s_eval(ModelCase::Rational, p, 0.0, 1) == 1.0);
  CHECK_THROWS_AS(s_eval(ModelCase::Rational, p, 0.0, 4), DomainError);
  p.r = 0.0;
  CHECK_THROWS_AS(s_eval(ModelCase::Elliptic, p, 0.3), ConfigError);
}

TEST_CASE("s is odd with unit slope") {
  for (auto k : testing::kCases) {
    auto m = testing::model(k);
    for (cplx x : {cplx(0.3, 0.1), cplx(-1.2, 0.4), cplx(1.9, -0.7)}) {
      CHECK(std::abs(s_eval(m, -x) + s_eval(m, x)) < 1e-13 * std::abs(s_eval(m, x)));
    }
    CHECK(std::abs(s_eval(m, 0.0, 1) - 1.0) < 1e-14);
  }
}

TEST_CASE("elliptic s against theta functions") {
  for (const auto& o : oracle::kEllipticS) {
    ModelParams p;
    p.r = o.r;
    p.a = o.a;
    cplx v = s_eval(ModelCase::Elliptic, p, o.x, o.order);
    CHECK(rel_err(v, o.value) < (o.order == 0 ? 1e-14 : 1e-13));
  }
}

TEST_CASE("elliptic derivatives against finite differences") {
  auto m = testing::model(ModelCase::Elliptic, 2.0, 0.3, 1.0, 1.2);
  for (cplx x : {cplx(0.3, 0.1), cplx(-0.8, 0.05)})
    for (int order = 1; order <= 3; ++order)
      CHECK(rel_err(s_eval(m, x, order), s_eval_fd(m, x, order)) < 1e-6);
}

TEST_CASE("elliptic s tends to trigonometric s") {
  ModelParams p;
  p.a = 20.0;
  for (cplx x : {cplx(0.5, 0.0), cplx(-0.9, 0.3), cplx(1.0, -1.0) / std::sqrt(2.0)})
    CHECK(std::abs(s_eval(ModelCase::Elliptic, p, x) - s_eval(ModelCase::Trigonometric, p, x)) < 1e-8);
}

TEST_CASE("q-product against mpmath") {
  for (const auto& o : oracle::kQProd) {
    CHECK(rel_err(qprod_f({o.z, o.q}, QRep::Product), o.value) < 1e-13);
    CHECK(rel_err(qprod_f({o.z, o.q}, QRep::Auto), o.value) < 1e-13);
    double aQ = std::min(std::abs(o.q), 1.0 / std::abs(o.q));
    if (std::abs(o.z) * aQ < 1.0) CHECK(rel_err(qprod_f({o.z, o.q}, QRep::LogSeries), o.value) < 1e-13);
  }
}

TEST_CASE("q-product identities") {
  CHECK(qprod_f({0.0, 0.5}) == 1.0);
  CHECK(qprod_f({0.0, 3.0}) == 1.0);
  CHECK(rel_err(qprod_f({0.3, 0.5}, QRep::Product), qprod_f({0.3, 0.5}, QRep::LogSeries)) < 1e-13);
  cplx z = 0.2, q = 0.4;
  CHECK(std::abs(qprod_f({q * z, q}) - (1.0 - z) * qprod_f({z / q, q})) < 1e-13);
  for (cplx zq : {cplx(0.2, 0.1), cplx(-0.3, 0.25)})
    for (cplx qq : {cplx(0.5, 0.1), cplx(0.8, -0.3), cplx(0.1, 0.0)}) {
      CHECK(std::abs(qprod_f({zq, qq}) * qprod_f({zq, 1.0 / qq}) - 1.0) < 1e-13);
    }
  CHECK_THROWS_AS(qprod_f({0.3, 1.0}), DomainError);
  CHECK_THROWS_AS(qprod_f({3.0, 0.5}, QRep::LogSeries), DomainError);
  CHECK_THROWS_AS(qprod_f({2.0, 0.5}, QRep::Product), PoleError);
}

TEST_CASE("Euler Gamma") {
  CHECK(std::abs(euler_gamma(1.0) - 1.0) < 1e-14);
  CHECK(rel_err(euler_gamma(0.5), std::sqrt(std::numbers::pi)) < 1e-14);
  CHECK(rel_err(euler_gamma(5.0), 24.0) < 1e-14);
  for (const auto& o : oracle::kEulerGamma) CHECK(rel_err(euler_gamma(o.z), o.value) < 1e-13);
  CHECK_THROWS_AS(euler_gamma(-2.0), PoleError);
  CHECK_THROWS_AS(euler_gamma(0.0), PoleError);
}

TEST_CASE("G1 against mpmath") {
  for (const auto& o : oracle::kG1Rational) {
    auto m = testing::model(ModelCase::Rational);
    CHECK(rel_err(gamma_G(m, o.x, o.alpha), o.value) < 1e-13);
  }
  for (const auto& o : oracle::kG1Trig) {
    auto m = testing::model(ModelCase::Trigonometric, 2.0, 0.3, o.r);
    CHECK(rel_err(gamma_G(m, o.x, o.alpha), o.value) < 1e-12);
  }
  for (const auto& o : oracle::kG1Elliptic) {
    auto m = testing::model(ModelCase::Elliptic, 2.0, 0.3, o.r, o.a);
    CHECK(rel_err(gamma_G(m, o.x, o.alpha), o.value) < 1e-12);
  }
  for (const auto& o : oracle::kGRHyperbolic) {
    CHECK(rel_err(hyperbolic_GR(o.a, o.alpha, o.x), o.value) < 1e-11);
    auto m = testing::model(ModelCase::Hyperbolic, 2.0, 0.3, 1.0, o.a);
    CHECK(rel_err(gamma_G(m, o.x - I * o.a / 2.0, o.alpha), o.value) < 1e-11);
  }
}

TEST_CASE("G1 special values") {
  auto rat = testing::model(ModelCase::Rational);
  CHECK(rel_err(gamma_G(rat, 0.0, 0.7), std::sqrt(std::numbers::pi)) < 1e-14);
  auto hyp = testing::model(ModelCase::Hyperbolic, 2.0, 0.3, 1.0, 1.3);
  CHECK(std::abs(gamma_G(hyp, -I * 1.3 / 2.0, 0.6) - 1.0) < 1e-15);
  CHECK_THROWS_AS(gamma_G(rat, 0.3, cplx(0.0, 1.0)), DomainError);
  CHECK_THROWS_AS(hyperbolic_GR(1.0, 0.5, cplx(0.0, 0.9)), DomainError);
}

TEST_CASE("trigonometric product against series") {
  auto m = testing::model(ModelCase::Trigonometric);
  CHECK(rel_err(gamma_G(m, 0.3, 1.0), trig_gamma_series(1.0, 1.0, 0.3)) < 1e-11);
  for (cplx x : {cplx(-0.7, 0.2), cplx(1.1, 0.0)})
    for (cplx al : {cplx(0.4, 0.0), cplx(1.3, 0.2), cplx(-0.8, 0.1)})
      CHECK(rel_err(gamma_G(m, x, al), trig_gamma_series(1.0, al, x)) < 1e-11);
}

TEST_CASE("elliptic product against series") {
  auto m = testing::model(ModelCase::Elliptic, 2.0, 0.3, 1.0, 1.2);
  for (cplx x : {cplx(0.3, 0.6), cplx(-0.5, 0.4), cplx(0.9, 0.7)})
    for (cplx al : {cplx(0.5, 0.0), cplx(1.1, -0.1)})
      CHECK(rel_err(gamma_G(m, x, al), elliptic_gamma_series(1.0, 1.2, al, x)) < 1e-9);
}

TEST_CASE("Gamma family relations") {
  for (auto k : testing::kCases) {
    auto m = testing::model(k);
    for (cplx x : {cplx(0.2, 0.1), cplx(-0.6, -0.05)})
      for (cplx al : {cplx(0.7, 0.0), cplx(0.45, 0.1)}) {
        CHECK(rel_err(gamma_G(m, x, al, GammaFamily::G2), gamma_G(m, -x, -al)) < 1e-11);
        CHECK(std::abs(gamma_G(m, x, al, GammaFamily::G3) * gamma_G(m, x, -al) - 1.0) < 1e-11);
        CHECK(std::abs(gamma_G(m, x, al, GammaFamily::G4) * gamma_G(m, -x, al) - 1.0) < 1e-11);
        if (k == ModelCase::Rational) {
          CHECK(rel_err(gamma_G(m, x, al, GammaFamily::G2), gamma_G(m, x, al)) < 1e-12);
          CHECK(rel_err(gamma_G(m, x, al, GammaFamily::G4), gamma_G(m, x, al, GammaFamily::G3)) < 1e-12);
        }
      }
  }
}

TEST_CASE("hyperbolic G_R symmetries") {
  for (cplx x : {cplx(0.3, 0.2), cplx(-0.8, 0.1), cplx(1.5, -0.4)}) {
    CHECK(std::abs(hyperbolic_GR(1.3, 0.7, x) * hyperbolic_GR(1.3, 0.7, -x) - 1.0) < 1e-10);
    CHECK(rel_err(hyperbolic_GR(1.3, 0.7, x), hyperbolic_GR(0.7, 1.3, x)) < 1e-10);
  }
}

TEST_CASE("Gamma functional equation") {
  auto rat = testing::model(ModelCase::Rational);
  CHECK(std::abs(gamma_functional_residual(rat, 1.0, 1.0)) < 1e-13);
  ModelParams p;
  p.r = 1.0;
  p.a = 1.2;
  Model trig(ModelCase::Trigonometric, p), ell(ModelCase::Elliptic, p);
  CHECK(std::abs(gamma_functional_residual(trig, 0.2, 0.7)) < 1e-11);
  CHECK(std::abs(gamma_functional_residual(ell, 0.3, 0.5)) < 1e-10);
  for (auto k : testing::kCases) {
    auto m = testing::model(k);
    for (cplx x : {cplx(0.35, 0.1), cplx(-0.9, -0.2)})
      for (cplx al : {cplx(0.6, 0.05), cplx(-0.8, 0.0)}) {
        cplx scale = gamma_main_constant(m, al) * s_eval(m, x);
        CHECK(std::abs(gamma_functional_residual(m, x, al)) < 1e-10 * std::abs(scale));
      }
  }
}

TEST_CASE("hyperbolic continuation outside the strip") {
  auto m = testing::model(ModelCase::Hyperbolic, 2.0, 0.3, 1.0, 1.1);
  for (cplx x : {cplx(0.2, 1.9), cplx(-0.4, -2.3)}) {
    cplx al = 0.5;
    cplx c = gamma_main_constant(m, al) * s_eval(m, x);
    CHECK(std::abs(gamma_functional_residual(m, x, al)) < 1e-10 * std::abs(c));
  }
}

}
