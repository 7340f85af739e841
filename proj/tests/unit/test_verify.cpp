#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "rsi/errors.hpp"
#include "rsi/operators.hpp"
#include "rsi/specfun.hpp"
#include "rsi/verify.hpp"
#include "rsi/wavefun.hpp"

using namespace rsi;
using testing::rel_err;
using L = MassLabel;

namespace {

std::vector<cplx> points(std::size_t n, double start = 0.9, double gap = 0.55) {
  std::vector<cplx> X;
  for (std::size_t j = 0; j < n; ++j)
    X.push_back(cplx(start - gap * static_cast<double>(j), j % 2 ? -0.03 : 0.04));
  return X;
}

double constant(const ResidualReport& r, const std::string& name) {
  for (const auto& [k, v] : r.measured_constants)
    if (k == name) return v;
  FAIL("missing constant " << name);
  return 0.0;
}

}  // namespace

TEST_SUITE("verify") {

TEST_CASE("identity names") {
  for (IdentityId id : all_identities()) CHECK(parse_identity(to_string(id)) == id);
  CHECK(parse_identity("source") == IdentityId::SourceIdentity);
  CHECK_THROWS_AS(parse_identity("bogus"), ConfigError);
  CHECK_FALSE(applicability(IdentityId::Cor1, ModelCase::Elliptic).applicable);
  CHECK_FALSE(applicability(IdentityId::MacdonaldCorrespondence, ModelCase::Rational).applicable);
  CHECK(applicability(IdentityId::LemmaA, ModelCase::Elliptic).applicable);
}

TEST_CASE("Lemma 1 examples") {
  auto rat = testing::model(ModelCase::Rational);
  std::vector<cplx> Z{0.0, 1.0};
  std::vector<double> m{1.0, 1.0};
  auto r = residual_WH(rat, I, Z, m);
  CHECK(std::abs(r.value) < 1e-15);
  cplx lhs = I * (1.0 - I) + I * (1.0 + I);
  CHECK(std::abs(lhs - s_eval(rat, 2.0 * I)) < 1e-15);
  CHECK(r.scale >= std::abs(lhs));

  for (auto k : testing::kCases) {
    auto mk = testing::model(k);
    std::vector<cplx> Z1{0.4};
    std::vector<double> m1{0.7};
    CHECK(residual_WH(mk, cplx(0.2, 0.5), Z1, m1).value == 0.0);
  }

  auto ell = testing::model(ModelCase::Elliptic);
  std::vector<cplx> Zg{cplx(0.3, 0.05), cplx(-0.5, 0.1)};
  CHECK(residual_WH(ell, cplx(0.1, 0.4), Zg, m).rel() > 1e-3);
  std::vector<double> bal{1.0, -1.0};
  CHECK(residual_WH(ell, cplx(0.1, 0.4), Zg, bal).rel() < 1e-8);
  CHECK_THROWS_AS(residual_WH(rat, 1.0, Z, m), DomainError);
}

TEST_CASE("Theorem 1 examples") {
  for (auto k : testing::kCases) {
    auto mk = testing::model(k);
    std::vector<cplx> X{0.2};
    std::vector<L> l{L::MinusInvGM0};
    for (int sign : {1, -1}) CHECK(std::abs(residual_source_identity(sign, mk, X, l).value) < 1e-14);
  }
  auto rat = testing::model(ModelCase::Rational);
  std::vector<L> pp{L::PlusM0, L::PlusM0};
  auto X = points(2);
  for (int sign : {1, -1}) CHECK(residual_source_identity(sign, rat, X, pp).rel() < 1e-10);

  auto ell = testing::model(ModelCase::Elliptic);
  std::vector<L> pm{L::PlusM0, L::MinusM0};
  for (int sign : {1, -1}) {
    CHECK(residual_source_identity(sign, ell, X, pm).rel() < 1e-8);
    CHECK(residual_source_identity(sign, ell, X, pp).rel() > 1e-3);
  }
}

TEST_CASE("corollary examples") {
  auto rat = testing::model(ModelCase::Rational);
  double g = rat.params.g, b = rat.params.beta;
  auto X = points(2);
  for (int sign : {1, -1}) CHECK(residual_corollary(1, sign, rat, {2, 0, 0, 0}, X).rel() < 1e-10);
  ConfigFunction psi{2, [&](std::span<const cplx> Y) { return build_PsiN(Y, g, b, rat); }};
  CHECK(rel_err(apply(make_S_standard(1, 2, rat), psi, X) / psi(X), 2.0) < 1e-10);

  std::vector<cplx> xy{cplx(0.4, 0.03), cplx(-0.35, -0.02)};
  for (int sign : {1, -1})
    CHECK(residual_corollary(2, sign, rat, {1, 0, 1, 0}, xy, cplx(0.17, 0.05)).rel() < 1e-10);

  for (auto k : {ModelCase::Rational, ModelCase::Trigonometric, ModelCase::Hyperbolic}) {
    auto mk = testing::model(k);
    auto Y = points(4, 1.0, 0.6);
    for (int sign : {1, -1}) {
      auto c2 = residual_corollary(2, sign, mk, {2, 0, 2, 0}, Y);
      auto c5 = residual_corollary(5, sign, mk, {2, 0, 2, 0}, Y);
      CHECK(std::abs(c2.value - c5.value) <= 1e-13 * c2.scale);
      CHECK(c5.rel() < 1e-8);
    }
  }
  CHECK_THROWS_AS(residual_corollary(6, 1, rat, {1, 0, 0, 0}, points(1)), ConfigError);
  CHECK_THROWS_AS(residual_corollary(1, 1, rat, {2, 0, 0, 0}, points(3)), ConfigError);
}

TEST_CASE("printed x~/y~ factor violates the most general identity") {
  auto rat = testing::model(ModelCase::Rational);
  auto Y = points(4, 1.0, 0.6);
  for (int sign : {1, -1}) {
    CHECK(residual_corollary(5, sign, rat, {1, 1, 1, 1}, Y).rel() < 1e-8);
    CHECK(residual_corollary(5, sign, rat, {1, 1, 1, 1}, Y, 0.0, {}, true).rel() > 1e-3);
  }
}

TEST_CASE("Lemma 2") {
  auto rat = testing::model(ModelCase::Rational);
  for (auto w : {Lemma2Branch::Upper, Lemma2Branch::Lower}) {
    CHECK(std::abs(residual_lemma2(rat, 0.3, 0.7, 0.5, w).value) < 1e-12);
    CHECK(std::abs(residual_lemma2(rat, 0.0, 0.7, 0.5, w).value) == 0.0);
    CHECK(std::abs(residual_lemma2(rat, 0.3, -0.7, 0.5, w).value) < 1e-12);
  }
  for (auto k : testing::kCases) {
    auto mk = testing::model(k);
    for (auto w : {Lemma2Branch::Upper, Lemma2Branch::Lower})
      for (cplx al : {cplx(0.6, 0.0), cplx(-0.45, 0.05)})
        CHECK(residual_lemma2(mk, cplx(0.25, 0.02), al, cplx(0.4, 0.1), w).rel() < 1e-9);
  }
}

TEST_CASE("non-relativistic checks") {
  ModelParams p;
  auto rep = check_nonrel(NonRelCheck::Constancy, ModelCase::Rational, p, {1.0, 1.0}, 10);
  CHECK(rep.passed);
  CHECK(std::abs(constant(rep, "energy_re")) < 1e-9);
  CHECK(std::abs(constant(rep, "energy_im")) < 1e-9);
  CHECK(constant(rep, "spread") < 1e-9);

  auto pair = check_nonrel(NonRelCheck::Constancy, ModelCase::Trigonometric, p, {0.8, -0.8}, 10);
  CHECK(pair.passed);
  CHECK(constant(pair, "spread") < 1e-9);

  auto lim = check_nonrel(NonRelCheck::Limit, ModelCase::Rational, p, {1.0, 1.0}, 4);
  CHECK(lim.passed);
  CHECK(constant(lim, "order_min") >= 1.0);

  auto rat = testing::model(ModelCase::Rational);
  std::vector<cplx> X{cplx(0.6, 0.02), cplx(-0.4, 0.03)};
  std::vector<cplx> c{cplx(0.3, 0.1), cplx(-0.2, 0.05)};
  std::vector<double> betas{0.1, 0.05, 0.025};
  auto dev = nonrel_limit_deviations(rat, X, c, 0.1, betas);
  REQUIRE(dev.size() == 3);
  CHECK(dev[1] < dev[0]);
  CHECK(dev[2] < dev[1]);
}

TEST_CASE("suites") {
  NumericsConfig num;
  CHECK(run_suite({}, num).empty());

  IdentityCase item;
  item.id = IdentityId::SourceIdentity;
  item.kase = ModelCase::Trigonometric;
  item.label_sets = {{L::PlusM0, L::MinusInvGM0, L::PlusM0}};
  item.samples = 5;
  auto a = run_suite({item}, num, 1);
  auto b = run_suite({item}, num, 1);
  REQUIRE(a.size() == 1);
  CHECK(a[0].passed);
  REQUIRE(a[0].samples.size() == b[0].samples.size());
  for (std::size_t i = 0; i < a[0].samples.size(); ++i) {
    CHECK(a[0].samples[i].digest == b[0].samples[i].digest);
    CHECK(a[0].samples[i].abs_residual == b[0].samples[i].abs_residual);
  }

  item.id = IdentityId::Cor1;
  item.kase = ModelCase::Elliptic;
  item.shapes = {{2, 0, 0, 0}};
  auto skipped = run_case(item, num);
  CHECK(skipped.skipped);
  CHECK_FALSE(skipped.reason.empty());

  item.id = IdentityId::Cor1;
  item.kase = ModelCase::Rational;
  auto eig = run_case(item, num);
  CHECK(eig.passed);
  CHECK(std::abs(constant(eig, "eigenvalue_re") - 2.0) < 1e-10);
}

TEST_CASE("default suite covers every applicable pair") {
  auto suite = default_suite();
  for (IdentityId id : all_identities())
    for (auto k : testing::kCases) {
      bool present = std::any_of(suite.begin(), suite.end(),
                                 [&](const IdentityCase& c) { return c.id == id && c.kase == k; });
      bool expected = applicability(id, k).applicable || id == IdentityId::Cor1 || id == IdentityId::Cor3;
      if (expected) CHECK_MESSAGE(present, to_string(id) << " " << to_string(k));
    }
  CHECK(label_multisets(1).size() == 4);
  CHECK(label_multisets(2).size() == 10);
  CHECK(label_multisets(4).size() == 35);
  ModelParams p;
  for (const auto& [labels, g] : elliptic_balanced_sets()) {
    p.g = g;
    CHECK(std::abs(balancing_deficit(labels, p)) < 1e-15);
  }
  for (const auto& [labels, g] : elliptic_unbalanced_sets()) {
    p.g = g;
    CHECK(std::abs(balancing_deficit(labels, p)) > 0.1);
  }
}

}
