#include <doctest.h>

#include "helpers.hpp"
#include "rsi/errors.hpp"
#include "rsi/operators.hpp"
#include "rsi/specfun.hpp"
#include "rsi/wavefun.hpp"

using namespace rsi;
using testing::rel_err;
using L = MassLabel;

namespace {

ConfigFunction test_function(std::size_t n, cplx c0 = cplx(0.3, 0.1)) {
  return ConfigFunction{n, [c0](std::span<const cplx> X) {
                          cplx acc = 0.0;
                          for (std::size_t j = 0; j < X.size(); ++j)
                            acc += c0 * static_cast<double>(j + 1) * X[j] + 0.1 * X[j] * X[j];
                          return std::exp(acc);
                        }};
}

std::vector<cplx> sample_X(std::size_t n) {
  std::vector<cplx> X;
  for (std::size_t j = 0; j < n; ++j)
    X.push_back(cplx(0.9 - 0.65 * static_cast<double>(j), 0.03 * static_cast<double>(j % 2 ? -1 : 1)));
  return X;
}

void check_same_coefficients(const DifferenceOperator& a, const DifferenceOperator& b,
                             std::span<const cplx> X, double tol) {
  REQUIRE(a.terms.size() == b.terms.size());
  for (std::size_t i = 0; i < a.terms.size(); ++i) {
    CHECK(a.terms[i].shift.index == b.terms[i].shift.index);
    CHECK(std::abs(a.terms[i].shift.displacement - b.terms[i].shift.displacement) < 1e-15);
    CHECK(rel_err(term_coefficient(a.terms[i], X), term_coefficient(b.terms[i], X)) < tol);
  }
}

}  // namespace

TEST_SUITE("operators") {

TEST_CASE("single particle") {
  for (auto k : testing::kCases) {
    auto m = testing::model(k);
    double b = m.params.beta;
    auto f = test_function(1);
    std::vector<cplx> X{cplx(0.4, 0.05)};
    for (int sign : {1, -1}) {
      auto op = make_S_standard(sign, 1, m);
      REQUIRE(op.terms.size() == 1);
      std::vector<cplx> Xs{X[0] - static_cast<double>(sign) * I * b};
      CHECK(rel_err(apply(op, f, X), S_prefactor(1.0, m) * f(Xs)) < 1e-14);
      auto gen = make_S_general(sign, {L::PlusM0}, m);
      CHECK(term_coefficient(gen.terms[0], X) == S_prefactor(1.0, m));
      auto A = make_A(sign, 1, m);
      CHECK(rel_err(apply(A, f, X), f(Xs)) < 1e-15);
    }
  }
  auto rat = testing::model(ModelCase::Rational);
  std::vector<cplx> X{0.3};
  for (int sign : {1, -1}) CHECK(std::abs(apply(make_S_standard(sign, 1, rat), ConfigFunction{}, X) - 1.0) < 1e-15);
}

TEST_CASE("linearity") {
  auto m = testing::model(ModelCase::Trigonometric);
  auto op = make_S_general(1, {L::PlusM0, L::MinusInvGM0, L::MinusM0}, m);
  auto f = test_function(3), h = test_function(3, cplx(-0.2, 0.05));
  cplx a(0.7, -0.2), b(-1.1, 0.4);
  ConfigFunction comb{3, [&](std::span<const cplx> X) { return a * f(X) + b * h(X); }};
  auto X = sample_X(3);
  cplx lhs = apply(op, comb, X), rhs = a * apply(op, f, X) + b * apply(op, h, X);
  CHECK(std::abs(lhs - rhs) < 1e-13 * std::abs(rhs));
}

TEST_CASE("general operator specializations") {
  for (auto k : testing::kCases) {
    auto m = testing::model(k);
    auto X = sample_X(3);
    for (int sign : {1, -1}) {
      check_same_coefficients(make_S_general(sign, {L::PlusM0, L::PlusM0, L::PlusM0}, m),
                              make_S_standard(sign, 3, m), X, 1e-14);
      check_same_coefficients(make_S_general(sign, {L::PlusM0, L::PlusM0, L::MinusInvGM0}, m),
                              make_S_deformed(sign, 2, 1, m), X, 1e-13);
      check_same_coefficients(make_S_deformed(sign, 3, 0, m), make_S_standard(sign, 3, m), X, 1e-15);
    }
  }
}

TEST_CASE("deformed operator without x coordinates") {
  auto m = testing::model(ModelCase::Hyperbolic);
  double g = m.params.g, b = m.params.beta;
  auto op = make_S_deformed(1, 0, 2, m);
  REQUIRE(op.terms.size() == 2);
  cplx want = -s_eval(m, I * b) / (I * g * b * s_eval(m, 0.0, 1));
  for (const auto& t : op.terms) {
    CHECK(rel_err(t.prefactor, want) < 1e-15);
    CHECK(std::abs(t.shift.displacement - I * g * b) < 1e-15);
  }
}

TEST_CASE("cross factors at g = 1") {
  for (auto k : testing::kCases) {
    auto m = testing::model(k, 1.0, 0.3);
    double b = m.params.beta;
    std::vector<cplx> X{cplx(0.6, 0.04), cplx(-0.3, -0.02)};
    for (int sign : {1, -1}) {
      double sg = sign;
      auto op = make_S_deformed(sign, 1, 1, m);
      cplx d = X[0] - X[1], ds = d - sg * I * b;
      cplx want = op.terms[0].prefactor * std::sqrt(s_eval(m, d) / s_eval(m, d - sg * I * b)) *
                  std::sqrt(s_eval(m, ds) / s_eval(m, ds + sg * I * b));
      CHECK(rel_err(term_coefficient(op.terms[0], X, {BranchPolicy::PrincipalSqrt}), want) < 1e-13);
    }
  }
}

TEST_CASE("gauged operators") {
  for (auto k : testing::kCases) {
    auto m = testing::model(k);
    auto X = sample_X(3);
    for (int sign : {1, -1}) check_same_coefficients(make_A_deformed(sign, 3, 0, m), make_A(sign, 3, m), X, 1e-15);
  }
}

TEST_CASE("gauge identity") {
  for (auto k : testing::kCases) {
    auto m = testing::model(k);
    double g = m.params.g, b = m.params.beta;
    cplx norm = I * g * b * s_eval(m, 0.0, 1) / s_eval(m, I * g * b);
    for (int N : {2, 3}) {
      auto X = sample_X(static_cast<std::size_t>(N));
      auto h = test_function(static_cast<std::size_t>(N));
      ConfigFunction psi_h{h.arity, [&](std::span<const cplx> Y) {
                             return build_PsiN(Y, g, b, m) * h(Y);
                           }};
      for (int sign : {1, -1}) {
        cplx lhs = apply(make_A(sign, N, m), h, X);
        cplx rhs = norm * apply(make_S_standard(sign, N, m), psi_h, X) / build_PsiN(X, g, b, m);
        CHECK(rel_err(lhs, rhs) < 1e-10);
      }
    }
  }
}

TEST_CASE("alternative form and conjugated coefficients") {
  for (auto k : testing::kCases) {
    auto m = testing::model(k);
    auto X = sample_X(3);
    std::vector<L> labels{L::PlusM0, L::MinusM0, L::PlusInvGM0};
    for (int sign : {1, -1}) {
      check_same_coefficients(make_S_alternative(sign, labels, m), make_S_general(sign, labels, m), X, 1e-12);
      auto one = make_conjugated_coefficients(sign, {L::PlusM0}, m);
      REQUIRE(one.terms.size() == 1);
      std::vector<cplx> X1{0.2};
      CHECK(term_coefficient(one.terms[0], X1) == S_prefactor(1.0, m));
    }
  }
  auto m = testing::model(ModelCase::Trigonometric);
  auto X = sample_X(2);
  for (int sign : {1, -1}) {
    double sg = sign;
    double g = m.params.g, b = m.params.beta;
    auto op = make_conjugated_coefficients(sign, {L::PlusM0, L::PlusM0}, m);
    cplx d = X[0] - X[1];
    cplx want = S_prefactor(1.0, m) * s_eval(m, d - sg * I * g * b) / s_eval(m, d);
    CHECK(rel_err(term_coefficient(op.terms[0], X), want) < 1e-14);
  }
}

TEST_CASE("Macdonald operator") {
  auto m = testing::model(ModelCase::Trigonometric);
  auto [q, t] = macdonald_params(m);
  auto f = test_function(1);
  std::vector<cplx> Z{cplx(0.4, 0.2)};
  std::vector<cplx> qZ{q * Z[0]};
  CHECK(rel_err(apply(make_macdonald(1, 1, 0, m), f, Z), f(qZ)) < 1e-15);

  auto op = make_macdonald(1, 1, 2, m);
  CHECK(rel_err(op.terms[1].prefactor, (1.0 - q) / (1.0 - t)) < 1e-15);
  CHECK(rel_err(op.terms[2].prefactor, (1.0 - q) / (1.0 - t)) < 1e-15);
  auto opm = make_macdonald(-1, 1, 2, m);
  CHECK(rel_err(opm.terms[1].prefactor, t * (1.0 - q) / (q * (1.0 - t))) < 1e-15);

  CHECK_THROWS_AS(make_macdonald(1, 2, 0, testing::model(ModelCase::Rational)), ConfigError);
  CHECK_THROWS_AS(make_macdonald(1, 2, 0, testing::model(ModelCase::Elliptic)), ConfigError);
}

TEST_CASE("Macdonald correspondence") {
  auto m = testing::model(ModelCase::Trigonometric);
  double r = m.params.r;
  for (int N : {1, 2})
    for (int Nt : {0, 1, 2}) {
      auto n = static_cast<std::size_t>(N + Nt);
      auto X = sample_X(n);
      ConfigFunction fz{n, [](std::span<const cplx> Z) {
                          cplx acc = 0.0;
                          for (std::size_t j = 0; j < Z.size(); ++j) acc += (0.3 + 0.1 * j) * Z[j] + 0.05 * Z[j] * Z[j];
                          return std::exp(acc);
                        }};
      ConfigFunction fx{n, [&](std::span<const cplx> Y) {
                          auto Z = macdonald_coordinates(Y.subspan(0, N), Y.subspan(N), m);
                          return fz(Z);
                        }};
      auto Z = macdonald_coordinates(std::span<const cplx>(X).subspan(0, N), std::span<const cplx>(X).subspan(N), m);
      for (int sign : {1, -1}) {
        cplx lhs = apply(make_A_deformed(sign, N, Nt, m), fx, X);
        cplx rhs = macdonald_gauge_factor(sign, N, Nt, m) * apply(make_macdonald(sign, N, Nt, m), fz, Z);
        CHECK(rel_err(lhs, rhs) < 1e-10);
      }
    }
  (void)r;
}

TEST_CASE("non-relativistic Hamiltonian") {
  auto rat = testing::model(ModelCase::Rational);
  std::vector<double> m1{1.0};
  ConfigFunction sq{1, [](std::span<const cplx> X) { return X[0] * X[0]; }};
  std::vector<cplx> x1{cplx(0.7, 0.1)};
  CHECK(std::abs(apply_H_nonrel(rat, m1, sq, x1) + 2.0) < 1e-7);

  std::vector<double> m2{1.0, 1.0};
  std::vector<cplx> X{cplx(0.8, 0.05), cplx(-0.3, 0.02)};
  auto nr = build_phi_nr(X, m2, rat);
  CHECK(std::abs(apply_H_nonrel_logd(rat, m2, X, nr.dlog, nr.d2log)) < 1e-12);
  ConfigFunction phi{2, [&](std::span<const cplx> Y) { return build_phi_nr(Y, m2, rat).value; }};
  CHECK(std::abs(apply_H_nonrel(rat, m2, phi, X)) < 1e-6 * std::abs(nr.value));

  for (double g : {0.7, 2.0, 2.5})
    for (double mj : {1.0, -0.4, 1.8}) {
      CHECK(nonrel_coupling(mj, -mj, g) == 0.0);
      CHECK(std::abs(nonrel_coupling(mj, 1.0 / (g * mj), g)) < 1e-14);
    }
  auto dm = nonrel_masses(NonRelKind::Deformed, 2, 1, 2.0);
  CHECK(dm == std::vector<double>{1.0, 1.0, -0.5});
}

}
