#pragma once

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>

#include "rsi/model.hpp"

namespace testing {

using rsi::cplx;

inline double rel_err(cplx got, cplx want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

inline rsi::Model model(rsi::ModelCase k, double g = 2.0, double beta = 0.3, double r = 1.0,
                        double a = 1.5) {
  rsi::ModelParams p;
  p.g = g;
  p.beta = beta;
  p.r = r;
  p.a = a;
  return rsi::Model(k, p);
}

inline constexpr rsi::ModelCase kCases[] = {rsi::ModelCase::Rational, rsi::ModelCase::Trigonometric,
                                            rsi::ModelCase::Hyperbolic, rsi::ModelCase::Elliptic};

}  // namespace testing

#define CHECK_CLOSE(got, want, tol) CHECK(testing::rel_err((got), (want)) < (tol))
