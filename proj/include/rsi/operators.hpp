#pragma once

#include <functional>
#include <span>
#include <vector>

#include "rsi/model.hpp"
#include "rsi/wavefun.hpp"

namespace rsi {

/// Black-box function of a configuration. An empty evaluator means the
/// constant 1 and is skipped during application.
struct ConfigFunction {
  std::size_t arity = 0;
  std::function<cplx(std::span<const cplx>)> eval;

  cplx operator()(std::span<const cplx> X) const { return eval ? eval(X) : cplx(1.0); }
  bool is_unit() const { return !eval; }
};

/// X_J -> X_J + displacement, or X_J -> X_J * displacement when multiplicative.
struct Shift {
  std::size_t index = 0;
  cplx displacement = 0.0;
  bool multiplicative = false;
};

/// prefactor * left(X) * exp(shift) * right(X), i.e.
/// prefactor * left(X) * right(X') * f(X') with X' the shifted point.
struct OperatorTerm {
  cplx prefactor = 1.0;
  ConfigFunction left;
  Shift shift;
  ConfigFunction right;
};

struct DifferenceOperator {
  std::size_t arity = 0;
  std::vector<OperatorTerm> terms;
  cplx constant_term = 0.0;
};

struct ApplyOptions {
  /// Continued: right(X')f(X') is continued from X along the shift path,
  /// choosing at each step the square-root sign that keeps it continuous.
  BranchPolicy branch = BranchPolicy::Continued;
  int continuation_steps = 4;
  int max_bisections = 12;
};

/// Per-term values prefactor*left(X)*right(X')*f(X'), in term order.
std::vector<cplx> apply_terms(const DifferenceOperator& op, const ConfigFunction& f,
                              std::span<const cplx> X, const ApplyOptions& opts = {});

/// Sum of apply_terms plus constant_term * f(X).
cplx apply(const DifferenceOperator& op, const ConfigFunction& f, std::span<const cplx> X,
           const ApplyOptions& opts = {});

/// prefactor*left(X)*right(X') for a single term (f = 1).
cplx term_coefficient(const OperatorTerm& term, std::span<const cplx> X,
                      const ApplyOptions& opts = {});

/// Shifted point X'.
std::vector<cplx> shifted_point(const Shift& shift, std::span<const cplx> X);

// ---------------------------------------------------------------------------
// Composition

/// Operator on `arity` coordinates acting on op's coordinates through
/// index_map (local coordinate i lives at index_map[i]).
DifferenceOperator embed(const DifferenceOperator& op, std::size_t arity,
                         std::vector<std::size_t> index_map);
/// Same operator written in the variables -X.
DifferenceOperator negate_coordinates(const DifferenceOperator& op);
DifferenceOperator scale(const DifferenceOperator& op, cplx factor);
DifferenceOperator sum(const DifferenceOperator& a, const DifferenceOperator& b);
DifferenceOperator add_constant(const DifferenceOperator& op, cplx c);

// ---------------------------------------------------------------------------
// Builders. Coupling (g, beta) comes from model.params; `sign` is +1 or -1.

/// Generalized operator with mass labels.
DifferenceOperator make_S_general(int sign, std::vector<MassLabel> labels, const Model& model,
                                  BranchPolicy branch = BranchPolicy::PrincipalSqrt);
/// Standard operator on N coordinates.
DifferenceOperator make_S_standard(int sign, int N, const Model& model);
/// Deformed operator on (x_1..x_N, x~_1..x~_Nt).
DifferenceOperator make_S_deformed(int sign, int N, int Nt, const Model& model);
/// Generalized operator rewritten with the xi offsets.
DifferenceOperator make_S_alternative(int sign, std::vector<MassLabel> labels, const Model& model);
/// Gauged standard operator (no square roots, unit normalization).
DifferenceOperator make_A(int sign, int N, const Model& model);
DifferenceOperator make_A_deformed(int sign, int N, int Nt, const Model& model);
/// Phi^-1 S Phi written directly as a single s-ratio product per term.
DifferenceOperator make_conjugated_coefficients(int sign, std::vector<MassLabel> labels,
                                                const Model& model);

/// s(i g beta m)/(i g beta s'(0)).
cplx S_prefactor(double m, const Model& model);

// ---------------------------------------------------------------------------
// Macdonald form (trigonometric case)

struct MacdonaldParams {
  double q;  // e^{2 r beta}
  double t;  // e^{-2 r g beta}
};

MacdonaldParams macdonald_params(const Model& model);

/// z_j = e^{2irx_j}/t^{1/2} followed by z~_k = e^{2irx~_k}/q^{1/2}.
std::vector<cplx> macdonald_coordinates(std::span<const cplx> x, std::span<const cplx> xt,
                                        const Model& model);

/// M_{N,N~} (sign +) or M^-_{N,N~} (sign -) acting on functions of (z, z~)
/// with multiplicative shifts.
DifferenceOperator make_macdonald(int sign, int N, int Nt, const Model& model);

/// The same operator acting on functions of (x, x~): coefficients through
/// the coordinate map, shifts x_j -+ i beta and x~_k +- i g beta.
DifferenceOperator make_macdonald_x(int sign, int N, int Nt, const Model& model);

/// kappa with A^+- = kappa M^+-: t^{-+(N-1)/2} q^{-+N~/2}.
double macdonald_gauge_factor(int sign, int N, int Nt, const Model& model);

// ---------------------------------------------------------------------------
// Non-relativistic Hamiltonians

enum class NonRelKind { Standard, General, Deformed };

/// Masses realizing the standard (all 1) and deformed (1.., -1/g..) cases.
std::vector<double> nonrel_masses(NonRelKind kind, int N, int Nt, double g);

/// (m_J + m_K) g (m_J m_K g - 1).
double nonrel_coupling(double mJ, double mK, double g);

/// (H f)(X) = -sum_J (1/m_J) d^2f/dX_J^2 + sum_{J<K} gamma_JK V(X_J-X_K) f
/// with second derivatives by central differences (Richardson once).
cplx apply_H_nonrel(const Model& model, std::span<const double> masses, const ConfigFunction& f,
                    std::span<const cplx> X);

/// (H f)(X)/f(X) from exact log-derivatives of f.
cplx apply_H_nonrel_logd(const Model& model, std::span<const double> masses,
                         std::span<const cplx> X, std::span<const cplx> dlog,
                         std::span<const cplx> d2log);

}  // namespace rsi
