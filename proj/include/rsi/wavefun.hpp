#pragma once

#include <span>
#include <vector>

#include "rsi/model.hpp"

namespace rsi {

/// How half-integer powers are resolved.
///  PrincipalSqrt: principal square root at the evaluation point.
///  SquaredPair:   f_pm returns the radicand; callers pair factors themselves.
///  Continued:     principal root at the base point, then continued along
///                 shift paths by difference operators (see operators.hpp).
enum class BranchPolicy { PrincipalSqrt, SquaredPair, Continued };

/// f_+- of the generalized operators; `sign` is +1 or -1.
cplx f_pm(int sign, cplx x, MassLabel m, MassLabel mprime, const Model& model,
          BranchPolicy branch = BranchPolicy::PrincipalSqrt);

/// Pair factor phi(x; m, m') of the eigenfunction.
cplx phi_pair(cplx x, MassLabel m, MassLabel mprime, const Model& model);

/// Fourth branch of phi written with m instead of m0.
cplx phi_pair_mform(cplx x, MassLabel m, const Model& model);

/// Phi(X; m) = prod_{J<K} phi(X_J - X_K; m_J, m_K).
cplx build_Phi(const ParticleConfig& config, const Model& model);
cplx build_Phi(std::span<const cplx> X, std::span<const MassLabel> labels, const Model& model);

enum class PsiVariant { Plain, Reflected };

/// Psi_N(x; g, beta). Reflected uses G^(-)(x; alpha) = G(-x; -alpha) and is
/// evaluated at the given coordinates.
cplx build_PsiN(std::span<const cplx> xs, double g, double beta, const Model& model,
                PsiVariant variant = PsiVariant::Plain);

enum class KernelKind { Phi, PsiN, PsiMinus, FNM, FTilde, PsiDeformed, FDeformed, PhiNonRel, Gauged };

struct KernelSpec {
  KernelKind kind = KernelKind::FNM;
  int N = 0, Ntilde = 0, M = 0, Mtilde = 0;
  cplx v = 0.0;
  /// Use G(x~ - y~ +- i beta/2; g beta) for the x~/y~ factor of F_{N,N~,M,M~}
  /// as printed, instead of the reflected G(.; -g beta).
  bool printed_cor5_factor = false;
};

struct KernelArgs {
  std::vector<cplx> x, xt, y, yt;
};

/// Closed-form kernels with coupling (g, beta) = (model.params.g,
/// model.params.beta) and m0 = 1. The translation v shifts x and x~.
///  PsiN, PsiMinus, Phi, PhiNonRel: use args.x only.
///  FNM:         Psi_N(x) Psi_M(-y) prod G(x-y-igb/2;b)/G(x-y+igb/2;b)
///  FTilde:      Psi_N(x) Psi_M(y;1/g,gb) prod s(x-y)
///  PsiDeformed: Psi_{N,N~}(x, x~)
///  FDeformed:   F_{N,N~,M,M~}(x, x~, y, y~)
///  Gauged:      cross factors of F_{N,N~,M,M~} in x + y, the common kernel of
///               the gauged deformed operators
cplx build_kernel(const KernelSpec& spec, const KernelArgs& args, const Model& model);

/// Psi_{N,N~}(x, x~; g, beta).
cplx build_Psi_deformed(std::span<const cplx> x, std::span<const cplx> xt, const Model& model);

/// Non-relativistic ground state prod_{J<K} s(X_J - X_K)^(m_J m_K g) with
/// its exact log-derivatives.
struct NonRelValue {
  cplx value;
  std::vector<cplx> dlog;   // d/dX_J log Phi_nr
  std::vector<cplx> d2log;  // d^2/dX_J^2 log Phi_nr
};

NonRelValue build_phi_nr(std::span<const cplx> X, std::span<const double> masses,
                         const Model& model);

/// V(x) = -(log s)'' = (s'/s)^2 - s''/s.
cplx potential_V(const Model& model, cplx x);

}  // namespace rsi
