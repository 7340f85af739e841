#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rsi/model.hpp"
#include "rsi/operators.hpp"
#include "rsi/wavefun.hpp"

namespace rsi {

enum class IdentityId {
  WH,
  SourceIdentity,
  Cor1,
  Cor2,
  Cor3,
  Cor4,
  Cor5,
  Lemma2,
  LemmaA,
  MacdonaldKernel,
  MacdonaldMinusKernel,
  NonRelConstancy,
  NonRelElliptic_dA,
  NonRelLimit,
  GammaFunctional,
  AltFormEquivalence,
  Gauge,
  MacdonaldCorrespondence,
};

/// Command-line name, e.g. "source", "cor5", "lemma-a".
std::string_view to_string(IdentityId id);
/// Throws ConfigError for unknown names.
IdentityId parse_identity(std::string_view name);
std::span<const IdentityId> all_identities();

/// Whether `id` can run in `kase`, and the precondition it carries there.
struct Applicability {
  bool applicable = true;
  std::string requirement;
};
Applicability applicability(IdentityId id, ModelCase kase);

/// Group sizes (N, N~, M, M~) of the kernel identities.
struct Sizes {
  int N = 0, Ntilde = 0, M = 0, Mtilde = 0;
  int total() const { return N + Ntilde + M + Mtilde; }
};

struct IdentityCase {
  IdentityId id = IdentityId::SourceIdentity;
  ModelCase kase = ModelCase::Rational;
  int sign = 1;  // +1, -1, or 0 for sign-free identities
  ModelParams params{};
  std::vector<std::vector<MassLabel>> label_sets;  // cycled over samples
  std::vector<Sizes> shapes;                       // cycled over samples
  std::vector<double> masses;                      // empty: random
  int mass_count = 2;                              // used when masses are random
  bool balanced_masses = false;                    // random masses with zero sum
  cplx v = 0.0;
  int samples = 20;
  bool expect_fail = false;
  double tolerance = 1e-8;
  bool random_g = false;
  bool random_beta = true;
  bool random_a = true;
  int truncation_L = 0;  // 0: suite numerics
  std::optional<double> expected_constant;
  std::string note;      // free text, e.g. why a sample choice was made

  /// Short human-readable description of labels, sizes or masses.
  std::string describe() const;
};

struct SampleResult {
  std::uint64_t digest = 0;
  double abs_residual = 0.0;
  double scale = 1.0;
  double rel() const { return abs_residual / scale; }
};

struct ResidualReport {
  IdentityCase identity;
  std::vector<SampleResult> samples;
  double max_rel_residual = 0.0;
  bool passed = false;
  bool skipped = false;
  std::string reason;
  double runtime_ms = 0.0;
  int rejected = 0;
  std::vector<std::pair<std::string, double>> measured_constants;
};

/// Residual of one identity at one sample: value and the magnitude it is
/// measured against.
struct Residual {
  cplx value = 0.0;
  double scale = 1.0;
  double rel() const;
};

/// Threshold above which a sample counts as violating an identity in a
/// negative test, and the fraction of samples that must do so.
inline constexpr double kNegativeThreshold = 1e-3;
inline constexpr double kNegativeFraction = 0.9;

// ---------------------------------------------------------------------------
// Residuals at a single point

/// sum_J s(gamma m_J) prod_{K!=J} s(Z_J-Z_K+gamma m_K)/s(Z_J-Z_K) - s(gamma sum m).
Residual residual_WH(const Model& model, cplx gamma, std::span<const cplx> Z,
                     std::span<const double> masses);

/// (S^{sign} Phi)(X) - [s(i g beta sum m)/(i g beta s'(0))] Phi(X).
Residual residual_source_identity(int sign, const Model& model, std::span<const cplx> X,
                                  std::span<const MassLabel> labels,
                                  const ApplyOptions& opts = {});

/// Corollary `which` (1..5). Coordinates are ordered x, x~, y, y~.
Residual residual_corollary(int which, int sign, const Model& model, const Sizes& sizes,
                            std::span<const cplx> X, cplx v = 0.0,
                            const ApplyOptions& opts = {}, bool printed_cor5_factor = false);

enum class Lemma2Branch { Upper, Lower };

/// F(x-+i alpha/2)/F(x+-i alpha/2) - s(x-+iA)/s(x+-iA), F(x) = G(x+iA)/G(x-iA).
Residual residual_lemma2(const Model& model, cplx A, cplx alpha, cplx x, Lemma2Branch which);

/// G(x+i alpha/2)/G(x-i alpha/2) - c s(x).
Residual residual_gamma_functional(const Model& model, cplx x, cplx alpha);

/// Term-by-term agreement of Phi^-1 S Phi with the conjugated coefficients.
Residual residual_lemmaA(int sign, const Model& model, std::span<const cplx> X,
                         std::span<const MassLabel> labels, const ApplyOptions& opts = {});

/// Term-by-term agreement of the alternative and the generalized operator on Phi.
Residual residual_alt_form(int sign, const Model& model, std::span<const cplx> X,
                           std::span<const MassLabel> labels, const ApplyOptions& opts = {});

/// Gauged deformed operator against the normalized conjugation of S by Psi.
Residual residual_gauge(int sign, const Model& model, int N, int Nt, std::span<const cplx> X,
                        const ApplyOptions& opts = {});

/// A^{sign} in x against kappa M^{sign} in z on a z-periodic test function.
Residual residual_macdonald_correspondence(int sign, const Model& model, int N, int Nt,
                                           std::span<const cplx> X,
                                           std::span<const cplx> coeffs);

/// (kappa M_{N,N~}(x) - kappa M_{M,M~}(y) - c) K with the gauged kernel K.
Residual residual_macdonald_kernel(int sign, const Model& model, const Sizes& sizes,
                                   std::span<const cplx> X, cplx v = 0.0);

// ---------------------------------------------------------------------------
// Non-relativistic checks

enum class NonRelCheck { Constancy, Elliptic_dA, Limit };

/// (H Phi_nr)/Phi_nr at X.
cplx nonrel_energy(const Model& model, std::span<const double> masses, std::span<const cplx> X);

/// d/da log Phi_nr at X by central differences in a (elliptic case).
cplx nonrel_dlog_da(const Model& model, std::span<const double> masses, std::span<const cplx> X,
                    double step = 1e-4);

/// Deviations |(S+ + S- - 2N) f/beta^2 + (N g^2 s'''(0)/3) f - H_N f| for each
/// beta, where f is the smooth test function exp(sum c_j x_j + d sum_{j<k}
/// (x_j - x_k)^2).
std::vector<double> nonrel_limit_deviations(const Model& model, std::span<const cplx> X,
                                            std::span<const cplx> c, cplx d,
                                            std::span<const double> betas);

/// Runs a non-relativistic check as a one-entry suite.
ResidualReport check_nonrel(NonRelCheck kind, ModelCase kase, const ModelParams& params,
                            std::vector<double> masses, int samples,
                            const NumericsConfig& numerics = {});

// ---------------------------------------------------------------------------
// Suites

/// Evaluates one entry. Never throws for numerical failures; those become
/// rejected samples or a failed report.
ResidualReport run_case(const IdentityCase& item, const NumericsConfig& numerics);

/// Evaluates entries concurrently (up to `threads`, 0 = VERIFY_THREADS or the
/// number of cores); results keep suite order.
std::vector<ResidualReport> run_suite(const std::vector<IdentityCase>& suite,
                                      const NumericsConfig& numerics, unsigned threads = 0);

/// Thread count from VERIFY_THREADS, capped by the number of cores.
unsigned default_thread_count();

/// Every mass-label multiset of the given size, in lexicographic order.
std::vector<std::vector<MassLabel>> label_multisets(int size);

/// Balanced label multisets of the elliptic suite as (labels, g) pairs.
std::vector<std::pair<std::vector<MassLabel>, double>> elliptic_balanced_sets();
std::vector<std::pair<std::vector<MassLabel>, double>> elliptic_unbalanced_sets();

/// The full acceptance suite: every identity in every applicable case.
std::vector<IdentityCase> default_suite();

}  // namespace rsi
