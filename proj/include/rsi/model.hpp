#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rsi {

using cplx = std::complex<double>;
inline constexpr cplx I{0.0, 1.0};

enum class ModelCase { Rational, Trigonometric, Hyperbolic, Elliptic };

std::string_view to_string(ModelCase c);
/// Accepts "rational", "trig"/"trigonometric", "hyperbolic", "elliptic".
ModelCase parse_case(std::string_view name);

/// Coupling g, relativistic deformation beta, period scales r and a, and the
/// base m0 of the mass spectrum {m0, -m0, -1/(g m0), 1/(g m0)}.
struct ModelParams {
  double g = 2.0;
  double beta = 0.3;
  double r = 1.0;
  double a = 1.5;
  double m0 = 1.0;

  /// Throws ConfigError when an invariant needed by `kase` is violated.
  void validate(ModelCase kase) const;

  /// True iff g m0^2 = +-1, where two spectrum values coincide.
  bool degenerate_spectrum() const;
};

struct NumericsConfig {
  int truncation_L = 512;      // cap on factors per infinite product
  double quad_abs_tol = 1e-14; // tail bound for products, series and quadrature
  double fd_step = 1e-4;
  double residual_tol = 1e-8;
  std::uint64_t rng_seed = 20240611;

  void validate() const;
};

/// Evaluation context shared by every special function: the case, its
/// parameters and the numerical settings.
struct Model {
  ModelCase kase = ModelCase::Rational;
  ModelParams params{};
  NumericsConfig numerics{};

  Model() = default;
  Model(ModelCase c, ModelParams p, NumericsConfig n = {});

  /// Copy with (g, beta) replaced; used for the reciprocal-coupling groups.
  Model with_coupling(double g, double beta) const;
};

// ---------------------------------------------------------------------------
// Mass labels

enum class MassLabel { PlusM0, MinusM0, MinusInvGM0, PlusInvGM0 };

inline constexpr MassLabel kAllLabels[] = {MassLabel::PlusM0, MassLabel::MinusM0,
                                           MassLabel::MinusInvGM0, MassLabel::PlusInvGM0};

std::string_view to_string(MassLabel l);

/// How m' relates to m inside the spectrum.
enum class LabelRelation { Same, Negated, Inverse, NegatedInverse };

double mass_value(MassLabel label, const ModelParams& p);

/// Symbolic relation of `mprime` to `m`: m'=m, m'=-m, m'=1/(g m), m'=-1/(g m).
LabelRelation relation(MassLabel m, MassLabel mprime);

enum class SpectrumMap { NegateM0, InvertGM0 };

/// Image of a label under m0 -> -m0 or m0 -> 1/(g m0). Both maps are involutions.
MassLabel lambda_symmetry(MassLabel label, SpectrumMap which);

// ---------------------------------------------------------------------------
// Configurations

struct ParticleConfig {
  std::vector<cplx> positions;
  std::vector<MassLabel> labels;

  ParticleConfig() = default;
  ParticleConfig(std::vector<cplx> x, std::vector<MassLabel> m);

  std::size_t size() const { return positions.size(); }
  /// Smallest |X_J - X_K| over pairs; +inf for fewer than two entries.
  double min_separation() const;
  /// Throws DomainError if two positions coincide or are closer than `delta`.
  void require_separated(double delta = 0.0) const;
};

/// Sum of the numeric masses; zero iff the elliptic balancing condition holds.
double balancing_deficit(const ParticleConfig& config, const ModelParams& p);
double balancing_deficit(std::span<const MassLabel> labels, const ModelParams& p);

// ---------------------------------------------------------------------------
// Offsets

/// 0 when m' in {m, 1/(g m)}; beta/(2m) + g beta m / 2 when m' in {-m, -1/(g m)}.
/// The relation is detected numerically (relative tolerance 1e-12).
double xi_offset(double m, double mprime, const ModelParams& p);
double xi_offset(MassLabel m, MassLabel mprime, const ModelParams& p);

/// -+(i g^2 beta / 4)((m0^2 + 1/(m0 g)^2 + 1/g) m - m^3); `sign` is +1 or -1.
cplx xi_pm(int sign, double m, const ModelParams& p);

}  // namespace rsi
