#include "rsi/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "rsi/errors.hpp"

namespace rsi {

std::string_view to_string(ModelCase c) {
  switch (c) {
    case ModelCase::Rational: return "rational";
    case ModelCase::Trigonometric: return "trig";
    case ModelCase::Hyperbolic: return "hyperbolic";
    case ModelCase::Elliptic: return "elliptic";
  }
  return "?";
}

ModelCase parse_case(std::string_view name) {
  if (name == "rational") return ModelCase::Rational;
  if (name == "trig" || name == "trigonometric") return ModelCase::Trigonometric;
  if (name == "hyperbolic") return ModelCase::Hyperbolic;
  if (name == "elliptic") return ModelCase::Elliptic;
  throw ConfigError("unknown case '" + std::string(name) + "'");
}

void ModelParams::validate(ModelCase kase) const {
  if (!std::isfinite(g) || g == 0.0) throw ConfigError("g must be a nonzero real");
  if (!(beta > 0.0) || !std::isfinite(beta)) throw ConfigError("beta must be > 0");
  if (!std::isfinite(m0) || m0 == 0.0) throw ConfigError("m0 must be nonzero");
  bool need_r = kase == ModelCase::Trigonometric || kase == ModelCase::Elliptic;
  bool need_a = kase == ModelCase::Hyperbolic || kase == ModelCase::Elliptic;
  if (need_r && !(r > 0.0 && std::isfinite(r))) throw ConfigError("r must be > 0");
  if (need_a && !(a > 0.0 && std::isfinite(a))) throw ConfigError("a must be > 0");
}

bool ModelParams::degenerate_spectrum() const {
  double t = g * m0 * m0;
  return std::abs(std::abs(t) - 1.0) <= 1e-12;
}

void NumericsConfig::validate() const {
  if (truncation_L < 1) throw ConfigError("truncation_L must be >= 1");
  if (!(quad_abs_tol > 0.0)) throw ConfigError("quad_abs_tol must be > 0");
  if (!(fd_step > 0.0)) throw ConfigError("fd_step must be > 0");
  if (!(residual_tol > 0.0)) throw ConfigError("residual_tol must be > 0");
}

Model::Model(ModelCase c, ModelParams p, NumericsConfig n) : kase(c), params(p), numerics(n) {
  params.validate(kase);
  numerics.validate();
}

Model Model::with_coupling(double g, double beta) const {
  Model m = *this;
  m.params.g = g;
  m.params.beta = beta;
  return m;
}

std::string_view to_string(MassLabel l) {
  switch (l) {
    case MassLabel::PlusM0: return "+m0";
    case MassLabel::MinusM0: return "-m0";
    case MassLabel::MinusInvGM0: return "-1/gm0";
    case MassLabel::PlusInvGM0: return "+1/gm0";
  }
  return "?";
}

double mass_value(MassLabel label, const ModelParams& p) {
  switch (label) {
    case MassLabel::PlusM0: return p.m0;
    case MassLabel::MinusM0: return -p.m0;
    case MassLabel::MinusInvGM0: return -1.0 / (p.g * p.m0);
    case MassLabel::PlusInvGM0: return 1.0 / (p.g * p.m0);
  }
  return 0.0;
}

MassLabel lambda_symmetry(MassLabel label, SpectrumMap which) {
  if (which == SpectrumMap::NegateM0) {
    switch (label) {
      case MassLabel::PlusM0: return MassLabel::MinusM0;
      case MassLabel::MinusM0: return MassLabel::PlusM0;
      case MassLabel::MinusInvGM0: return MassLabel::PlusInvGM0;
      case MassLabel::PlusInvGM0: return MassLabel::MinusInvGM0;
    }
  }
  switch (label) {
    case MassLabel::PlusM0: return MassLabel::PlusInvGM0;
    case MassLabel::PlusInvGM0: return MassLabel::PlusM0;
    case MassLabel::MinusM0: return MassLabel::MinusInvGM0;
    case MassLabel::MinusInvGM0: return MassLabel::MinusM0;
  }
  return label;
}

LabelRelation relation(MassLabel m, MassLabel mprime) {
  if (m == mprime) return LabelRelation::Same;
  if (lambda_symmetry(m, SpectrumMap::NegateM0) == mprime) return LabelRelation::Negated;
  if (lambda_symmetry(m, SpectrumMap::InvertGM0) == mprime) return LabelRelation::Inverse;
  return LabelRelation::NegatedInverse;
}

ParticleConfig::ParticleConfig(std::vector<cplx> x, std::vector<MassLabel> m)
    : positions(std::move(x)), labels(std::move(m)) {
  if (positions.size() != labels.size())
    throw ConfigError("positions and labels differ in length");
}

double ParticleConfig::min_separation() const {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < positions.size(); ++j)
    for (std::size_t k = j + 1; k < positions.size(); ++k)
      best = std::min(best, std::abs(positions[j] - positions[k]));
  return best;
}

void ParticleConfig::require_separated(double delta) const {
  for (std::size_t j = 0; j < positions.size(); ++j)
    for (std::size_t k = j + 1; k < positions.size(); ++k) {
      double d = std::abs(positions[j] - positions[k]);
      if (d == 0.0 || d < delta)
        throw DomainError("positions " + std::to_string(j) + " and " + std::to_string(k) +
                          " are not separated");
    }
}

double balancing_deficit(std::span<const MassLabel> labels, const ModelParams& p) {
  double sum = 0.0;
  for (MassLabel l : labels) sum += mass_value(l, p);
  return sum;
}

double balancing_deficit(const ParticleConfig& config, const ModelParams& p) {
  return balancing_deficit(std::span<const MassLabel>(config.labels), p);
}

double xi_offset(MassLabel m, MassLabel mprime, const ModelParams& p) {
  switch (relation(m, mprime)) {
    case LabelRelation::Same:
    case LabelRelation::Inverse: return 0.0;
    default: {
      double mv = mass_value(m, p);
      return p.beta / (2.0 * mv) + p.g * p.beta * mv / 2.0;
    }
  }
}

double xi_offset(double m, double mprime, const ModelParams& p) {
  auto near = [](double u, double v) {
    return std::abs(u - v) <= 1e-12 * std::max(1.0, std::max(std::abs(u), std::abs(v)));
  };
  if (m == 0.0) throw DomainError("xi_offset: m must be nonzero");
  double inv = 1.0 / (p.g * m);
  if (near(mprime, m) || near(mprime, inv)) return 0.0;
  if (near(mprime, -m) || near(mprime, -inv)) return p.beta / (2.0 * m) + p.g * p.beta * m / 2.0;
  throw DomainError("xi_offset: masses are not related by the spectrum maps");
}

cplx xi_pm(int sign, double m, const ModelParams& p) {
  double g = p.g, m0 = p.m0;
  double poly = (m0 * m0 + 1.0 / (m0 * g * m0 * g) + 1.0 / g) * m - m * m * m;
  double s = sign >= 0 ? -1.0 : 1.0;
  return cplx(0.0, s * g * g * p.beta / 4.0 * poly);
}

}  // namespace rsi
