#include "rsi/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <sstream>
#include <thread>

#include "rsi/errors.hpp"
#include "rsi/sampling.hpp"
#include "rsi/specfun.hpp"

namespace rsi {

namespace {

struct IdName {
  IdentityId id;
  std::string_view name;
};

constexpr IdName kIdNames[] = {
    {IdentityId::WH, "wh"},
    {IdentityId::SourceIdentity, "source"},
    {IdentityId::Cor1, "cor1"},
    {IdentityId::Cor2, "cor2"},
    {IdentityId::Cor3, "cor3"},
    {IdentityId::Cor4, "cor4"},
    {IdentityId::Cor5, "cor5"},
    {IdentityId::Lemma2, "lemma2"},
    {IdentityId::LemmaA, "lemma-a"},
    {IdentityId::MacdonaldKernel, "macdonald-kernel"},
    {IdentityId::MacdonaldMinusKernel, "macdonald-minus-kernel"},
    {IdentityId::NonRelConstancy, "nonrel-constancy"},
    {IdentityId::NonRelElliptic_dA, "nonrel-elliptic-da"},
    {IdentityId::NonRelLimit, "nonrel-limit"},
    {IdentityId::GammaFunctional, "gamma-functional"},
    {IdentityId::AltFormEquivalence, "alt-form"},
    {IdentityId::Gauge, "gauge"},
    {IdentityId::MacdonaldCorrespondence, "macdonald-correspondence"},
};

constexpr IdentityId kAllIds[] = {
    IdentityId::WH,
    IdentityId::SourceIdentity,
    IdentityId::Cor1,
    IdentityId::Cor2,
    IdentityId::Cor3,
    IdentityId::Cor4,
    IdentityId::Cor5,
    IdentityId::Lemma2,
    IdentityId::LemmaA,
    IdentityId::MacdonaldKernel,
    IdentityId::MacdonaldMinusKernel,
    IdentityId::NonRelConstancy,
    IdentityId::NonRelElliptic_dA,
    IdentityId::NonRelLimit,
    IdentityId::GammaFunctional,
    IdentityId::AltFormEquivalence,
    IdentityId::Gauge,
    IdentityId::MacdonaldCorrespondence,
};

std::string fmt_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

std::string join_labels(const std::vector<MassLabel>& labels) {
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ',';
    out += to_string(labels[i]);
  }
  return out;
}

cplx checked(cplx num, cplx den) {
  if (den == 0.0) throw PoleError("residual: zero denominator");
  return num / den;
}

Residual operator_residual(const DifferenceOperator& op, const ConfigFunction& f,
                           std::span<const cplx> X, cplx c, const ApplyOptions& opts) {
  auto terms = apply_terms(op, f, X, opts);
  cplx f0 = f(X);
  cplx total = (op.constant_term - c) * f0;
  double mag = 0.0;
  for (cplx t : terms) {
    total += t;
    mag += std::abs(t);
  }
  return {total, std::max({mag, std::abs(c * f0), std::abs(f0)})};
}

// Worst relative mismatch between two term lists.
Residual termwise(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  if (a.size() != b.size()) throw ConfigError("termwise comparison: term counts differ");
  Residual worst{0.0, 1.0};
  double worst_rel = -1.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    double scale = std::max({std::abs(a[i]), std::abs(b[i]), 1e-300});
    double rel = std::abs(a[i] - b[i]) / scale;
    if (rel > worst_rel) {
      worst_rel = rel;
      worst = {a[i] - b[i], scale};
    }
  }
  return worst;
}

std::vector<cplx> concat(std::span<const cplx> a) { return {a.begin(), a.end()}; }

KernelArgs split_args(std::span<const cplx> X, const Sizes& sz) {
  KernelArgs args;
  std::size_t o = 0;
  auto take = [&](std::vector<cplx>& dst, int n) {
    for (int i = 0; i < n; ++i) dst.push_back(X[o++]);
  };
  take(args.x, sz.N);
  take(args.xt, sz.Ntilde);
  take(args.y, sz.M);
  take(args.yt, sz.Mtilde);
  return args;
}

std::vector<std::size_t> iota_from(std::size_t start, std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), start);
  return v;
}

bool near_zero(double v) { return std::abs(v) < 1e-12; }

}  // namespace

// ---------------------------------------------------------------------------

std::string_view to_string(IdentityId id) {
  for (const auto& e : kIdNames)
    if (e.id == id) return e.name;
  return "?";
}

IdentityId parse_identity(std::string_view name) {
  for (const auto& e : kIdNames)
    if (e.name == name) return e.id;
  throw ConfigError("unknown identity '" + std::string(name) + "'");
}

std::span<const IdentityId> all_identities() { return kAllIds; }

Applicability applicability(IdentityId id, ModelCase kase) {
  bool ell = kase == ModelCase::Elliptic;
  bool trig = kase == ModelCase::Trigonometric;
  switch (id) {
    case IdentityId::WH:
      return {true, ell ? "sum of masses = 0 (unbalanced runs as negative test)" : ""};
    case IdentityId::SourceIdentity:
      return {true, ell ? "balancing: sum of mass labels = 0" : ""};
    case IdentityId::Cor1:
      if (ell) return {false, "balancing would require N = 0"};
      return {true, ""};
    case IdentityId::Cor2:
      return {true, ell ? "N - M = 0" : ""};
    case IdentityId::Cor3:
      if (ell) return {false, "N + M/g = 0 has no solution with g > 0"};
      return {true, ""};
    case IdentityId::Cor4:
      return {true, ell ? "N - N~/g = 0" : ""};
    case IdentityId::Cor5:
      return {true, ell ? "N - M - (N~ - M~)/g = 0" : ""};
    case IdentityId::MacdonaldKernel:
    case IdentityId::MacdonaldMinusKernel:
      if (!trig) return {false, "trigonometric case only"};
      return {true, ""};
    case IdentityId::MacdonaldCorrespondence:
      if (!trig) return {false, "trigonometric case only"};
      return {true, ""};
    case IdentityId::NonRelConstancy:
      return {true, ell ? "sum of masses = 0" : ""};
    case IdentityId::NonRelElliptic_dA:
      if (!ell) return {false, "elliptic case only"};
      return {true, ""};
    case IdentityId::Lemma2:
    case IdentityId::LemmaA:
    case IdentityId::NonRelLimit:
    case IdentityId::GammaFunctional:
    case IdentityId::AltFormEquivalence:
    case IdentityId::Gauge:
      return {true, ""};
  }
  return {false, "unknown"};
}

std::string IdentityCase::describe() const {
  std::string out;
  auto add = [&](const std::string& s) {
    if (!out.empty()) out += ' ';
    out += s;
  };
  if (!label_sets.empty()) {
    if (label_sets.size() <= 4) {
      std::string ls;
      for (std::size_t i = 0; i < label_sets.size(); ++i) {
        if (i) ls += ';';
        ls += join_labels(label_sets[i]);
      }
      add("labels=" + ls);
    } else {
      std::size_t lo = label_sets.front().size(), hi = lo;
      for (const auto& l : label_sets) {
        lo = std::min(lo, l.size());
        hi = std::max(hi, l.size());
      }
      add("labels=" + std::to_string(label_sets.size()) + " multisets of size " +
          std::to_string(lo) + (hi != lo ? "-" + std::to_string(hi) : ""));
    }
  }
  if (!shapes.empty()) {
    std::string sh;
    for (std::size_t i = 0; i < shapes.size(); ++i) {
      const auto& s = shapes[i];
      if (i) sh += ';';
      sh += "(" + std::to_string(s.N) + "," + std::to_string(s.Ntilde) + "," +
            std::to_string(s.M) + "," + std::to_string(s.Mtilde) + ")";
    }
    add("sizes=" + sh);
  }
  if (!masses.empty()) {
    std::string ms;
    for (std::size_t i = 0; i < masses.size(); ++i) {
      if (i) ms += ',';
      ms += fmt_double(masses[i]);
    }
    add("masses=" + ms);
  } else if (id == IdentityId::WH || id == IdentityId::NonRelConstancy ||
             id == IdentityId::NonRelElliptic_dA || id == IdentityId::NonRelLimit) {
    add("N=" + std::to_string(mass_count));
  }
  if (!random_g) add("g=" + fmt_double(params.g));
  if (v != 0.0) add("v=" + fmt_double(v.real()) + (v.imag() < 0 ? "" : "+") + fmt_double(v.imag()) + "i");
  if (truncation_L > 0) add("trunc=" + std::to_string(truncation_L));
  return out;
}

double Residual::rel() const { return std::abs(value) / std::max(scale, 1e-300); }

// ---------------------------------------------------------------------------
// Residuals

Residual residual_WH(const Model& model, cplx gamma, std::span<const cplx> Z,
                     std::span<const double> masses) {
  if (Z.size() != masses.size()) throw ConfigError("residual_WH: size mismatch");
  if (gamma.imag() == 0.0) throw DomainError("residual_WH: Im(gamma) must be nonzero");
  std::size_t n = Z.size();
  cplx total = 0.0;
  double mag = 0.0, msum = 0.0;
  for (std::size_t J = 0; J < n; ++J) {
    cplx t = s_eval(model, gamma * masses[J]);
    for (std::size_t K = 0; K < n; ++K) {
      if (K == J) continue;
      cplx d = Z[J] - Z[K];
      t *= checked(s_eval(model, d + gamma * masses[K]), s_eval(model, d));
    }
    total += t;
    mag += std::abs(t);
    msum += masses[J];
  }
  cplx rhs = s_eval(model, gamma * msum);
  return {total - rhs, std::max(mag, std::abs(rhs))};
}

Residual residual_source_identity(int sign, const Model& model, std::span<const cplx> X,
                                  std::span<const MassLabel> labels, const ApplyOptions& opts) {
  std::vector<MassLabel> lab(labels.begin(), labels.end());
  auto op = make_S_general(sign, lab, model);
  ConfigFunction Phi{lab.size(),
                     [lab, model](std::span<const cplx> Y) { return build_Phi(Y, lab, model); }};
  cplx c = S_prefactor(balancing_deficit(labels, model.params), model);
  return operator_residual(op, Phi, X, c, opts);
}

Residual residual_corollary(int which, int sign, const Model& model, const Sizes& sz,
                            std::span<const cplx> X, cplx v, const ApplyOptions& opts,
                            bool printed_cor5_factor) {
  if (static_cast<int>(X.size()) != sz.total())
    throw ConfigError("residual_corollary: coordinate count does not match sizes");
  double g = model.params.g, b = model.params.beta;
  auto n = static_cast<std::size_t>(sz.total());
  KernelSpec spec;
  spec.N = sz.N;
  spec.Ntilde = sz.Ntilde;
  spec.M = sz.M;
  spec.Mtilde = sz.Mtilde;
  spec.v = v;
  spec.printed_cor5_factor = printed_cor5_factor;
  DifferenceOperator op;
  double m = 0.0;
  auto xs = static_cast<std::size_t>(sz.N + sz.Ntilde);
  auto ys = static_cast<std::size_t>(sz.M + sz.Mtilde);
  switch (which) {
    case 1:
      if (sz.Ntilde || sz.M || sz.Mtilde) throw ConfigError("cor1 uses N only");
      spec.kind = KernelKind::PsiN;
      op = make_S_standard(sign, sz.N, model);
      m = sz.N;
      break;
    case 2:
      if (sz.Ntilde || sz.Mtilde) throw ConfigError("cor2 uses N and M only");
      spec.kind = KernelKind::FNM;
      op = sum(embed(make_S_standard(sign, sz.N, model), n, iota_from(0, xs)),
               scale(embed(negate_coordinates(make_S_standard(sign, sz.M, model)), n,
                           iota_from(xs, ys)),
                     -1.0));
      m = sz.N - sz.M;
      break;
    case 3: {
      if (sz.Ntilde || sz.Mtilde) throw ConfigError("cor3 uses N and M only");
      spec.kind = KernelKind::FTilde;
      Model dual = model.with_coupling(1.0 / g, g * b);
      op = sum(embed(make_S_standard(sign, sz.N, model), n, iota_from(0, xs)),
               scale(embed(make_S_standard(sign, sz.M, dual), n, iota_from(xs, ys)), 1.0 / g));
      m = sz.N + sz.M / g;
      break;
    }
    case 4:
      if (sz.M || sz.Mtilde) throw ConfigError("cor4 uses N and N~ only");
      spec.kind = KernelKind::PsiDeformed;
      op = make_S_deformed(sign, sz.N, sz.Ntilde, model);
      m = sz.N - sz.Ntilde / g;
      break;
    case 5:
      spec.kind = KernelKind::FDeformed;
      op = sum(embed(make_S_deformed(sign, sz.N, sz.Ntilde, model), n, iota_from(0, xs)),
               scale(embed(negate_coordinates(make_S_deformed(sign, sz.M, sz.Mtilde, model)), n,
                           iota_from(xs, ys)),
                     -1.0));
      m = sz.N - sz.M - (sz.Ntilde - sz.Mtilde) / g;
      break;
    default:
      throw ConfigError("residual_corollary: which must be 1..5");
  }
  ConfigFunction F{n, [spec, sz, model](std::span<const cplx> Y) {
                     return build_kernel(spec, split_args(Y, sz), model);
                   }};
  return operator_residual(op, F, X, S_prefactor(m, model), opts);
}

Residual residual_lemma2(const Model& model, cplx A, cplx alpha, cplx x, Lemma2Branch which) {
  auto F = [&](cplx u) {
    return checked(gamma_main(model, u + I * A, alpha), gamma_main(model, u - I * A, alpha));
  };
  double sg = which == Lemma2Branch::Upper ? 1.0 : -1.0;
  cplx lhs = checked(F(x - sg * I * alpha / 2.0), F(x + sg * I * alpha / 2.0));
  cplx rhs = checked(s_eval(model, x - sg * I * A), s_eval(model, x + sg * I * A));
  return {lhs - rhs, std::max(std::abs(lhs), std::abs(rhs))};
}

Residual residual_gamma_functional(const Model& model, cplx x, cplx alpha) {
  cplx res = gamma_functional_residual(model, x, alpha);
  cplx rhs = gamma_main_constant(model, alpha) * s_eval(model, x);
  return {res, std::abs(rhs)};
}

Residual residual_lemmaA(int sign, const Model& model, std::span<const cplx> X,
                         std::span<const MassLabel> labels, const ApplyOptions& opts) {
  std::vector<MassLabel> lab(labels.begin(), labels.end());
  ConfigFunction Phi{lab.size(),
                     [lab, model](std::span<const cplx> Y) { return build_Phi(Y, lab, model); }};
  auto S = make_S_general(sign, lab, model);
  auto C = make_conjugated_coefficients(sign, lab, model);
  cplx phi0 = Phi(X);
  if (phi0 == 0.0) throw PoleError("lemma-a: Phi vanishes at the sample");
  auto a = apply_terms(S, Phi, X, opts);
  for (cplx& t : a) t /= phi0;
  std::vector<cplx> b;
  for (const auto& t : C.terms) b.push_back(term_coefficient(t, X, opts));
  return termwise(a, b);
}

Residual residual_alt_form(int sign, const Model& model, std::span<const cplx> X,
                           std::span<const MassLabel> labels, const ApplyOptions& opts) {
  std::vector<MassLabel> lab(labels.begin(), labels.end());
  ConfigFunction Phi{lab.size(),
                     [lab, model](std::span<const cplx> Y) { return build_Phi(Y, lab, model); }};
  auto a = apply_terms(make_S_general(sign, lab, model), Phi, X, opts);
  auto b = apply_terms(make_S_alternative(sign, lab, model), Phi, X, opts);
  return termwise(a, b);
}

Residual residual_gauge(int sign, const Model& model, int N, int Nt, std::span<const cplx> X,
                        const ApplyOptions& opts) {
  auto n = static_cast<std::size_t>(N + Nt);
  if (X.size() != n) throw ConfigError("residual_gauge: coordinate count mismatch");
  ConfigFunction Psi{n, [model, N](std::span<const cplx> Y) {
                       return build_Psi_deformed(Y.subspan(0, static_cast<std::size_t>(N)),
                                                 Y.subspan(static_cast<std::size_t>(N)), model);
                     }};
  cplx psi0 = Psi(X);
  if (psi0 == 0.0) throw PoleError("gauge: Psi vanishes at the sample");
  cplx norm = 1.0 / S_prefactor(1.0, model);
  auto a = apply_terms(make_A_deformed(sign, N, Nt, model), ConfigFunction{n, {}}, X, opts);
  auto b = apply_terms(make_S_deformed(sign, N, Nt, model), Psi, X, opts);
  for (cplx& t : b) t *= norm / psi0;
  return termwise(a, b);
}

Residual residual_macdonald_correspondence(int sign, const Model& model, int N, int Nt,
                                           std::span<const cplx> X,
                                           std::span<const cplx> coeffs) {
  auto n = static_cast<std::size_t>(N + Nt);
  if (X.size() != n || coeffs.size() != n)
    throw ConfigError("residual_macdonald_correspondence: size mismatch");
  std::vector<cplx> c(coeffs.begin(), coeffs.end());
  auto h = [c](std::span<const cplx> Z) {
    cplx e = 0.0;
    for (std::size_t j = 0; j < Z.size(); ++j) e += c[j] * Z[j];
    return std::exp(e);
  };
  ConfigFunction hz{n, h};
  ConfigFunction hx{n, [h, model, N](std::span<const cplx> Y) {
                      auto Z = macdonald_coordinates(Y.subspan(0, static_cast<std::size_t>(N)),
                                                     Y.subspan(static_cast<std::size_t>(N)), model);
                      return h(Z);
                    }};
  ApplyOptions direct;
  direct.branch = BranchPolicy::PrincipalSqrt;
  auto a = apply_terms(make_A_deformed(sign, N, Nt, model), hx, X, direct);
  auto Z = macdonald_coordinates(X.subspan(0, static_cast<std::size_t>(N)),
                                 X.subspan(static_cast<std::size_t>(N)), model);
  auto b = apply_terms(make_macdonald(sign, N, Nt, model), hz, Z, direct);
  double kappa = macdonald_gauge_factor(sign, N, Nt, model);
  for (cplx& t : b) t *= kappa;
  return termwise(a, b);
}

Residual residual_macdonald_kernel(int sign, const Model& model, const Sizes& sz,
                                   std::span<const cplx> X, cplx v) {
  auto n = static_cast<std::size_t>(sz.total());
  if (X.size() != n) throw ConfigError("residual_macdonald_kernel: coordinate count mismatch");
  double g = model.params.g, b = model.params.beta;
  auto xs = static_cast<std::size_t>(sz.N + sz.Ntilde);
  auto ys = static_cast<std::size_t>(sz.M + sz.Mtilde);
  auto op = sum(embed(scale(make_macdonald_x(sign, sz.N, sz.Ntilde, model),
                            macdonald_gauge_factor(sign, sz.N, sz.Ntilde, model)),
                      n, iota_from(0, xs)),
                embed(scale(make_macdonald_x(sign, sz.M, sz.Mtilde, model),
                            -macdonald_gauge_factor(sign, sz.M, sz.Mtilde, model)),
                      n, iota_from(xs, ys)));
  KernelSpec spec{KernelKind::Gauged, sz.N, sz.Ntilde, sz.M, sz.Mtilde, v, false};
  ConfigFunction K{n, [spec, sz, model](std::span<const cplx> Y) {
                     return build_kernel(spec, split_args(Y, sz), model);
                   }};
  double m = sz.N - sz.M - (sz.Ntilde - sz.Mtilde) / g;
  cplx c = s_eval(model, I * g * b * m) / s_eval(model, I * g * b);
  ApplyOptions direct;
  direct.branch = BranchPolicy::PrincipalSqrt;
  return operator_residual(op, K, X, c, direct);
}

// ---------------------------------------------------------------------------
// Non-relativistic

cplx nonrel_energy(const Model& model, std::span<const double> masses, std::span<const cplx> X) {
  auto nr = build_phi_nr(X, masses, model);
  return apply_H_nonrel_logd(model, masses, X, nr.dlog, nr.d2log);
}

cplx nonrel_dlog_da(const Model& model, std::span<const double> masses, std::span<const cplx> X,
                    double step) {
  Model up = model, dn = model;
  up.params.a += step;
  dn.params.a -= step;
  double g = model.params.g;
  cplx total = 0.0;
  for (std::size_t J = 0; J < X.size(); ++J)
    for (std::size_t K = J + 1; K < X.size(); ++K) {
      cplx d = X[J] - X[K];
      cplx r = checked(s_eval(up, d), s_eval(dn, d));
      total += masses[J] * masses[K] * g * std::log(r);
    }
  return total / (2.0 * step);
}

std::vector<double> nonrel_limit_deviations(const Model& model, std::span<const cplx> X,
                                            std::span<const cplx> c, cplx d,
                                            std::span<const double> betas) {
  std::size_t n = X.size();
  std::vector<cplx> cc(c.begin(), c.end());
  ConfigFunction f{n, [cc, d](std::span<const cplx> Y) {
                     cplx e = 0.0;
                     for (std::size_t j = 0; j < Y.size(); ++j) {
                       e += cc[j] * Y[j];
                       for (std::size_t k = j + 1; k < Y.size(); ++k)
                         e += d * (Y[j] - Y[k]) * (Y[j] - Y[k]);
                     }
                     return std::exp(e);
                   }};
  double g = model.params.g;
  auto N = static_cast<double>(n);
  std::vector<double> ones(n, 1.0);
  cplx f0 = f(X);
  cplx Hf = apply_H_nonrel(model, ones, f, X);
  cplx s3 = s_eval(model, 0.0, 3) / s_eval(model, 0.0, 1);
  std::vector<double> out;
  for (double b : betas) {
    Model mb = model.with_coupling(g, b);
    auto Np = static_cast<int>(n);
    cplx sp = apply(make_S_standard(1, Np, mb), f, X);
    cplx sm = apply(make_S_standard(-1, Np, mb), f, X);
    cplx lhs = (sp + sm - 2.0 * N * f0) / (b * b) + (N * g * g * s3 / 3.0) * f0;
    out.push_back(std::abs(lhs - Hf) / std::max({std::abs(Hf), std::abs(f0), 1e-300}));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Suite execution

namespace {

constexpr int kMaxAttempts = 25;
constexpr double kLimitBetas[] = {0.1, 0.05, 0.025};
// Deviation ratio between the last and first beta for first-order decay.
constexpr double kLimitRatioTol = 0.25;

struct Drawn {
  Model model;
  std::vector<double> extra;  // parameters folded into the digest
};

double draw_g(SampleRng& rng) {
  for (;;) {
    double g = rng.uniform(0.5, 3.0);
    if (std::abs(g - 1.0) >= 0.15) return g;
  }
}

Drawn draw_model(const IdentityCase& item, const NumericsConfig& num, SampleRng& rng) {
  ModelParams p = item.params;
  if (item.random_g) p.g = draw_g(rng);
  if (item.random_beta) p.beta = rng.uniform(0.1, 0.4);
  if (item.random_a) p.a = rng.uniform(1.0, 2.0);
  NumericsConfig n = num;
  if (item.truncation_L > 0) n.truncation_L = item.truncation_L;
  return {Model(item.kase, p, n), {p.g, p.beta, p.r, p.a, p.m0}};
}

std::vector<double> draw_masses(const IdentityCase& item, SampleRng& rng, bool balanced) {
  if (!item.masses.empty()) return item.masses;
  int n = std::max(1, item.mass_count);
  for (;;) {
    std::vector<double> m(static_cast<std::size_t>(n));
    double total = 0.0;
    for (int j = 0; j < n; ++j) {
      m[static_cast<std::size_t>(j)] = rng.signed_uniform(0.2, 2.0);
      total += m[static_cast<std::size_t>(j)];
    }
    if (balanced) {
      if (n < 2) return m;
      double last = m.back() - total;
      if (std::abs(last) < 0.2 || std::abs(last) > 2.0) continue;
      m.back() = last;
      return m;
    }
    if (item.kase == ModelCase::Elliptic && std::abs(total) < 0.3) continue;
    return m;
  }
}

std::vector<cplx> draw_points(const Model& model, SampleRng& rng, std::size_t n, bool shuffle) {
  auto pts = sample_positions(rng, n, default_box(model));
  if (shuffle) rng.shuffle(pts);
  return pts;
}

cplx draw_alpha(SampleRng& rng) { return {rng.signed_uniform(0.3, 1.5), rng.uniform(-0.1, 0.1)}; }

int corollary_number(IdentityId id) {
  switch (id) {
    case IdentityId::Cor1: return 1;
    case IdentityId::Cor2: return 2;
    case IdentityId::Cor3: return 3;
    case IdentityId::Cor4: return 4;
    case IdentityId::Cor5: return 5;
    default: return 0;
  }
}

// Balancing deficit of a corollary shape, or NaN when no balancing applies.
double corollary_deficit(int which, const Sizes& s, double g) {
  switch (which) {
    case 1: return s.N;
    case 2: return s.N - s.M;
    case 3: return s.N + s.M / g;
    case 4: return s.N - s.Ntilde / g;
    case 5: return s.N - s.M - (s.Ntilde - s.Mtilde) / g;
  }
  return 0.0;
}

// Reason to skip the entry, empty if it runs.
std::string precondition(const IdentityCase& item) {
  Applicability ap = applicability(item.id, item.kase);
  if (!ap.applicable) return "not applicable: " + ap.requirement;
  if (item.kase != ModelCase::Elliptic || item.expect_fail) return {};
  if (item.id == IdentityId::SourceIdentity) {
    for (const auto& l : item.label_sets) {
      double d = balancing_deficit(l, item.params);
      if (!near_zero(d))
        return "unbalanced label set " + join_labels(l) + " (deficit " + fmt_double(d) +
               "); use expect_fail for the negative test";
    }
  }
  if (item.id == IdentityId::WH || item.id == IdentityId::NonRelConstancy) {
    if (!item.masses.empty()) {
      double d = std::accumulate(item.masses.begin(), item.masses.end(), 0.0);
      if (!near_zero(d))
        return "unbalanced masses (deficit " + fmt_double(d) +
               "); use expect_fail for the negative test";
    }
  }
  if (int which = corollary_number(item.id)) {
    if (which == 1 || which == 3) return "not applicable: " + ap.requirement;
    if (item.random_g && (which == 4 || which == 5))
      return "balancing depends on g; fix g for the elliptic case";
    for (const auto& s : item.shapes) {
      double d = corollary_deficit(which, s, item.params.g);
      if (!near_zero(d))
        return "balancing violated: " + ap.requirement + " (deficit " + fmt_double(d) + ")";
    }
  }
  return {};
}

Sizes shape_for(const IdentityCase& item, int i) {
  if (item.shapes.empty()) throw ConfigError(std::string(to_string(item.id)) + ": no sizes given");
  return item.shapes[static_cast<std::size_t>(i) % item.shapes.size()];
}

const std::vector<MassLabel>& labels_for(const IdentityCase& item, int i) {
  if (item.label_sets.empty())
    throw ConfigError(std::string(to_string(item.id)) + ": no label sets given");
  return item.label_sets[static_cast<std::size_t>(i) % item.label_sets.size()];
}

struct SampleOutcome {
  Residual r;
  std::uint64_t digest = 0;
  cplx measured = 0.0;  // identity-specific observable
  double order = 0.0;   // NonRelLimit
};

SampleOutcome evaluate_sample(const IdentityCase& item, const Model& model,
                              const std::vector<double>& extra, SampleRng& rng, int i,
                              const std::vector<double>& entry_masses) {
  SampleOutcome out;
  auto digest = [&](std::span<const cplx> pts, std::vector<double> more = {}) {
    more.insert(more.end(), extra.begin(), extra.end());
    out.digest = sample_digest(pts, more);
  };
  int sign = item.sign == 0 ? 1 : item.sign;
  switch (item.id) {
    case IdentityId::GammaFunctional: {
      cplx x(rng.uniform(-1.0, 1.0), rng.uniform(-0.3, 0.3));
      cplx alpha = draw_alpha(rng);
      cplx pts[] = {x, alpha};
      digest(pts);
      out.r = residual_gamma_functional(model, x, alpha);
      break;
    }
    case IdentityId::Lemma2: {
      cplx x(rng.uniform(-1.0, 1.0), rng.uniform(-0.3, 0.3));
      cplx alpha = draw_alpha(rng);
      cplx A(rng.signed_uniform(0.1, 0.5), rng.uniform(-0.1, 0.1));
      cplx pts[] = {x, alpha, A};
      digest(pts);
      Residual up = residual_lemma2(model, A, alpha, x, Lemma2Branch::Upper);
      Residual lo = residual_lemma2(model, A, alpha, x, Lemma2Branch::Lower);
      out.r = up.rel() >= lo.rel() ? up : lo;
      break;
    }
    case IdentityId::WH: {
      bool balanced =
          item.balanced_masses || (item.kase == ModelCase::Elliptic && !item.expect_fail);
      auto m = draw_masses(item, rng, balanced);
      auto Z = draw_points(model, rng, m.size(), true);
      cplx gamma(rng.uniform(-0.2, 0.2), rng.signed_uniform(0.1, 0.5));
      auto pts = concat(Z);
      pts.push_back(gamma);
      digest(pts, m);
      out.r = residual_WH(model, gamma, Z, m);
      break;
    }
    case IdentityId::SourceIdentity:
    case IdentityId::LemmaA:
    case IdentityId::AltFormEquivalence: {
      const auto& lab = labels_for(item, i);
      auto X = draw_points(model, rng, lab.size(), true);
      std::vector<double> lv;
      for (auto l : lab) lv.push_back(static_cast<double>(static_cast<int>(l)));
      digest(X, lv);
      if (item.id == IdentityId::SourceIdentity)
        out.r = residual_source_identity(sign, model, X, lab);
      else if (item.id == IdentityId::LemmaA)
        out.r = residual_lemmaA(sign, model, X, lab);
      else
        out.r = residual_alt_form(sign, model, X, lab);
      break;
    }
    case IdentityId::Cor1:
    case IdentityId::Cor2:
    case IdentityId::Cor3:
    case IdentityId::Cor4:
    case IdentityId::Cor5: {
      Sizes sz = shape_for(item, i);
      auto X = draw_points(model, rng, static_cast<std::size_t>(sz.total()), true);
      digest(X, {double(sz.N), double(sz.Ntilde), double(sz.M), double(sz.Mtilde)});
      int which = corollary_number(item.id);
      out.r = residual_corollary(which, sign, model, sz, X, item.v);
      if (which == 1 || which == 4) {
        KernelSpec spec;
        spec.kind = which == 1 ? KernelKind::PsiN : KernelKind::PsiDeformed;
        spec.N = sz.N;
        spec.Ntilde = sz.Ntilde;
        spec.v = item.v;
        cplx F = build_kernel(spec, split_args(X, sz), model);
        auto op = which == 1 ? make_S_standard(sign, sz.N, model)
                             : make_S_deformed(sign, sz.N, sz.Ntilde, model);
        ConfigFunction Fn{X.size(), [spec, sz, model](std::span<const cplx> Y) {
                            return build_kernel(spec, split_args(Y, sz), model);
                          }};
        out.measured = apply(op, Fn, X) / F;
      }
      break;
    }
    case IdentityId::Gauge:
    case IdentityId::MacdonaldCorrespondence: {
      Sizes sz = shape_for(item, i);
      auto X = draw_points(model, rng, static_cast<std::size_t>(sz.N + sz.Ntilde), true);
      if (item.id == IdentityId::Gauge) {
        digest(X, {double(sz.N), double(sz.Ntilde)});
        out.r = residual_gauge(sign, model, sz.N, sz.Ntilde, X);
      } else {
        std::vector<cplx> c;
        for (std::size_t j = 0; j < X.size(); ++j)
          c.emplace_back(rng.uniform(-0.3, 0.3), rng.uniform(-0.3, 0.3));
        auto pts = concat(X);
        pts.insert(pts.end(), c.begin(), c.end());
        digest(pts, {double(sz.N), double(sz.Ntilde)});
        out.r = residual_macdonald_correspondence(sign, model, sz.N, sz.Ntilde, X, c);
      }
      break;
    }
    case IdentityId::MacdonaldKernel:
    case IdentityId::MacdonaldMinusKernel: {
      Sizes sz = shape_for(item, i);
      auto X = draw_points(model, rng, static_cast<std::size_t>(sz.total()), true);
      for (int j = sz.N + sz.Ntilde; j < sz.total(); ++j) X[static_cast<std::size_t>(j)] *= -1.0;
      digest(X, {double(sz.N), double(sz.Ntilde), double(sz.M), double(sz.Mtilde)});
      int sg = item.id == IdentityId::MacdonaldKernel ? 1 : -1;
      out.r = residual_macdonald_kernel(sg, model, sz, X, item.v);
      break;
    }
    case IdentityId::NonRelConstancy:
    case IdentityId::NonRelElliptic_dA: {
      auto X = sample_positions(rng, entry_masses.size(), default_box(model));
      std::reverse(X.begin(), X.end());
      digest(X, entry_masses);
      cplx E = nonrel_energy(model, entry_masses, X);
      if (item.id == IdentityId::NonRelElliptic_dA) {
        double msum = std::accumulate(entry_masses.begin(), entry_masses.end(), 0.0);
        E += 4.0 * model.params.g * msum * model.params.r * nonrel_dlog_da(model, entry_masses, X);
      }
      out.measured = E;
      break;
    }
    case IdentityId::NonRelLimit: {
      std::size_t n = static_cast<std::size_t>(std::max(1, item.mass_count));
      auto X = draw_points(model, rng, n, true);
      std::vector<cplx> c;
      for (std::size_t j = 0; j < n; ++j) c.emplace_back(rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5));
      cplx d(rng.uniform(-0.2, 0.2), rng.uniform(-0.2, 0.2));
      auto pts = concat(X);
      pts.insert(pts.end(), c.begin(), c.end());
      pts.push_back(d);
      digest(pts);
      auto dev = nonrel_limit_deviations(model, X, c, d, kLimitBetas);
      double order = std::numeric_limits<double>::infinity();
      for (std::size_t k = 0; k + 1 < dev.size(); ++k)
        order = std::min(order, std::log2(dev[k] / dev[k + 1]));
      out.order = order;
      out.measured = dev.back();
      out.r = {dev.back(), std::max(dev.front(), 1e-300)};
      break;
    }
  }
  return out;
}

void finalize(ResidualReport& rep, const std::vector<SampleOutcome>& outs) {
  const IdentityCase& item = rep.identity;
  bool nonrel_const =
      item.id == IdentityId::NonRelConstancy || item.id == IdentityId::NonRelElliptic_dA;
  if (nonrel_const && !outs.empty()) {
    cplx E0 = outs.front().measured;
    double scale = std::max(1.0, std::abs(E0));
    double spread = 0.0;
    for (std::size_t i = 0; i < outs.size(); ++i)
      for (std::size_t j = i + 1; j < outs.size(); ++j)
        spread = std::max(spread, std::abs(outs[i].measured - outs[j].measured));
    double offset = item.expected_constant ? std::abs(E0 - *item.expected_constant) : 0.0;
    for (std::size_t i = 0; i < outs.size(); ++i) {
      double dev = std::max(std::abs(outs[i].measured - E0), offset);
      rep.samples[i].abs_residual = dev;
      rep.samples[i].scale = scale;
    }
    rep.measured_constants.emplace_back("energy_re", E0.real());
    rep.measured_constants.emplace_back("energy_im", E0.imag());
    rep.measured_constants.emplace_back("spread", spread);
  }
  if (item.id == IdentityId::NonRelLimit && !outs.empty()) {
    double omin = std::numeric_limits<double>::infinity();
    for (const auto& o : outs) omin = std::min(omin, o.order);
    double dmax = 0.0;
    for (const auto& o : outs) dmax = std::max(dmax, o.measured.real());
    rep.measured_constants.emplace_back("deviation_max", dmax);
    rep.measured_constants.emplace_back("order_min", omin);
  }
  if ((item.id == IdentityId::Cor1 || item.id == IdentityId::Cor4) && !outs.empty()) {
    rep.measured_constants.emplace_back("eigenvalue_re", outs.front().measured.real());
    rep.measured_constants.emplace_back("eigenvalue_im", outs.front().measured.imag());
  }

  double mx = 0.0;
  int above = 0;
  bool bad = false;
  for (const auto& s : rep.samples) {
    double r = s.rel();
    if (!std::isfinite(r)) {
      bad = true;
      mx = std::numeric_limits<double>::infinity();
      continue;
    }
    mx = std::max(mx, r);
    if (r > kNegativeThreshold) ++above;
  }
  rep.max_rel_residual = mx;
  auto n = static_cast<int>(rep.samples.size());
  if (item.expect_fail) {
    rep.passed = n > 0 && above >= static_cast<int>(std::ceil(kNegativeFraction * n));
    rep.reason = "negative test: " + std::to_string(above) + "/" + std::to_string(n) +
                 " samples above " + fmt_double(kNegativeThreshold);
    return;
  }
  rep.passed = n > 0 && !bad && mx < item.tolerance;
  if (item.id == IdentityId::NonRelLimit) {
    double omin = 0.0;
    for (const auto& [name, value] : rep.measured_constants)
      if (name == "order_min") omin = value;
    if (!(omin >= 1.0)) {
      rep.passed = false;
      rep.reason = "empirical order " + fmt_double(omin) + " < 1";
    }
  }
  if (bad && rep.reason.empty()) rep.reason = "some samples could not be evaluated";
}

std::uint64_t sign_key(int sign) { return static_cast<std::uint64_t>(sign + 1); }

}  // namespace

ResidualReport run_case(const IdentityCase& item, const NumericsConfig& numerics) {
  ResidualReport rep;
  rep.identity = item;
  auto t0 = std::chrono::steady_clock::now();
  auto stop_clock = [&] {
    rep.runtime_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  };
  std::string skip = precondition(item);
  if (!skip.empty()) {
    rep.skipped = true;
    rep.reason = skip;
    stop_clock();
    return rep;
  }
  std::uint64_t desc = fnv1a(item.describe());
  std::uint64_t base[] = {numerics.rng_seed, static_cast<std::uint64_t>(item.id),
                          static_cast<std::uint64_t>(item.kase), sign_key(item.sign), desc,
                          item.expect_fail ? 1u : 0u};
  auto key = [&](std::uint64_t a, std::uint64_t b) {
    std::vector<std::uint64_t> k(std::begin(base), std::end(base));
    k.push_back(a);
    k.push_back(b);
    return k;
  };

  // Entry-level draws shared by all samples of the non-relativistic checks.
  bool shared = item.id == IdentityId::NonRelConstancy || item.id == IdentityId::NonRelElliptic_dA;
  std::vector<double> entry_masses;
  std::optional<Drawn> shared_model;
  if (shared) {
    auto k = key(~0ULL, 0);
    SampleRng rng(k);
    shared_model = draw_model(item, numerics, rng);
    bool balanced = item.id == IdentityId::NonRelConstancy && item.kase == ModelCase::Elliptic &&
                    !item.expect_fail;
    entry_masses = draw_masses(item, rng, balanced);
  }

  std::vector<SampleOutcome> outs;
  std::string last_error;
  try {
    for (int i = 0; i < item.samples; ++i) {
      bool done = false;
      for (int attempt = 0; attempt < kMaxAttempts && !done; ++attempt) {
        auto k = key(static_cast<std::uint64_t>(i), static_cast<std::uint64_t>(attempt));
        SampleRng rng(k);
        Drawn d = shared ? *shared_model : draw_model(item, numerics, rng);
        try {
          SampleOutcome o = evaluate_sample(item, d.model, d.extra, rng, i, entry_masses);
          rep.samples.push_back({o.digest, std::abs(o.r.value), std::max(o.r.scale, 1e-300)});
          outs.push_back(o);
          done = true;
        } catch (const PoleError& e) {
          last_error = e.what();
        } catch (const BranchError& e) {
          last_error = e.what();
        } catch (const DomainError& e) {
          last_error = e.what();
        } catch (const TruncationError& e) {
          last_error = e.what();
        }
        if (!done) ++rep.rejected;
      }
      if (!done) {
        rep.samples.push_back({0, std::numeric_limits<double>::quiet_NaN(), 1.0});
        outs.push_back({});
      }
    }
  } catch (const Error& e) {
    rep.passed = false;
    rep.reason = std::string("error: ") + e.what();
    stop_clock();
    return rep;
  }
  finalize(rep, outs);
  if (rep.rejected > 0 && rep.reason.empty())
    rep.reason = std::to_string(rep.rejected) + " draws rejected (last: " + last_error + ")";
  stop_clock();
  return rep;
}

unsigned default_thread_count() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("VERIFY_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) return std::min<unsigned>(hw, static_cast<unsigned>(v));
  }
  return hw;
}

std::vector<ResidualReport> run_suite(const std::vector<IdentityCase>& suite,
                                      const NumericsConfig& numerics, unsigned threads) {
  std::vector<ResidualReport> out(suite.size());
  if (suite.empty()) return out;
  if (threads == 0) threads = default_thread_count();
  threads = std::min<unsigned>(threads, static_cast<unsigned>(suite.size()));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= suite.size()) return;
      out[i] = run_case(suite[i], numerics);
    }
  };
  if (threads <= 1) {
    worker();
    return out;
  }
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return out;
}

ResidualReport check_nonrel(NonRelCheck kind, ModelCase kase, const ModelParams& params,
                            std::vector<double> masses, int samples,
                            const NumericsConfig& numerics) {
  IdentityCase item;
  item.kase = kase;
  item.sign = 0;
  item.params = params;
  item.random_beta = item.random_a = false;
  item.samples = samples;
  item.mass_count = static_cast<int>(masses.size());
  switch (kind) {
    case NonRelCheck::Constancy:
      item.id = IdentityId::NonRelConstancy;
      item.masses = std::move(masses);
      item.tolerance = 1e-8;
      break;
    case NonRelCheck::Elliptic_dA:
      item.id = IdentityId::NonRelElliptic_dA;
      item.masses = std::move(masses);
      item.tolerance = 1e-6;
      break;
    case NonRelCheck::Limit:
      item.id = IdentityId::NonRelLimit;
      item.tolerance = kLimitRatioTol;
      break;
  }
  return run_case(item, numerics);
}

// ---------------------------------------------------------------------------
// Default suite

std::vector<std::vector<MassLabel>> label_multisets(int size) {
  std::vector<std::vector<MassLabel>> out;
  std::vector<int> idx(static_cast<std::size_t>(size), 0);
  if (size <= 0) return out;
  for (;;) {
    std::vector<MassLabel> l;
    for (int k : idx) l.push_back(kAllLabels[k]);
    out.push_back(std::move(l));
    int p = size - 1;
    while (p >= 0 && idx[static_cast<std::size_t>(p)] == 3) --p;
    if (p < 0) break;
    int v = idx[static_cast<std::size_t>(p)] + 1;
    for (int q = p; q < size; ++q) idx[static_cast<std::size_t>(q)] = v;
  }
  return out;
}

std::vector<std::pair<std::vector<MassLabel>, double>> elliptic_balanced_sets() {
  using L = MassLabel;
  return {
      {{L::PlusM0, L::MinusM0}, 2.0},
      {{L::PlusM0, L::PlusM0, L::MinusInvGM0}, 0.5},
      {{L::PlusM0, L::MinusInvGM0, L::MinusInvGM0}, 2.0},
      {{L::PlusM0, L::MinusM0, L::PlusInvGM0, L::MinusInvGM0}, 2.0},
      {{L::PlusM0, L::PlusM0, L::MinusM0, L::MinusM0}, 2.0},
      {{L::MinusM0, L::MinusM0, L::PlusInvGM0}, 0.5},
  };
}

std::vector<std::pair<std::vector<MassLabel>, double>> elliptic_unbalanced_sets() {
  using L = MassLabel;
  return {
      {{L::PlusM0, L::PlusM0}, 2.0},
      {{L::PlusM0, L::MinusInvGM0}, 2.0},
      {{L::PlusM0, L::PlusM0, L::MinusM0}, 2.0},
  };
}

std::vector<IdentityCase> default_suite() {
  std::vector<IdentityCase> suite;
  const ModelCase all4[] = {ModelCase::Rational, ModelCase::Trigonometric, ModelCase::Hyperbolic,
                            ModelCase::Elliptic};
  const ModelCase first3[] = {ModelCase::Rational, ModelCase::Trigonometric,
                              ModelCase::Hyperbolic};
  auto base = [](IdentityId id, ModelCase k, int sign) {
    IdentityCase c;
    c.id = id;
    c.kase = k;
    c.sign = sign;
    return c;
  };
  using L = MassLabel;

  for (auto k : all4) {
    auto c = base(IdentityId::GammaFunctional, k, 0);
    c.samples = 50;
    c.tolerance = (k == ModelCase::Rational || k == ModelCase::Trigonometric) ? 1e-10 : 1e-9;
    if (k == ModelCase::Elliptic) c.truncation_L = 64;
    suite.push_back(c);
  }
  for (auto k : all4) {
    auto c = base(IdentityId::Lemma2, k, 0);
    c.samples = 20;
    c.tolerance = 1e-10;
    suite.push_back(c);
  }

  for (auto k : first3)
    for (int n : {2, 3, 4}) {
      auto c = base(IdentityId::WH, k, 0);
      c.mass_count = n;
      c.samples = 50;
      c.tolerance = 1e-10;
      suite.push_back(c);
    }
  for (int n : {2, 3, 4}) {
    auto c = base(IdentityId::WH, ModelCase::Elliptic, 0);
    c.mass_count = n;
    c.samples = 50;
    c.tolerance = 1e-8;
    suite.push_back(c);
  }
  for (int n : {2, 3}) {
    auto c = base(IdentityId::WH, ModelCase::Elliptic, 0);
    c.mass_count = n;
    c.samples = 50;
    c.expect_fail = true;
    suite.push_back(c);
  }

  std::vector<std::vector<MassLabel>> every;
  for (int n = 1; n <= 4; ++n)
    for (auto& l : label_multisets(n)) every.push_back(l);
  for (auto k : first3)
    for (int sg : {1, -1}) {
      auto c = base(IdentityId::SourceIdentity, k, sg);
      c.params.g = 2.0;
      c.label_sets = every;
      c.samples = static_cast<int>(every.size());
      c.tolerance = 1e-8;
      suite.push_back(c);
    }
  for (const auto& [labels, g] : elliptic_balanced_sets())
    for (int sg : {1, -1}) {
      auto c = base(IdentityId::SourceIdentity, ModelCase::Elliptic, sg);
      c.params.g = g;
      c.label_sets = {labels};
      c.samples = 8;
      c.tolerance = 1e-7;
      suite.push_back(c);
    }
  for (const auto& [labels, g] : elliptic_unbalanced_sets())
    for (int sg : {1, -1}) {
      auto c = base(IdentityId::SourceIdentity, ModelCase::Elliptic, sg);
      c.params.g = g;
      c.label_sets = {labels};
      c.samples = 20;
      c.tolerance = 1e-7;
      c.expect_fail = true;
      suite.push_back(c);
    }

  // Corollaries
  const std::vector<Sizes> cor1 = {{1, 0, 0, 0}, {2, 0, 0, 0}, {3, 0, 0, 0}};
  const std::vector<Sizes> cor23 = {{1, 0, 1, 0}, {2, 0, 1, 0}, {1, 0, 2, 0}, {2, 0, 2, 0}};
  const std::vector<Sizes> cor4 = {{1, 1, 0, 0}, {2, 1, 0, 0}, {1, 2, 0, 0}, {2, 2, 0, 0}};
  const std::vector<Sizes> cor5 = {{1, 1, 1, 1}, {2, 1, 1, 2}, {1, 2, 2, 1},
                                   {2, 2, 2, 2}, {1, 0, 1, 0}, {0, 1, 0, 1}};
  const cplx v0(0.17, 0.05);
  for (auto k : first3)
    for (int sg : {1, -1}) {
      auto add = [&](IdentityId id, const std::vector<Sizes>& shapes, int samples, cplx v) {
        auto c = base(id, k, sg);
        c.random_g = true;
        c.shapes = shapes;
        c.samples = samples;
        c.v = v;
        c.tolerance = 1e-8;
        suite.push_back(c);
      };
      add(IdentityId::Cor1, cor1, 9, 0.0);
      add(IdentityId::Cor2, cor23, 12, 0.0);
      add(IdentityId::Cor2, {{1, 0, 1, 0}, {2, 0, 1, 0}}, 6, v0);
      add(IdentityId::Cor3, cor23, 12, 0.0);
      add(IdentityId::Cor4, cor4, 12, 0.0);
      add(IdentityId::Cor5, cor5, 12, 0.0);
      add(IdentityId::Cor5, {{1, 1, 1, 1}}, 4, v0);
    }
  for (int sg : {1, -1}) {
    auto add = [&](IdentityId id, const std::vector<Sizes>& shapes, double g, int samples, cplx v) {
      auto c = base(id, ModelCase::Elliptic, sg);
      c.params.g = g;
      c.shapes = shapes;
      c.samples = samples;
      c.v = v;
      c.tolerance = 1e-7;
      suite.push_back(c);
    };
    add(IdentityId::Cor1, {{2, 0, 0, 0}}, 2.0, 4, 0.0);
    add(IdentityId::Cor2, {{1, 0, 1, 0}, {2, 0, 2, 0}}, 2.0, 8, 0.0);
    add(IdentityId::Cor2, {{2, 0, 2, 0}}, 2.0, 4, v0);
    add(IdentityId::Cor3, {{1, 0, 1, 0}}, 2.0, 4, 0.0);
    add(IdentityId::Cor4, {{1, 2, 0, 0}, {2, 4, 0, 0}}, 2.0, 6, 0.0);
    add(IdentityId::Cor5, {{1, 1, 1, 1}, {2, 1, 2, 1}, {1, 2, 1, 2}, {2, 2, 1, 0}}, 2.0, 8, 0.0);
    add(IdentityId::Cor5, {{1, 1, 1, 1}}, 2.0, 4, v0);
  }

  // Operator equivalences
  const std::vector<std::vector<MassLabel>> mixed = {
      {L::PlusM0, L::MinusM0},
      {L::PlusM0, L::PlusM0},
      {L::PlusM0, L::MinusInvGM0},
      {L::MinusM0, L::PlusInvGM0},
      {L::PlusM0, L::MinusM0, L::PlusInvGM0},
      {L::PlusM0, L::PlusM0, L::MinusInvGM0},
      {L::MinusInvGM0, L::PlusM0, L::PlusInvGM0, L::MinusM0},
      {L::PlusInvGM0, L::PlusInvGM0, L::MinusM0, L::PlusM0},
  };
  for (auto k : all4)
    for (int sg : {1, -1})
      for (IdentityId id : {IdentityId::LemmaA, IdentityId::AltFormEquivalence}) {
        auto c = base(id, k, sg);
        c.random_g = true;
        c.label_sets = mixed;
        c.samples = 20;
        c.tolerance = 1e-10;
        suite.push_back(c);
      }
  for (auto k : all4)
    for (int sg : {1, -1}) {
      auto c = base(IdentityId::Gauge, k, sg);
      c.random_g = true;
      c.shapes = {{2, 0, 0, 0}, {3, 0, 0, 0}, {1, 1, 0, 0}, {2, 1, 0, 0}, {2, 2, 0, 0}};
      c.samples = 20;
      c.tolerance = 1e-10;
      suite.push_back(c);
    }

  // Trigonometric Macdonald form
  for (int sg : {1, -1}) {
    auto c = base(IdentityId::MacdonaldCorrespondence, ModelCase::Trigonometric, sg);
    c.random_g = true;
    c.shapes = {{1, 0, 0, 0}, {2, 0, 0, 0}, {1, 1, 0, 0}, {2, 1, 0, 0}, {1, 2, 0, 0}, {2, 2, 0, 0}};
    c.samples = 20;
    c.tolerance = 1e-10;
    suite.push_back(c);
  }
  for (IdentityId id : {IdentityId::MacdonaldKernel, IdentityId::MacdonaldMinusKernel}) {
    auto c = base(id, ModelCase::Trigonometric, 0);
    c.random_g = true;
    c.shapes = {{1, 1, 1, 1}, {2, 1, 1, 2}, {2, 2, 1, 0}, {1, 0, 2, 0}, {2, 2, 2, 2}};
    c.samples = 15;
    c.tolerance = 1e-8;
    suite.push_back(c);
  }

  // Non-relativistic
  for (auto k : first3)
    for (int n : {2, 3, 4}) {
      auto c = base(IdentityId::NonRelConstancy, k, 0);
      c.random_g = true;
      c.mass_count = n;
      c.samples = 10;
      c.tolerance = 1e-8;
      suite.push_back(c);
    }
  {
    auto c = base(IdentityId::NonRelConstancy, ModelCase::Rational, 0);
    c.masses = {1.0, 1.0};
    c.mass_count = 2;
    c.random_g = true;
    c.samples = 10;
    c.tolerance = 1e-9;
    c.expected_constant = 0.0;
    suite.push_back(c);
  }
  for (auto k : first3) {
    auto c = base(IdentityId::NonRelConstancy, k, 0);
    c.masses = {1.0, -1.0, 0.7};
    c.mass_count = 3;
    c.random_g = true;
    c.samples = 10;
    c.tolerance = 1e-8;
    suite.push_back(c);
  }
  for (int n : {2, 3, 4}) {
    auto c = base(IdentityId::NonRelConstancy, ModelCase::Elliptic, 0);
    c.random_g = true;
    c.mass_count = n;
    c.samples = 10;
    c.tolerance = 1e-8;
    suite.push_back(c);
  }
  for (int n : {2, 3}) {
    auto c = base(IdentityId::NonRelElliptic_dA, ModelCase::Elliptic, 0);
    c.random_g = true;
    c.mass_count = n;
    c.samples = 10;
    c.tolerance = 1e-6;
    suite.push_back(c);
  }
  for (auto k : all4)
    for (int n : {2, 3}) {
      auto c = base(IdentityId::NonRelLimit, k, 0);
      c.random_g = true;
      c.mass_count = n;
      c.samples = 5;
      c.tolerance = kLimitRatioTol;
      suite.push_back(c);
    }
  return suite;
}

}  // namespace rsi
