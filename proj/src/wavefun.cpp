#include "rsi/wavefun.hpp"

#include <cmath>
#include <string>

#include "rsi/errors.hpp"
#include "rsi/specfun.hpp"

namespace rsi {

namespace {

cplx checked_ratio(cplx num, cplx den, const char* what) {
  if (den == 0.0) throw PoleError(std::string(what) + ": zero denominator");
  return num / den;
}

std::string pair_tag(std::size_t j, std::size_t k) {
  return " (pair " + std::to_string(j) + "," + std::to_string(k) + ")";
}

template <class E>
[[noreturn]] void rethrow_tagged(const E& e, const std::string& tag) {
  throw E(e.what() + tag);
}

template <class F>
auto tagged(const std::string& tag, F&& f) {
  try {
    return f();
  } catch (const PoleError& e) {
    rethrow_tagged(e, tag);
  } catch (const DomainError& e) {
    rethrow_tagged(e, tag);
  } catch (const BranchError& e) {
    rethrow_tagged(e, tag);
  } catch (const TruncationError& e) {
    rethrow_tagged(e, tag);
  }
}

cplx psi_pair(cplx x, double g, double beta, const Model& model, PsiVariant variant) {
  auto G = [&](cplx u) {
    return variant == PsiVariant::Plain ? gamma_main(model, u, beta)
                                        : gamma_main(model, -u, -beta);
  };
  cplx num = G(x + I * g * beta - I * beta / 2.0) * G(x + I * beta / 2.0);
  cplx den = G(x - I * g * beta + I * beta / 2.0) * G(x - I * beta / 2.0);
  return std::sqrt(checked_ratio(num, den, "Psi_N"));
}

}  // namespace

cplx f_pm(int sign, cplx x, MassLabel m, MassLabel mprime, const Model& model,
          BranchPolicy branch) {
  LabelRelation rel = relation(m, mprime);
  if (rel == LabelRelation::Negated || rel == LabelRelation::Inverse) return 1.0;
  const ModelParams& p = model.params;
  double mv = mass_value(m, p), mpv = mass_value(mprime, p);
  double sg = sign >= 0 ? 1.0 : -1.0;
  cplx num = s_eval(model, x + sg * I * p.g * p.beta * (mv + mpv) / 2.0);
  cplx den = s_eval(model, x + sg * I * p.g * p.beta * (mv - mpv) / 2.0);
  cplx radicand = checked_ratio(num, den, "f_pm");
  if (branch == BranchPolicy::SquaredPair) return radicand;
  return std::sqrt(radicand);
}

cplx phi_pair(cplx x, MassLabel m, MassLabel mprime, const Model& model) {
  const ModelParams& p = model.params;
  double g = p.g, b = p.beta;
  double mv = mass_value(m, p);
  cplx alpha = b / mv;
  auto G = [&](cplx u) { return gamma_main(model, u, alpha); };
  switch (relation(m, mprime)) {
    case LabelRelation::Same: {
      cplx num = G(x + I * g * b * mv - I * b / (2.0 * mv)) * G(x + I * b / (2.0 * mv));
      cplx den = G(x - I * g * b * mv + I * b / (2.0 * mv)) * G(x - I * b / (2.0 * mv));
      return std::sqrt(checked_ratio(num, den, "phi"));
    }
    case LabelRelation::Negated:
      return checked_ratio(G(x - I * g * b * mv / 2.0), G(x + I * g * b * mv / 2.0), "phi");
    case LabelRelation::Inverse:
      return s_eval(model, x);
    case LabelRelation::NegatedInverse: {
      double m0 = p.m0;
      cplx sh = I * g * b * m0 / 2.0 - I * b / (2.0 * m0);
      cplx prod = s_eval(model, x + sh) * s_eval(model, x - sh);
      if (prod == 0.0) throw PoleError("phi: zero of s in the fourth branch");
      return 1.0 / std::sqrt(prod);
    }
  }
  return 0.0;
}

cplx phi_pair_mform(cplx x, MassLabel m, const Model& model) {
  const ModelParams& p = model.params;
  double mv = mass_value(m, p);
  cplx sh = I * p.g * p.beta * mv / 2.0 - I * p.beta / (2.0 * mv);
  cplx prod = s_eval(model, x + sh) * s_eval(model, x - sh);
  if (prod == 0.0) throw PoleError("phi: zero of s in the fourth branch");
  return 1.0 / std::sqrt(prod);
}

cplx build_Phi(std::span<const cplx> X, std::span<const MassLabel> labels, const Model& model) {
  if (X.size() != labels.size()) throw ConfigError("build_Phi: size mismatch");
  cplx v = 1.0;
  for (std::size_t j = 0; j < X.size(); ++j)
    for (std::size_t k = j + 1; k < X.size(); ++k) {
      if (X[j] == X[k]) throw DomainError("build_Phi: coinciding positions" + pair_tag(j, k));
      v *= tagged(pair_tag(j, k), [&] { return phi_pair(X[j] - X[k], labels[j], labels[k], model); });
    }
  return v;
}

cplx build_Phi(const ParticleConfig& config, const Model& model) {
  return build_Phi(config.positions, config.labels, model);
}

cplx build_PsiN(std::span<const cplx> xs, double g, double beta, const Model& model,
                PsiVariant variant) {
  cplx v = 1.0;
  for (std::size_t j = 0; j < xs.size(); ++j)
    for (std::size_t k = j + 1; k < xs.size(); ++k)
      v *= tagged(pair_tag(j, k), [&] { return psi_pair(xs[j] - xs[k], g, beta, model, variant); });
  return v;
}

cplx build_Psi_deformed(std::span<const cplx> x, std::span<const cplx> xt, const Model& model) {
  double g = model.params.g, b = model.params.beta;
  cplx v = build_PsiN(x, g, b, model) * build_PsiN(xt, 1.0 / g, -g * b, model);
  cplx sh = I * g * b / 2.0 - I * b / 2.0;
  for (cplx xj : x)
    for (cplx xk : xt) {
      cplx prod = s_eval(model, xj - xk + sh) * s_eval(model, xj - xk - sh);
      if (prod == 0.0) throw PoleError("Psi_{N,N~}: zero of s");
      v /= std::sqrt(prod);
    }
  return v;
}

cplx build_kernel(const KernelSpec& spec, const KernelArgs& args, const Model& model) {
  double g = model.params.g, b = model.params.beta;
  auto shifted = [&](const std::vector<cplx>& u) {
    std::vector<cplx> out(u);
    for (cplx& z : out) z += spec.v;
    return out;
  };
  auto negated = [](const std::vector<cplx>& u) {
    std::vector<cplx> out(u);
    for (cplx& z : out) z = -z;
    return out;
  };
  auto G = [&](cplx u, cplx alpha) { return gamma_main(model, u, alpha); };
  auto check_sizes = [&](std::size_t n, std::size_t nt, std::size_t m, std::size_t mt) {
    if (args.x.size() != n || args.xt.size() != nt || args.y.size() != m || args.yt.size() != mt)
      throw ConfigError("build_kernel: coordinate counts do not match the kernel sizes");
  };
  auto N = static_cast<std::size_t>(spec.N), Nt = static_cast<std::size_t>(spec.Ntilde);
  auto M = static_cast<std::size_t>(spec.M), Mt = static_cast<std::size_t>(spec.Mtilde);

  switch (spec.kind) {
    case KernelKind::Phi: {
      check_sizes(N, 0, 0, 0);
      std::vector<MassLabel> labels(N, MassLabel::PlusM0);
      return build_Phi(shifted(args.x), labels, model);
    }
    case KernelKind::PhiNonRel: {
      check_sizes(N, 0, 0, 0);
      std::vector<double> masses(N, 1.0);
      return build_phi_nr(shifted(args.x), masses, model).value;
    }
    case KernelKind::PsiN:
      check_sizes(N, 0, 0, 0);
      return build_PsiN(shifted(args.x), g, b, model);
    case KernelKind::PsiMinus:
      check_sizes(N, 0, 0, 0);
      return build_PsiN(shifted(args.x), g, b, model, PsiVariant::Reflected);
    case KernelKind::FNM: {
      check_sizes(N, 0, M, 0);
      auto x = shifted(args.x);
      cplx v = build_PsiN(x, g, b, model) * build_PsiN(negated(args.y), g, b, model);
      for (cplx xj : x)
        for (cplx yk : args.y)
          v *= checked_ratio(G(xj - yk - I * g * b / 2.0, b), G(xj - yk + I * g * b / 2.0, b), "F_NM");
      return v;
    }
    case KernelKind::FTilde: {
      check_sizes(N, 0, M, 0);
      auto x = shifted(args.x);
      cplx v = build_PsiN(x, g, b, model) * build_PsiN(args.y, 1.0 / g, g * b, model);
      for (cplx xj : x)
        for (cplx yk : args.y) v *= s_eval(model, xj - yk);
      return v;
    }
    case KernelKind::PsiDeformed:
      check_sizes(N, Nt, 0, 0);
      return build_Psi_deformed(shifted(args.x), shifted(args.xt), model);
    case KernelKind::FDeformed: {
      check_sizes(N, Nt, M, Mt);
      auto x = shifted(args.x), xt = shifted(args.xt);
      cplx v = build_Psi_deformed(x, xt, model) *
               build_Psi_deformed(negated(args.y), negated(args.yt), model);
      for (cplx xj : x) {
        for (cplx yk : args.y)
          v *= checked_ratio(G(xj - yk - I * g * b / 2.0, b), G(xj - yk + I * g * b / 2.0, b),
                             "F_{N,N~,M,M~}");
        for (cplx yk : args.yt) v *= s_eval(model, xj - yk);
      }
      cplx alpha = spec.printed_cor5_factor ? cplx(g * b) : cplx(-g * b);
      for (cplx xj : xt) {
        for (cplx yk : args.y) v *= s_eval(model, xj - yk);
        for (cplx yk : args.yt)
          v *= checked_ratio(G(xj - yk + I * b / 2.0, alpha), G(xj - yk - I * b / 2.0, alpha),
                             "F_{N,N~,M,M~}");
      }
      return v;
    }
    case KernelKind::Gauged: {
      check_sizes(N, Nt, M, Mt);
      auto x = shifted(args.x), xt = shifted(args.xt);
      cplx v = 1.0;
      for (cplx xj : x) {
        for (cplx yk : args.y)
          v *= checked_ratio(G(xj + yk - I * g * b / 2.0, b), G(xj + yk + I * g * b / 2.0, b),
                             "gauged kernel");
        for (cplx yk : args.yt) v *= s_eval(model, xj + yk);
      }
      cplx alpha = spec.printed_cor5_factor ? cplx(g * b) : cplx(-g * b);
      for (cplx xj : xt) {
        for (cplx yk : args.y) v *= s_eval(model, xj + yk);
        for (cplx yk : args.yt)
          v *= checked_ratio(G(xj + yk + I * b / 2.0, alpha), G(xj + yk - I * b / 2.0, alpha),
                             "gauged kernel");
      }
      return v;
    }
  }
  return 0.0;
}

NonRelValue build_phi_nr(std::span<const cplx> X, std::span<const double> masses,
                         const Model& model) {
  if (X.size() != masses.size()) throw ConfigError("build_phi_nr: size mismatch");
  std::size_t n = X.size();
  double g = model.params.g;
  NonRelValue out{1.0, std::vector<cplx>(n, 0.0), std::vector<cplx>(n, 0.0)};
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j + 1; k < n; ++k) {
      cplx d = X[j] - X[k];
      cplx s0 = s_eval(model, d, 0);
      if (s0 == 0.0) throw PoleError("build_phi_nr: zero separation" + pair_tag(j, k));
      double e = masses[j] * masses[k] * g;
      out.value *= std::exp(e * std::log(s0));
      cplx L1 = s_eval(model, d, 1) / s0;
      cplx V = L1 * L1 - s_eval(model, d, 2) / s0;
      out.dlog[j] += e * L1;
      out.dlog[k] -= e * L1;
      out.d2log[j] -= e * V;
      out.d2log[k] -= e * V;
    }
  return out;
}

cplx potential_V(const Model& model, cplx x) {
  cplx s0 = s_eval(model, x, 0);
  if (s0 == 0.0) throw PoleError("potential_V: pole at a zero of s");
  cplx L1 = s_eval(model, x, 1) / s0;
  return L1 * L1 - s_eval(model, x, 2) / s0;
}

}  // namespace rsi
