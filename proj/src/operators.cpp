#include "rsi/operators.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "rsi/errors.hpp"
#include "rsi/specfun.hpp"

namespace rsi {

namespace {

using Eval = std::function<cplx(std::span<const cplx>)>;

cplx ratio(cplx num, cplx den) {
  if (den == 0.0) throw PoleError("operator coefficient: zero denominator");
  return num / den;
}

cplx continued_value(const Eval& g, std::span<const cplx> X, const Shift& sh,
                     const ApplyOptions& opts) {
  std::vector<cplx> Y(X.begin(), X.end());
  cplx x0 = X[sh.index];
  cplx target = sh.multiplicative ? x0 * sh.displacement : x0 + sh.displacement;
  auto at = [&](double t) {
    Y[sh.index] = t == 1.0 ? target : x0 + t * (target - x0);
    return g(Y);
  };
  cplx prev = at(0.0);
  if (prev == 0.0) return at(1.0);

  std::function<cplx(double, double, cplx, int)> step = [&](double t0, double t1, cplx from,
                                                           int depth) -> cplx {
    cplx u = at(t1);
    if (u == 0.0) return u;
    if ((u * std::conj(from)).real() < 0.0) u = -u;
    double ang = std::abs(std::arg(u / from));
    if (ang > 0.6 && depth < opts.max_bisections) {
      double tm = 0.5 * (t0 + t1);
      cplx mid = step(t0, tm, from, depth + 1);
      return step(tm, t1, mid, depth + 1);
    }
    if (ang > 1.3) throw BranchError("continuation along shift path is ambiguous");
    return u;
  };

  int n = std::max(1, opts.continuation_steps);
  double t = 0.0;
  for (int k = 1; k <= n; ++k) {
    double t1 = static_cast<double>(k) / n;
    prev = step(t, t1, prev, 0);
    t = t1;
  }
  return prev;
}

cplx shifted_factor(const OperatorTerm& term, const ConfigFunction* f, std::span<const cplx> X,
                    const ApplyOptions& opts) {
  bool unit_right = term.right.is_unit();
  bool unit_f = f == nullptr || f->is_unit();
  if (unit_right && unit_f) return 1.0;
  Eval g = [&](std::span<const cplx> Y) {
    cplx v = unit_right ? cplx(1.0) : term.right(Y);
    if (!unit_f) v *= (*f)(Y);
    return v;
  };
  if (opts.branch == BranchPolicy::Continued) return continued_value(g, X, term.shift, opts);
  auto Y = shifted_point(term.shift, X);
  return g(Y);
}

void check_arity(const DifferenceOperator& op, std::span<const cplx> X) {
  if (X.size() != op.arity) throw ConfigError("apply: configuration size does not match operator arity");
}

}  // namespace

std::vector<cplx> shifted_point(const Shift& shift, std::span<const cplx> X) {
  std::vector<cplx> Y(X.begin(), X.end());
  if (shift.index >= Y.size()) throw ConfigError("shift index out of range");
  if (shift.multiplicative)
    Y[shift.index] *= shift.displacement;
  else
    Y[shift.index] += shift.displacement;
  return Y;
}

std::vector<cplx> apply_terms(const DifferenceOperator& op, const ConfigFunction& f,
                              std::span<const cplx> X, const ApplyOptions& opts) {
  check_arity(op, X);
  std::vector<cplx> out;
  out.reserve(op.terms.size());
  for (std::size_t i = 0; i < op.terms.size(); ++i) {
    const OperatorTerm& term = op.terms[i];
    try {
      cplx v = term.prefactor;
      if (!term.left.is_unit()) v *= term.left(X);
      v *= shifted_factor(term, &f, X, opts);
      out.push_back(v);
    } catch (const PoleError& e) {
      throw PoleError(std::string(e.what()) + " (term " + std::to_string(i) + ")");
    } catch (const BranchError& e) {
      throw BranchError(std::string(e.what()) + " (term " + std::to_string(i) + ")");
    } catch (const DomainError& e) {
      throw DomainError(std::string(e.what()) + " (term " + std::to_string(i) + ")");
    }
  }
  return out;
}

cplx apply(const DifferenceOperator& op, const ConfigFunction& f, std::span<const cplx> X,
           const ApplyOptions& opts) {
  cplx total = 0.0;
  for (cplx v : apply_terms(op, f, X, opts)) total += v;
  if (op.constant_term != 0.0) total += op.constant_term * f(X);
  return total;
}

cplx term_coefficient(const OperatorTerm& term, std::span<const cplx> X, const ApplyOptions& opts) {
  cplx v = term.prefactor;
  if (!term.left.is_unit()) v *= term.left(X);
  return v * shifted_factor(term, nullptr, X, opts);
}

// ---------------------------------------------------------------------------

DifferenceOperator embed(const DifferenceOperator& op, std::size_t arity,
                         std::vector<std::size_t> index_map) {
  if (index_map.size() != op.arity) throw ConfigError("embed: index map size mismatch");
  for (std::size_t i : index_map)
    if (i >= arity) throw ConfigError("embed: index out of range");
  auto wrap = [&](const ConfigFunction& fn) -> ConfigFunction {
    if (fn.is_unit()) return ConfigFunction{arity, {}};
    auto inner = fn.eval;
    auto map = index_map;
    return ConfigFunction{arity, [inner, map](std::span<const cplx> X) {
                            std::vector<cplx> local(map.size());
                            for (std::size_t i = 0; i < map.size(); ++i) local[i] = X[map[i]];
                            return inner(local);
                          }};
  };
  DifferenceOperator out{arity, {}, op.constant_term};
  for (const auto& t : op.terms) {
    Shift sh = t.shift;
    sh.index = index_map.at(t.shift.index);
    out.terms.push_back({t.prefactor, wrap(t.left), sh, wrap(t.right)});
  }
  return out;
}

DifferenceOperator negate_coordinates(const DifferenceOperator& op) {
  auto wrap = [](const ConfigFunction& fn) -> ConfigFunction {
    if (fn.is_unit()) return fn;
    auto inner = fn.eval;
    return ConfigFunction{fn.arity, [inner](std::span<const cplx> X) {
                            std::vector<cplx> neg(X.begin(), X.end());
                            for (cplx& z : neg) z = -z;
                            return inner(neg);
                          }};
  };
  DifferenceOperator out{op.arity, {}, op.constant_term};
  for (const auto& t : op.terms) {
    if (t.shift.multiplicative) throw ConfigError("negate_coordinates: multiplicative shift");
    Shift sh = t.shift;
    sh.displacement = -sh.displacement;
    out.terms.push_back({t.prefactor, wrap(t.left), sh, wrap(t.right)});
  }
  return out;
}

DifferenceOperator scale(const DifferenceOperator& op, cplx factor) {
  DifferenceOperator out = op;
  for (auto& t : out.terms) t.prefactor *= factor;
  out.constant_term *= factor;
  return out;
}

DifferenceOperator sum(const DifferenceOperator& a, const DifferenceOperator& b) {
  if (a.arity != b.arity) throw ConfigError("sum: operators act on different arities");
  DifferenceOperator out = a;
  out.terms.insert(out.terms.end(), b.terms.begin(), b.terms.end());
  out.constant_term += b.constant_term;
  return out;
}

DifferenceOperator add_constant(const DifferenceOperator& op, cplx c) {
  DifferenceOperator out = op;
  out.constant_term += c;
  return out;
}

// ---------------------------------------------------------------------------

cplx S_prefactor(double m, const Model& model) {
  double g = model.params.g, b = model.params.beta;
  return s_eval(model, I * g * b * m) / (I * g * b * s_eval(model, 0.0, 1));
}

namespace {

// prod_{K != J} h(X_J - X_K, K)
template <class H>
ConfigFunction pair_product(std::size_t arity, std::size_t J, H h) {
  return ConfigFunction{arity, [arity, J, h](std::span<const cplx> X) {
                          cplx v = 1.0;
                          for (std::size_t K = 0; K < arity; ++K)
                            if (K != J) v *= h(X[J] - X[K], K);
                          return v;
                        }};
}

DifferenceOperator labelled_operator(int sign, const std::vector<MassLabel>& labels,
                                     const Model& model, bool alternative, bool conjugated,
                                     BranchPolicy branch) {
  std::size_t n = labels.size();
  const ModelParams& p = model.params;
  double sg = sign >= 0 ? 1.0 : -1.0;
  DifferenceOperator op{n, {}, 0.0};
  for (std::size_t J = 0; J < n; ++J) {
    double mJ = mass_value(labels[J], p);
    OperatorTerm term;
    term.prefactor = S_prefactor(mJ, model);
    term.shift = Shift{J, -sg * I * p.beta / mJ, false};
    if (conjugated || alternative) {
      auto factor = [model, labels, J, p](double s, bool root) {
        return [model, labels, J, p, s, root](cplx x, std::size_t K) {
          double xi = xi_offset(labels[J], labels[K], p);
          double mK = mass_value(labels[K], p);
          cplx r = ratio(s_eval(model, x + s * I * xi + s * I * p.g * p.beta * mK),
                         s_eval(model, x + s * I * xi));
          return root ? std::sqrt(r) : r;
        };
      };
      if (conjugated) {
        term.left = pair_product(n, J, factor(-sg, false));
      } else {
        term.left = pair_product(n, J, factor(-sg, true));
        term.right = pair_product(n, J, factor(sg, true));
      }
    } else {
      auto fpm = [model, labels, J, branch](int s) {
        return [model, labels, J, branch, s](cplx x, std::size_t K) {
          return f_pm(s, x, labels[J], labels[K], model, branch);
        };
      };
      term.left = pair_product(n, J, fpm(-sign));
      term.right = pair_product(n, J, fpm(sign));
    }
    op.terms.push_back(std::move(term));
  }
  return op;
}

// Coefficients of the deformed operators. `root` selects the square-root
// (S) or the gauged (A) form.
struct DeformedCoeffs {
  Model model;
  int N, Nt;

  cplx s(cplx x) const { return s_eval(model, x); }

  // A^sigma_j (root) or its gauged counterpart with the same sigma convention
  cplx A(std::span<const cplx> X, std::size_t j, double sigma, bool root) const {
    double g = model.params.g, b = model.params.beta;
    cplx v = 1.0;
    for (int jp = 0; jp < N; ++jp) {
      if (static_cast<std::size_t>(jp) == j) continue;
      cplx d = X[j] - X[jp];
      cplx r = ratio(s(d + sigma * I * g * b), s(d));
      v *= root ? std::sqrt(r) : r;
    }
    for (int k = 0; k < Nt; ++k) {
      cplx d = X[j] - X[N + k];
      cplx r = ratio(s(d + sigma * I * g * b / 2.0 - sigma * I * b / 2.0),
                     s(d + sigma * I * g * b / 2.0 + sigma * I * b / 2.0));
      v *= root ? std::sqrt(r) : r;
    }
    return v;
  }

  cplx B(std::span<const cplx> X, std::size_t k, double sigma, bool root) const {
    double g = model.params.g, b = model.params.beta;
    cplx v = 1.0;
    std::size_t kk = N + k;
    for (int kp = 0; kp < Nt; ++kp) {
      if (static_cast<std::size_t>(kp) == k) continue;
      cplx d = X[kk] - X[N + kp];
      cplx r = ratio(s(d - sigma * I * b), s(d));
      v *= root ? std::sqrt(r) : r;
    }
    for (int j = 0; j < N; ++j) {
      cplx d = X[kk] - X[j];
      cplx r = ratio(s(d - sigma * I * b / 2.0 + sigma * I * g * b / 2.0),
                     s(d - sigma * I * b / 2.0 - sigma * I * g * b / 2.0));
      v *= root ? std::sqrt(r) : r;
    }
    return v;
  }
};

DifferenceOperator deformed_operator(int sign, int N, int Nt, const Model& model, bool gauged) {
  if (N < 0 || Nt < 0) throw ConfigError("operator sizes must be >= 0");
  auto n = static_cast<std::size_t>(N + Nt);
  double g = model.params.g, b = model.params.beta;
  double sg = sign >= 0 ? 1.0 : -1.0;
  DeformedCoeffs c{model, N, Nt};
  cplx sp0 = s_eval(model, 0.0, 1);
  cplx pre_x = gauged ? cplx(1.0) : s_eval(model, I * g * b) / (I * g * b * sp0);
  cplx pre_xt = gauged ? -s_eval(model, I * b) / s_eval(model, I * g * b)
                       : -s_eval(model, I * b) / (I * g * b * sp0);
  DifferenceOperator op{n, {}, 0.0};
  for (int j = 0; j < N; ++j) {
    auto jj = static_cast<std::size_t>(j);
    OperatorTerm t;
    t.prefactor = pre_x;
    t.shift = Shift{jj, -sg * I * b, false};
    // gauged coefficient carries -+ with the S-form convention sigma = -+
    t.left = ConfigFunction{n, [c, jj, sg, gauged](std::span<const cplx> X) {
                              return c.A(X, jj, -sg, !gauged);
                            }};
    if (!gauged)
      t.right = ConfigFunction{n, [c, jj, sg](std::span<const cplx> X) { return c.A(X, jj, sg, true); }};
    op.terms.push_back(std::move(t));
  }
  for (int k = 0; k < Nt; ++k) {
    auto kk = static_cast<std::size_t>(k);
    OperatorTerm t;
    t.prefactor = pre_xt;
    t.shift = Shift{static_cast<std::size_t>(N) + kk, sg * I * g * b, false};
    t.left = ConfigFunction{n, [c, kk, sg, gauged](std::span<const cplx> X) {
                              return c.B(X, kk, -sg, !gauged);
                            }};
    if (!gauged)
      t.right = ConfigFunction{n, [c, kk, sg](std::span<const cplx> X) { return c.B(X, kk, sg, true); }};
    op.terms.push_back(std::move(t));
  }
  return op;
}

}  // namespace

DifferenceOperator make_S_general(int sign, std::vector<MassLabel> labels, const Model& model,
                                  BranchPolicy branch) {
  return labelled_operator(sign, labels, model, false, false, branch);
}

DifferenceOperator make_S_alternative(int sign, std::vector<MassLabel> labels, const Model& model) {
  return labelled_operator(sign, labels, model, true, false, BranchPolicy::PrincipalSqrt);
}

DifferenceOperator make_conjugated_coefficients(int sign, std::vector<MassLabel> labels,
                                                const Model& model) {
  return labelled_operator(sign, labels, model, false, true, BranchPolicy::PrincipalSqrt);
}

DifferenceOperator make_S_standard(int sign, int N, const Model& model) {
  return deformed_operator(sign, N, 0, model, false);
}

DifferenceOperator make_S_deformed(int sign, int N, int Nt, const Model& model) {
  return deformed_operator(sign, N, Nt, model, false);
}

DifferenceOperator make_A(int sign, int N, const Model& model) {
  return deformed_operator(sign, N, 0, model, true);
}

DifferenceOperator make_A_deformed(int sign, int N, int Nt, const Model& model) {
  return deformed_operator(sign, N, Nt, model, true);
}

// ---------------------------------------------------------------------------

MacdonaldParams macdonald_params(const Model& model) {
  if (model.kase != ModelCase::Trigonometric)
    throw ConfigError("Macdonald form is defined for the trigonometric case only");
  double r = model.params.r, b = model.params.beta, g = model.params.g;
  return {std::exp(2.0 * r * b), std::exp(-2.0 * r * g * b)};
}

std::vector<cplx> macdonald_coordinates(std::span<const cplx> x, std::span<const cplx> xt,
                                        const Model& model) {
  auto [q, t] = macdonald_params(model);
  double r = model.params.r;
  std::vector<cplx> z;
  z.reserve(x.size() + xt.size());
  for (cplx u : x) z.push_back(std::exp(2.0 * I * r * u) / std::sqrt(t));
  for (cplx u : xt) z.push_back(std::exp(2.0 * I * r * u) / std::sqrt(q));
  return z;
}

namespace {

struct MacdonaldCoeffs {
  int N, Nt;
  double q, t;
  int sign;

  cplx zterm(std::span<const cplx> Z, std::size_t j) const {
    cplx v = 1.0;
    cplx zj = Z[j];
    for (int jp = 0; jp < N; ++jp) {
      if (static_cast<std::size_t>(jp) == j) continue;
      cplx w = Z[jp];
      v *= sign > 0 ? ratio(zj - t * w, zj - w) : ratio(t * zj - w, t * zj - t * w);
    }
    for (int k = 0; k < Nt; ++k) {
      cplx w = Z[N + k];
      v *= sign > 0 ? ratio(zj - q * w, zj - w) : ratio(t * zj - w, t * zj - q * w);
    }
    return v;
  }

  cplx ztterm(std::span<const cplx> Z, std::size_t k) const {
    cplx v = 1.0;
    cplx zk = Z[N + k];
    for (int kp = 0; kp < Nt; ++kp) {
      if (static_cast<std::size_t>(kp) == k) continue;
      cplx w = Z[N + kp];
      v *= sign > 0 ? ratio(zk - q * w, zk - w) : ratio(q * zk - w, q * zk - q * w);
    }
    for (int j = 0; j < N; ++j) {
      cplx w = Z[j];
      v *= sign > 0 ? ratio(zk - t * w, zk - w) : ratio(q * zk - w, q * zk - t * w);
    }
    return v;
  }
};

DifferenceOperator macdonald_operator(int sign, int N, int Nt, const Model& model, bool xspace) {
  if (N < 0 || Nt < 0) throw ConfigError("operator sizes must be >= 0");
  auto [q, t] = macdonald_params(model);
  auto n = static_cast<std::size_t>(N + Nt);
  MacdonaldCoeffs c{N, Nt, q, t, sign >= 0 ? 1 : -1};
  double b = model.params.beta, g = model.params.g;
  Model m = model;
  auto to_z = [m, N](std::span<const cplx> X) {
    return macdonald_coordinates(X.subspan(0, static_cast<std::size_t>(N)),
                                 X.subspan(static_cast<std::size_t>(N)), m);
  };
  cplx pre_t = sign >= 0 ? (1.0 - q) / (1.0 - t) : t * (1.0 - q) / (q * (1.0 - t));
  DifferenceOperator op{n, {}, 0.0};
  for (int j = 0; j < N; ++j) {
    auto jj = static_cast<std::size_t>(j);
    OperatorTerm term;
    if (xspace) {
      term.shift = Shift{jj, sign >= 0 ? -I * b : I * b, false};
      term.left = ConfigFunction{n, [c, jj, to_z](std::span<const cplx> X) {
                                   auto Z = to_z(X);
                                   return c.zterm(Z, jj);
                                 }};
    } else {
      term.shift = Shift{jj, sign >= 0 ? q : 1.0 / q, true};
      term.left = ConfigFunction{n, [c, jj](std::span<const cplx> Z) { return c.zterm(Z, jj); }};
    }
    op.terms.push_back(std::move(term));
  }
  for (int k = 0; k < Nt; ++k) {
    auto kk = static_cast<std::size_t>(k);
    OperatorTerm term;
    term.prefactor = pre_t;
    std::size_t idx = static_cast<std::size_t>(N) + kk;
    if (xspace) {
      term.shift = Shift{idx, sign >= 0 ? I * g * b : -I * g * b, false};
      term.left = ConfigFunction{n, [c, kk, to_z](std::span<const cplx> X) {
                                   auto Z = to_z(X);
                                   return c.ztterm(Z, kk);
                                 }};
    } else {
      term.shift = Shift{idx, sign >= 0 ? t : 1.0 / t, true};
      term.left = ConfigFunction{n, [c, kk](std::span<const cplx> Z) { return c.ztterm(Z, kk); }};
    }
    op.terms.push_back(std::move(term));
  }
  return op;
}

}  // namespace

DifferenceOperator make_macdonald(int sign, int N, int Nt, const Model& model) {
  return macdonald_operator(sign, N, Nt, model, false);
}

DifferenceOperator make_macdonald_x(int sign, int N, int Nt, const Model& model) {
  return macdonald_operator(sign, N, Nt, model, true);
}

double macdonald_gauge_factor(int sign, int N, int Nt, const Model& model) {
  auto [q, t] = macdonald_params(model);
  double e = sign >= 0 ? -1.0 : 1.0;
  return std::pow(t, e * (N - 1) / 2.0) * std::pow(q, e * Nt / 2.0);
}

}  // namespace rsi
