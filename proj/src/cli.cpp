#include "rsi/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

#include "rsi/errors.hpp"
#include "rsi/report.hpp"
#include "rsi/verify.hpp"

namespace rsi {

namespace {

struct RunConfig {
  std::string kase = "all";
  std::string identity = "all";
  std::optional<int> N, M, Ntilde, Mtilde;
  std::optional<std::vector<double>> masses;
  std::optional<std::vector<MassLabel>> labels;
  std::optional<double> g, beta, r, a, m0;
  std::optional<int> samples;
  std::optional<std::uint64_t> seed;
  std::optional<double> tol;
  std::optional<int> trunc;
  std::string out;
  bool expect_fail = false;
  bool list = false;
  bool timing = false;
  std::string format = "json";
};

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::vector<MassLabel> parse_labels(const std::string& text) {
  std::vector<MassLabel> out;
  for (const auto& item : split(text)) {
    bool found = false;
    for (MassLabel l : kAllLabels)
      if (to_string(l) == item) {
        out.push_back(l);
        found = true;
      }
    if (!found) throw ConfigError("unknown mass label '" + item + "' (use +m0,-m0,-1/gm0,+1/gm0)");
  }
  if (out.empty()) throw ConfigError("--labels needs at least one label");
  return out;
}

// Label sets of the given size whose elliptic balancing matches `balanced`.
std::vector<std::vector<MassLabel>> matching_multisets(int size, const IdentityCase& c,
                                                        bool balanced) {
  auto all = label_multisets(size);
  if (c.kase != ModelCase::Elliptic || c.id != IdentityId::SourceIdentity) return all;
  std::vector<std::vector<MassLabel>> out;
  for (auto& l : all)
    if ((std::abs(balancing_deficit(l, c.params)) < 1e-12) == balanced) out.push_back(l);
  return out.empty() ? all : out;
}

// Config file keys use the flag names with '_' for '-'.
void load_config(const std::string& path, RunConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("config file '" + path + "': " + e.what());
  }
  if (!j.is_object()) throw ConfigError("config file must hold a JSON object");
  try {
    for (auto it = j.begin(); it != j.end(); ++it) {
      const std::string& k = it.key();
      const auto& v = it.value();
      if (k == "case") cfg.kase = v.get<std::string>();
      else if (k == "identity") cfg.identity = v.get<std::string>();
      else if (k == "N") cfg.N = v.get<int>();
      else if (k == "M") cfg.M = v.get<int>();
      else if (k == "Ntilde") cfg.Ntilde = v.get<int>();
      else if (k == "Mtilde") cfg.Mtilde = v.get<int>();
      else if (k == "masses") cfg.masses = v.get<std::vector<double>>();
      else if (k == "labels") cfg.labels = parse_labels(v.get<std::string>());
      else if (k == "g") cfg.g = v.get<double>();
      else if (k == "beta") cfg.beta = v.get<double>();
      else if (k == "r") cfg.r = v.get<double>();
      else if (k == "a") cfg.a = v.get<double>();
      else if (k == "m0") cfg.m0 = v.get<double>();
      else if (k == "samples") cfg.samples = v.get<int>();
      else if (k == "seed") cfg.seed = v.get<std::uint64_t>();
      else if (k == "tol") cfg.tol = v.get<double>();
      else if (k == "trunc") cfg.trunc = v.get<int>();
      else if (k == "out") cfg.out = v.get<std::string>();
      else if (k == "expect_fail") cfg.expect_fail = v.get<bool>();
      else if (k == "timing") cfg.timing = v.get<bool>();
      else if (k == "format") cfg.format = v.get<std::string>();
      else throw ConfigError("config file: unknown key '" + k + "'");
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config file: ") + e.what());
  }
}

bool uses_labels(IdentityId id) {
  return id == IdentityId::SourceIdentity || id == IdentityId::LemmaA ||
         id == IdentityId::AltFormEquivalence;
}

bool uses_masses(IdentityId id) {
  return id == IdentityId::WH || id == IdentityId::NonRelConstancy ||
         id == IdentityId::NonRelElliptic_dA || id == IdentityId::NonRelLimit;
}

std::string entry_key(const IdentityCase& c) {
  std::ostringstream os;
  os.precision(17);
  os << static_cast<int>(c.id) << '|' << static_cast<int>(c.kase) << '|' << c.sign << '|'
     << c.describe() << '|' << c.expect_fail << '|' << c.samples << '|' << c.tolerance << '|'
     << c.params.g << ',' << c.params.beta << ',' << c.params.r << ',' << c.params.a << ','
     << c.params.m0 << '|' << c.random_g << c.random_beta << c.random_a;
  return os.str();
}

std::vector<IdentityCase> build_suite(const RunConfig& cfg) {
  std::set<ModelCase> cases;
  for (const auto& name : split(cfg.kase)) {
    if (name == "all") {
      cases = {ModelCase::Rational, ModelCase::Trigonometric, ModelCase::Hyperbolic,
               ModelCase::Elliptic};
    } else {
      cases.insert(parse_case(name));
    }
  }
  std::set<IdentityId> ids;
  for (const auto& name : split(cfg.identity)) {
    if (name == "all") {
      auto all = all_identities();
      ids.insert(all.begin(), all.end());
    } else {
      ids.insert(parse_identity(name));
    }
  }
  if (cases.empty()) throw ConfigError("--case selects nothing");
  if (ids.empty()) throw ConfigError("--identity selects nothing");

  if (cfg.N && *cfg.N < 0) throw ConfigError("--N must be >= 0");
  for (const auto* s : {&cfg.M, &cfg.Ntilde, &cfg.Mtilde})
    if (*s && **s < 0) throw ConfigError("group sizes must be >= 0");
  if (cfg.samples && *cfg.samples < 1) throw ConfigError("--samples must be >= 1");
  if (cfg.tol && !(*cfg.tol > 0.0)) throw ConfigError("--tol must be > 0");
  if (cfg.masses) {
    if (cfg.masses->empty()) throw ConfigError("--masses needs at least one value");
    for (double m : *cfg.masses)
      if (m == 0.0 || !std::isfinite(m)) throw ConfigError("--masses must be finite and nonzero");
  }
  bool sizes_given = cfg.N || cfg.M || cfg.Ntilde || cfg.Mtilde;

  std::vector<IdentityCase> out;
  std::set<std::string> seen;
  for (IdentityCase c : default_suite()) {
    if (!cases.count(c.kase) || !ids.count(c.id)) continue;
    bool overridden = false;
    if (cfg.g) { c.params.g = *cfg.g; c.random_g = false; }
    if (cfg.beta) { c.params.beta = *cfg.beta; c.random_beta = false; }
    if (cfg.a) { c.params.a = *cfg.a; c.random_a = false; }
    if (cfg.r) c.params.r = *cfg.r;
    if (cfg.m0) c.params.m0 = *cfg.m0;
    if (cfg.samples) c.samples = *cfg.samples;
    if (cfg.tol) c.tolerance = *cfg.tol;
    if (cfg.trunc) c.truncation_L = *cfg.trunc;
    if (uses_masses(c.id)) {
      if (cfg.masses && c.id != IdentityId::NonRelLimit) {
        c.masses = *cfg.masses;
        c.mass_count = static_cast<int>(cfg.masses->size());
        overridden = true;
      } else if (cfg.N) {
        c.masses.clear();
        c.mass_count = *cfg.N;
        overridden = true;
      }
    } else if (uses_labels(c.id)) {
      if (cfg.labels) {
        c.label_sets = {*cfg.labels};
        overridden = true;
      } else if (cfg.N) {
        if (*cfg.N < 1) throw ConfigError("--N must be >= 1 for label identities");
        c.label_sets = matching_multisets(*cfg.N, c, !cfg.expect_fail);
        overridden = true;
      }
    } else if (!c.shapes.empty() && sizes_given) {
      Sizes s = c.shapes.front();
      if (cfg.N) s.N = *cfg.N;
      if (cfg.Ntilde) s.Ntilde = *cfg.Ntilde;
      if (cfg.M) s.M = *cfg.M;
      if (cfg.Mtilde) s.Mtilde = *cfg.Mtilde;
      if (s.total() < 1) throw ConfigError("group sizes select no particles");
      c.shapes = {s};
      overridden = true;
    }
    if (overridden || cfg.expect_fail) c.expect_fail = cfg.expect_fail;
    if (seen.insert(entry_key(c)).second) out.push_back(std::move(c));
  }
  return out;
}

std::string list_text() {
  std::ostringstream os;
  const ModelCase cases[] = {ModelCase::Rational, ModelCase::Trigonometric, ModelCase::Hyperbolic,
                             ModelCase::Elliptic};
  for (IdentityId id : all_identities()) {
    os << to_string(id) << '\n';
    for (ModelCase k : cases) {
      Applicability ap = applicability(id, k);
      os << "  " << to_string(k) << ": " << (ap.applicable ? "yes" : "no");
      if (!ap.requirement.empty()) os << " (" << ap.requirement << ')';
      os << '\n';
    }
  }
  return os.str();
}

int run(const RunConfig& cfg) {
  if (cfg.format != "json" && cfg.format != "text")
    throw ConfigError("--format must be json or text");
  NumericsConfig num;
  if (cfg.seed) num.rng_seed = *cfg.seed;
  if (cfg.trunc) {
    if (*cfg.trunc < 1) throw ConfigError("--trunc must be >= 1");
    num.truncation_L = *cfg.trunc;
  }
  num.validate();
  ModelParams base;
  if (cfg.g) base.g = *cfg.g;
  if (cfg.beta) base.beta = *cfg.beta;
  if (cfg.r) base.r = *cfg.r;
  if (cfg.a) base.a = *cfg.a;
  if (cfg.m0) base.m0 = *cfg.m0;

  auto suite = build_suite(cfg);
  for (const auto& c : suite) c.params.validate(c.kase);

  auto results = run_suite(suite, num);

  ReportHeader header{num.rng_seed, base, num, cfg.timing};
  std::string body = cfg.format == "json" ? render_json(header, results) : render_text(results);
  if (cfg.out.empty()) {
    std::cout << body;
    std::cout.flush();
  } else {
    std::ofstream os(cfg.out, std::ios::binary);
    if (!os) throw ConfigError("cannot write '" + cfg.out + "'");
    os << body;
    if (cfg.format == "json") std::cerr << render_text(results);
  }
  return all_passed(results) ? 0 : 1;
}

}  // namespace

int run_cli(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"Residual verification of the source and kernel identities"};
  app.set_version_flag("--version", kReportVersion);

  std::string config_path;
  std::optional<std::string> kase, identity, out, format;
  std::optional<int> N, M, Ntilde, Mtilde, samples, trunc;
  std::optional<double> g, beta, r, a, m0, tol;
  std::optional<std::uint64_t> seed;
  std::vector<double> masses;
  std::string labels;
  bool expect_fail = false, list = false, timing = false;

  app.add_option("--config", config_path, "JSON file with any of the options below");
  app.add_option("--case", kase, "rational|trig|hyperbolic|elliptic|all (comma list)");
  app.add_option("--identity", identity, "identity id or all (comma list); see --list");
  app.add_option("--N", N, "group size N (label-set size for source/lemma-a/alt-form)");
  app.add_option("--M", M);
  app.add_option("--Ntilde", Ntilde);
  app.add_option("--Mtilde", Mtilde);
  app.add_option("--masses", masses, "comma list of masses for wh and non-relativistic checks")
      ->delimiter(',');
  app.add_option("--labels", labels, "comma list of mass labels for source, lemma-a and alt-form");
  app.add_option("--g", g);
  app.add_option("--beta", beta);
  app.add_option("--r", r);
  app.add_option("--a", a);
  app.add_option("--m0", m0);
  app.add_option("--samples", samples);
  app.add_option("--seed", seed);
  app.add_option("--tol", tol, "override every tolerance");
  app.add_option("--trunc", trunc, "cap on factors per infinite product");
  app.add_option("--out", out, "report path (default: stdout)");
  app.add_option("--format", format, "json|text");
  app.add_flag("--expect-fail", expect_fail, "treat the selected entries as negative tests");
  app.add_flag("--list", list, "list identities with their per-case requirements");
  app.add_flag("--timing", timing, "record runtime_ms in the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (!config_path.empty()) load_config(config_path, cfg);
    if (kase) cfg.kase = *kase;
    if (identity) cfg.identity = *identity;
    if (N) cfg.N = N;
    if (M) cfg.M = M;
    if (Ntilde) cfg.Ntilde = Ntilde;
    if (Mtilde) cfg.Mtilde = Mtilde;
    if (!masses.empty()) cfg.masses = masses;
    if (!labels.empty()) cfg.labels = parse_labels(labels);
    if (g) cfg.g = g;
    if (beta) cfg.beta = beta;
    if (r) cfg.r = r;
    if (a) cfg.a = a;
    if (m0) cfg.m0 = m0;
    if (samples) cfg.samples = samples;
    if (seed) cfg.seed = seed;
    if (tol) cfg.tol = tol;
    if (trunc) cfg.trunc = trunc;
    if (out) cfg.out = *out;
    if (format) cfg.format = *format;
    cfg.expect_fail = cfg.expect_fail || expect_fail;
    cfg.timing = cfg.timing || timing;
    cfg.list = list;

    if (cfg.list) {
      std::cout << list_text();
      return 0;
    }
    return run(cfg);
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace rsi
