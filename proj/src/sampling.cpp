#include "rsi/sampling.hpp"

#include <cmath>
#include <cstring>
#include <numbers>

namespace rsi {

SampleRng::SampleRng(std::span<const std::uint64_t> key) {
  std::vector<std::uint32_t> words;
  words.reserve(2 * key.size());
  for (std::uint64_t k : key) {
    words.push_back(static_cast<std::uint32_t>(k & 0xffffffffULL));
    words.push_back(static_cast<std::uint32_t>(k >> 32));
  }
  std::seed_seq seq(words.begin(), words.end());
  engine_.seed(seq);
}

double SampleRng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double SampleRng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double SampleRng::signed_uniform(double lo, double hi) {
  double v = uniform(lo, hi);
  return (engine_() >> 63) ? -v : v;
}

std::size_t SampleRng::index(std::size_t n) {
  return static_cast<std::size_t>(uniform() * static_cast<double>(n)) % n;
}

std::uint64_t fnv1a(std::string_view bytes, std::uint64_t h) {
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t sample_digest(std::span<const cplx> points, std::span<const double> extra) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto feed = [&](double d) {
    char buf[sizeof(double)];
    std::memcpy(buf, &d, sizeof(double));
    h = fnv1a(std::string_view(buf, sizeof(double)), h);
  };
  for (cplx z : points) {
    feed(z.real());
    feed(z.imag());
  }
  for (double d : extra) feed(d);
  return h;
}

PositionBox default_box(const Model& model) {
  PositionBox box;
  if (model.kase == ModelCase::Trigonometric || model.kase == ModelCase::Elliptic)
    box.max_span = std::numbers::pi / model.params.r - box.min_gap;
  return box;
}

std::vector<cplx> sample_positions(SampleRng& rng, std::size_t n, const PositionBox& box) {
  std::vector<cplx> out(n);
  if (n == 0) return out;
  std::vector<double> gaps(n - 1);
  double span = 0.0;
  for (double& g : gaps) {
    g = box.min_gap + rng.uniform(0.0, box.max_extra);
    span += g;
  }
  if (box.max_span > 0.0 && span > box.max_span) {
    double base = box.min_gap * static_cast<double>(n - 1);
    double room = std::max(0.0, box.max_span - base);
    double extra = span - base;
    span = base;
    for (double& g : gaps) {
      g = box.min_gap + (extra > 0.0 ? (g - box.min_gap) * room / extra : 0.0);
      span += g - box.min_gap;
    }
  }
  double re = -span / 2.0 + rng.uniform(-box.jitter, box.jitter);
  for (std::size_t j = 0; j < n; ++j) {
    out[j] = cplx(re, rng.uniform(-box.max_imag, box.max_imag));
    if (j + 1 < n) re += gaps[j];
  }
  return out;
}

}  // namespace rsi
