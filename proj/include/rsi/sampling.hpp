#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "rsi/model.hpp"

namespace rsi {

/// Deterministic generator keyed by a tuple of integers. The same key gives
/// the same stream on every platform (mt19937_64 seeded through seed_seq,
/// doubles from the top 53 bits).
class SampleRng {
 public:
  explicit SampleRng(std::span<const std::uint64_t> key);
  SampleRng(std::initializer_list<std::uint64_t> key)
      : SampleRng(std::span<const std::uint64_t>(key.begin(), key.size())) {}

  double uniform();  // [0, 1)
  double uniform(double lo, double hi);
  /// Uniform magnitude in [lo, hi) with a random sign.
  double signed_uniform(double lo, double hi);
  std::size_t index(std::size_t n);
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[index(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

std::uint64_t fnv1a(std::string_view bytes, std::uint64_t h = 0xcbf29ce484222325ULL);
/// Digest of a sample: positions followed by extra real parameters.
std::uint64_t sample_digest(std::span<const cplx> points, std::span<const double> extra = {});

struct PositionBox {
  double min_gap = 0.3;    // minimal real separation of neighbours
  double max_extra = 0.3;  // random extra per gap
  double max_imag = 0.1;
  double max_span = 0.0;   // 0: unbounded
  double jitter = 0.2;     // random offset of the centre
};

/// Sample box for `model`: trigonometric and elliptic spans stay below the
/// real period pi/r minus one gap.
PositionBox default_box(const Model& model);

/// n points with increasing real parts; callers shuffle as needed.
std::vector<cplx> sample_positions(SampleRng& rng, std::size_t n, const PositionBox& box);

}  // namespace rsi
