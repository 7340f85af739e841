#include <doctest.h>

#include <numbers>

#include "helpers.hpp"
#include "rsi/sampling.hpp"

using namespace rsi;

TEST_SUITE("sampling") {

TEST_CASE("keyed streams are reproducible") {
  SampleRng a{1, 2, 3}, b{1, 2, 3}, c{1, 2, 4};
  bool differs = false;
  for (int i = 0; i < 10; ++i) {
    double u = a.uniform(), v = b.uniform(), w = c.uniform();
    CHECK(u == v);
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    differs = differs || u != w;
  }
  CHECK(differs);
  SampleRng d{7};
  for (int i = 0; i < 100; ++i) {
    double s = d.signed_uniform(0.5, 2.0);
    CHECK(std::abs(s) >= 0.5);
    CHECK(std::abs(s) < 2.0);
    CHECK(d.index(3) < 3);
  }
}

TEST_CASE("hashing") {
  CHECK(fnv1a("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a("a") == 0xaf63dc4c8601ec8cULL);
  std::vector<cplx> p{cplx(0.1, 0.2)}, q{cplx(0.1, 0.20000000000000004)};
  CHECK(sample_digest(p) == sample_digest(p));
  CHECK(sample_digest(p) != sample_digest(q));
}

TEST_CASE("positions respect the box") {
  for (auto k : testing::kCases) {
    auto m = testing::model(k);
    auto box = default_box(m);
    SampleRng rng{42, static_cast<std::uint64_t>(k)};
    for (int trial = 0; trial < 20; ++trial) {
      auto X = sample_positions(rng, 4, box);
      REQUIRE(X.size() == 4);
      for (std::size_t j = 1; j < X.size(); ++j) CHECK(X[j].real() - X[j - 1].real() >= box.min_gap);
      for (cplx x : X) CHECK(std::abs(x.imag()) <= box.max_imag);
      if (box.max_span > 0.0) CHECK(X.back().real() - X.front().real() <= box.max_span + 1e-12);
    }
    if (k == ModelCase::Trigonometric || k == ModelCase::Elliptic)
      CHECK(box.max_span < std::numbers::pi / m.params.r);
  }
}

}
