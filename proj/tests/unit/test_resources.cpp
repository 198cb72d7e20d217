#include "catnet/error.hpp"
#include "catnet/resources.hpp"
#include "catnet/rng.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace catnet;

TEST_CASE("conversion rate examples") {
  CHECK(conversion_rate(IntVectorResource{{3}}, IntVectorResource{{2}}, 2) == Rational(3, 2));
  CHECK(conversion_rate(IntVectorResource{{5, 2}}, IntVectorResource{{5, 2}}, 6) == Rational(1, 1));
  CHECK(conversion_rate(RealResource{3.0}, RealResource{2.0}, 2) == Rational(3, 2));
  CHECK(conversion_rate(RealResource{1.0}, RealResource{3.0}, 3) == Rational(1, 3));
  CHECK_THROWS_AS(conversion_rate(IntVectorResource{{3}}, IntVectorResource{{0}}, 3), Error);
  CHECK_THROWS_AS(conversion_rate(RealResource{1.0}, RealResource{0.0}, 3), Error);
}

TEST_CASE("conversion rate is monotone in the search bound and matches brute force") {
  Rng rng(21);
  for (int k = 0; k < 100; ++k) {
    const std::size_t dim = 1 + rng.below(3);
    IntVectorResource a{std::vector<std::int64_t>(dim)}, b{std::vector<std::int64_t>(dim)};
    for (std::size_t i = 0; i < dim; ++i) {
      a.value[i] = static_cast<std::int64_t>(rng.below(15));
      b.value[i] = 1 + static_cast<std::int64_t>(rng.below(6));
    }
    Rational prev(0, 1);
    for (std::int64_t n = 1; n <= 8; ++n) {
      const Rational r = conversion_rate(a, b, n);
      CHECK_FALSE(r < prev);
      prev = r;
    }
    std::vector<long long> av(a.value.begin(), a.value.end()), bv(b.value.begin(), b.value.end());
    CHECK(prev.value() == doctest::Approx(oracle::conversion_rate_bruteforce(av, bv, 8, 8 * 15)));
    const LinearMeasuring m(std::vector<double>(dim, 1.0));
    CHECK(prev.value() * m(b) <= m(a) + 1e-12);
  }
}

TEST_CASE("conversion rate is antitone in the target on the real carrier") {
  Rng rng(22);
  for (int k = 0; k < 100; ++k) {
    const RealResource a{static_cast<double>(1 + rng.below(10))};
    const double b1 = static_cast<double>(1 + rng.below(5));
    const double b2 = b1 + static_cast<double>(rng.below(5));
    CHECK_FALSE(conversion_rate(a, RealResource{b1}, 6) < conversion_rate(a, RealResource{b2}, 6));
  }
}

TEST_CASE("threshold") {
  CHECK(threshold(RealResource::unit()));
  CHECK_FALSE(threshold(RealResource{-0.1}));
  CHECK(threshold(IntVectorResource::unit(3)));
  CHECK_FALSE(threshold(IntVectorResource{{1, -1}}));
  Rng rng(23);
  const RealMeasuring m;
  for (int k = 0; k < 1000; ++k) {
    const RealResource r{rng.uniform(-5.0, 5.0)};
    CHECK(threshold(r) == (m(r) >= 0.0));
    CHECK(threshold(r) == dominates(r, RealResource::unit()));
  }
}

TEST_CASE("measuring is additive and order preserving") {
  Rng rng(24);
  const LinearMeasuring m({0.5, 2.0, 1.25});
  for (int k = 0; k < 500; ++k) {
    IntVectorResource a{{0, 0, 0}}, b{{0, 0, 0}};
    for (int i = 0; i < 3; ++i) {
      a.value[i] = static_cast<std::int64_t>(rng.below(20)) - 10;
      b.value[i] = static_cast<std::int64_t>(rng.below(20)) - 10;
    }
    CHECK(m(a + b) == doctest::Approx(m(a) + m(b)).epsilon(1e-12));
    if (dominates(a, b)) CHECK(m(a) >= m(b));
    CHECK(dominates(a, a));
    CHECK(scale(a, 3) == a + a + a);
  }
  CHECK_THROWS_AS(LinearMeasuring({1.0, 0.0}), Error);
}
