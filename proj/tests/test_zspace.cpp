#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "zalpha/zspace.hpp"

using namespace zalpha;

namespace {

ZPoint random_point(std::uint64_t seed, std::size_t n, double alpha) {
  Rng rng(seed);
  ComplexVector x(n), y(n);
  for (auto& v : x) v = rng.gaussian();
  for (auto& v : y) v = rng.gaussian();
  return make_zpoint(std::move(x), std::move(y), Alpha{alpha});
}

}  // namespace

TEST_CASE("make_zpoint validates") {
  CHECK_THROWS_AS(make_zpoint({Complex(1, 0)}, {}, Alpha{1.0}), std::invalid_argument);
  CHECK_THROWS_AS(
      make_zpoint({Complex(std::nan(""), 0)}, {Complex(0, 0)}, Alpha{1.0}),
      std::invalid_argument);
  const ZPoint p = make_zpoint({Complex(1, 0)}, {Complex(0, 1)}, Alpha{0.5});
  CHECK(p.dim() == 1);
}

TEST_CASE("znorm pinned value") {
  // oracle: sqrt(2) * (1 + ln sqrt 2); tools/oracle/pinned_values.py
  const ZPoint p = make_zpoint({Complex(1, 0), Complex(1, 0)},
                               {Complex(0, 0), Complex(0, 0)}, Alpha{1.0});
  CHECK(std::abs(znorm(p) - 1.9043426341073686447) < 1e-14);
}

TEST_CASE("znorm simple cases") {
  CHECK(znorm(zero_point(6, Alpha{1.0})) == 0.0);
  const ZPoint e1 = make_zpoint({Complex(1, 0), Complex(0, 0)},
                                {Complex(0, 0), Complex(0, 0)}, Alpha{1.0});
  CHECK(znorm(e1) == 1.0);
  // pure-y point: the omega term vanishes, leaving the plain l2 norm
  const ZPoint py = make_zpoint({Complex(0, 0)}, {Complex(3, 4)}, Alpha{2.0});
  CHECK(znorm(py) == 5.0);
}

TEST_CASE("conjugation is a bit-exact znorm isometry and involution") {
  for (int rep = 0; rep < 50; ++rep) {
    const ZPoint p = random_point(500 + rep, 33, 1.7);
    const ZPoint q = conjugate_point(p);
    CHECK(q.alpha.value == -1.7);
    CHECK(znorm(q) == znorm(p));
    const ZPoint r = conjugate_point(q);
    CHECK(r.x == p.x);
    CHECK(r.y == p.y);
    CHECK(r.alpha == p.alpha);
  }
}

TEST_CASE("add and scale enforce matching alpha and length") {
  const ZPoint p = random_point(1, 8, 1.0);
  const ZPoint q = random_point(2, 8, 2.0);
  CHECK_THROWS_AS(add(p, q), std::invalid_argument);
  CHECK_THROWS_AS(direct_sum_norm(p, q), std::invalid_argument);
  const ZPoint r = random_point(3, 4, 1.0);
  CHECK_THROWS_AS(add(p, r), std::invalid_argument);
}

TEST_CASE("scaling by two doubles znorm bit-exactly") {
  for (int rep = 0; rep < 30; ++rep) {
    const ZPoint p = random_point(700 + rep, 21, 0.9);
    const ZPoint p2 = scale(Complex(2, 0), p);
    CHECK(znorm(p2) == 2.0 * znorm(p));
  }
}

TEST_CASE("scale homogeneity within 1e-9") {
  Rng rng(4);
  for (int rep = 0; rep < 30; ++rep) {
    const ZPoint p = random_point(800 + rep, 16, 1.2);
    const Complex lambda = (0.2 + 3.0 * rng.uniform()) * rng.unimodular();
    const double lhs = znorm(scale(lambda, p));
    const double rhs = std::abs(lambda) * znorm(p);
    CHECK(std::abs(lhs - rhs) <= 1e-9 * rhs);
  }
}

TEST_CASE("direct_sum_norm is the sum of the two norms") {
  const ZPoint p = random_point(11, 10, 1.0);
  const ZPoint q = random_point(12, 10, 1.0);
  CHECK(direct_sum_norm(p, q) == znorm(p) + znorm(q));
}

TEST_CASE("pad preserves znorm bit-exactly") {
  const ZPoint p = random_point(13, 9, 1.4);
  const ZPoint q = pad(p, 17);
  CHECK(q.dim() == 17);
  CHECK(znorm(q) == znorm(p));
  CHECK_THROWS_AS(pad(p, 4), std::invalid_argument);
  const ZPoint same = pad(p, 9);
  CHECK(same.x == p.x);
}
