#include <doctest.h>

#include <random>

#include "wreath/algebra.hpp"
#include "wreath/error.hpp"
#include "wreath/jm.hpp"

using namespace wreath;
using R = Rational;

TEST_SUITE_BEGIN("algebra");

TEST_CASE("rational field axioms on random values") {
  std::mt19937 rng(99);
  auto rnd = [&] {
    long long num = static_cast<long long>(rng() % 41) - 20;
    long long den = 1 + rng() % 19;
    return R(num) / R(den);
  };
  for (int trial = 0; trial < 200; ++trial) {
    R a = rnd(), b = rnd(), c = rnd();
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + R(0) == a);
    CHECK(a * R(1) == a);
    if (a != 0) CHECK(a * (R(1) / a) == R(1));
  }
}

TEST_CASE("prime field axioms for p = 2, 3, 101") {
  std::mt19937 rng(100);
  for (std::uint32_t p : {2u, 3u, 101u}) {
    for (int trial = 0; trial < 200; ++trial) {
      Fp a(static_cast<std::int64_t>(rng() % 2000) - 1000, p);
      Fp b(static_cast<std::int64_t>(rng() % 2000) - 1000, p);
      Fp c(static_cast<std::int64_t>(rng() % 2000) - 1000, p);
      CHECK(a + b == b + a);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + Fp(0, p) == a);
      CHECK(a * Fp(1, p) == a);
      CHECK(a - a == Fp(0, p));
      if (!a.is_zero()) CHECK(a * a.inverse() == Fp(1, p));
    }
  }
  CHECK_THROWS_AS(Fp::check_prime(10), Error);
}

TEST_CASE("unit, bilinearity and associativity") {
  GroupPtr s3 = symmetric_group(3);
  Ambient<R> amb{s3, 2, BasisKind::semigroup, {}};
  std::mt19937 rng(11);
  std::vector<RookMatrix> all = enumerate_semigroup(2, *s3);
  auto rnd_elem = [&] {
    AlgebraElement<R> e(amb);
    for (int k = 0; k < 4; ++k)
      e.add_term(all[rng() % all.size()], R(static_cast<long long>(rng() % 7) - 3));
    return e;
  };
  AlgebraElement<R> one = AlgebraElement<R>::unit(amb);
  for (int trial = 0; trial < 20; ++trial) {
    AlgebraElement<R> a = rnd_elem(), b = rnd_elem(), c = rnd_elem();
    CHECK(one * a == a);
    CHECK(a * one == a);
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a.scaled(R(2)) - a == a);
  }
}

TEST_CASE("ambient mismatch is rejected") {
  GroupPtr c2 = cyclic_group(2);
  Ambient<R> a2{c2, 2, BasisKind::semigroup, {}};
  Ambient<R> a3{c2, 3, BasisKind::semigroup, {}};
  AlgebraElement<R> x = AlgebraElement<R>::unit(a2);
  AlgebraElement<R> y = AlgebraElement<R>::unit(a3);
  CHECK_THROWS_WITH_AS((void)(x + y), doctest::Contains("ambient mismatch"), Error);
  CHECK_THROWS_WITH_AS((void)(x * y), doctest::Contains("ambient mismatch"), Error);
}

TEST_CASE("group-kind elements reject non-total labels") {
  GroupPtr c2 = cyclic_group(2);
  Ambient<R> g2{c2, 2, BasisKind::group, {}};
  AlgebraElement<R> e(g2);
  CHECK_THROWS_WITH_AS(e.add_term(RookMatrix::epsilon(1, 2), R(1)),
                       doctest::Contains("non-total"), Error);
}

TEST_CASE("idempotent kills its complement") {
  GroupPtr c2 = cyclic_group(2);
  Ambient<R> amb{c2, 2, BasisKind::semigroup, {}};
  AlgebraElement<R> one = AlgebraElement<R>::unit(amb);
  AlgebraElement<R> e1 = AlgebraElement<R>::basis(amb, RookMatrix::epsilon(1, 2));
  CHECK(((one - e1) * e1).is_zero());
}

TEST_CASE("the squared first Jucys-Murphy element at size two") {
  GroupPtr c2 = cyclic_group(2);
  Ambient<R> g2{c2, 2, BasisKind::group, {}};
  AlgebraElement<R> xi1 = jm_element(g2, 1);
  // frozen from expanding the four-term product by hand
  AlgebraElement<R> expected(g2);
  expected.add_term(RookMatrix::identity(2), R(2));
  expected.add_term(RookMatrix::diagonal({1, 1}), R(2));
  CHECK(xi1 * xi1 == expected);
}

TEST_CASE("element degree") {
  GroupPtr c2 = cyclic_group(2);
  Ambient<R> amb{c2, 3, BasisKind::semigroup, {}};
  CHECK(AlgebraElement<R>::unit(amb).degree() == 0);
  Ambient<R> g3{c2, 3, BasisKind::group, {}};
  CHECK(jm_element(g3, 1).degree() == 2);
  CHECK_THROWS_WITH_AS(AlgebraElement<R>::zero(amb).degree(), doctest::Contains("undefined"),
                       Error);
}

TEST_CASE("presentation relations over the order-three cyclic group") {
  GroupPtr c3 = cyclic_group(3);
  for (int n = 1; n <= 4; ++n) {
    Ambient<R> amb{c3, n, BasisKind::semigroup, {}};
    auto basis = [&](const RookMatrix& r) { return AlgebraElement<R>::basis(amb, r); };
    AlgebraElement<R> one = AlgebraElement<R>::unit(amb);
    for (int i = 1; i < n; ++i) {
      AlgebraElement<R> s = basis(RookMatrix::transposition(i, i + 1, n));
      CHECK(s * s == one);
      AlgebraElement<R> ei = basis(RookMatrix::epsilon(i, n));
      AlgebraElement<R> ei1 = basis(RookMatrix::epsilon(i + 1, n));
      CHECK(s * ei == ei1 * s);
      CHECK(s * ei * ei1 == ei * ei1);
      if (i + 1 < n) {
        AlgebraElement<R> t = basis(RookMatrix::transposition(i + 1, i + 2, n));
        CHECK(s * t * s == t * s * t);
      }
    }
    for (int i = 1; i <= n; ++i) {
      AlgebraElement<R> ei = basis(RookMatrix::epsilon(i, n));
      CHECK(ei * ei == ei);
      for (int h = 0; h < 3; ++h) {
        std::vector<int> d(n, 0);
        d[i - 1] = h;
        AlgebraElement<R> hi = basis(RookMatrix::diagonal(d));
        CHECK(ei * hi == ei);
        CHECK(hi * ei == ei);
      }
    }
  }
}

TEST_SUITE_END();
