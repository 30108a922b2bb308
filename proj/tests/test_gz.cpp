#include <doctest.h>

#include "wreath/error.hpp"
#include "wreath/gz.hpp"

using namespace wreath;
using R = Rational;

namespace {

Ambient<R> grp(const GroupPtr& g, int n) { return {g, n, BasisKind::group, {}}; }

}  // namespace

TEST_SUITE_BEGIN("gz");

TEST_CASE("irreducible dimension sums") {
  CHECK(irrep_dim_sum(1, 2) == 2);
  CHECK(irrep_dim_sum(2, 2) == 6);
  CHECK(irrep_dim_sum(3, 1) == 4);
  CHECK(irrep_dim_sum(4, 1) == 10);
  CHECK(irrep_dim_sum(2, 3) == 12);
  CHECK(irrep_dim_sum(3, 2) == 20);
}

TEST_CASE("the subalgebra at size one is the whole group algebra") {
  GroupPtr c2 = cyclic_group(2);
  GZData<R> data = gz_algebra(grp(c2, 1));
  CHECK(data.dim() == 2);
  CHECK(data.expected_dim == 2);
  CHECK(verify_maximal_commutative(data).passed());
}

TEST_CASE("dimensions across the verification grid") {
  struct Case {
    const char* spec;
    int n;
    long long dim;
  };
  for (const Case& c : std::initializer_list<Case>{{"c2", 2, 6},
                                                   {"c2", 3, 20},
                                                   {"c3", 2, 12},
                                                   {"trivial", 2, 2},
                                                   {"trivial", 3, 4},
                                                   {"trivial", 4, 10}}) {
    GroupPtr g = load_group(c.spec);
    GZData<R> data = gz_algebra(grp(g, c.n));
    CHECK(data.dim() == c.dim);
    CHECK(data.expected_dim == c.dim);
  }
}

TEST_CASE("maximal commutative and generation variants") {
  for (const char* spec : {"c2", "c3"}) {
    GroupPtr g = load_group(spec);
    int max_n = g->order() == 2 ? 3 : 2;
    for (int n = 1; n <= max_n; ++n) {
      Ambient<R> amb = grp(g, n);
      CHECK(verify_maximal_commutative(gz_algebra(amb)).passed());
      CHECK(verify_gz_generation_variants(amb).passed());
    }
  }
}

TEST_CASE("nonabelian base groups are rejected with an explanation") {
  GroupPtr s3 = symmetric_group(3);
  CHECK_THROWS_WITH_AS(gz_algebra(grp(s3, 2)), doctest::Contains("abelian"), Error);
}

TEST_CASE("the joint slot-and-tail centralizer is commutative and generated as stated") {
  GroupPtr c2 = cyclic_group(2);
  for (int n = 1; n <= 3; ++n) CHECK(verify_corner_commutant(grp(c2, n)).passed());
}

TEST_CASE("the subalgebra contains the JM elements and the tail centers") {
  GroupPtr c2 = cyclic_group(2);
  int n = 3;
  Ambient<R> amb = grp(c2, n);
  GZData<R> data = gz_algebra(amb);
  LabelInterner interner;
  SpanBasis<R> span;
  for (const auto& e : data.basis) span.insert(to_sparse(e, interner));
  for (int k = 1; k <= n; ++k) {
    AlgebraElement<R> xi = jm_element(amb, k);
    if (!xi.is_zero()) CHECK(span.contains(to_sparse(xi, interner)));
    for (const auto& c : tail_center_basis<R>(amb, k))
      CHECK(span.contains(to_sparse(c, interner)));
  }
}

TEST_SUITE_END();
