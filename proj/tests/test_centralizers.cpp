#include <doctest.h>

#include <cstdio>
#include <functional>

#include "wreath/centralizers.hpp"

using namespace wreath;
using R = Rational;

namespace {

Ambient<R> semi(const GroupPtr& g, int n) { return {g, n, BasisKind::semigroup, {}}; }

}  // namespace

TEST_SUITE_BEGIN("centralizers");

TEST_CASE("frozen small dimensions") {
  GroupPtr c2 = cyclic_group(2);
  // center of the group algebra at size 2: five types of norm two
  CHECK(centralizer_nullspace(semi(c2, 2), 0, CentralizerKind::group).dim() == 5);
  // center of the rook algebra at size 2: all eight types of norm <= 2
  CHECK(centralizer_nullspace(semi(c2, 2), 0, CentralizerKind::semigroup).dim() == 8);
  // corner size 1 inside size 2
  CHECK(centralizer_nullspace(semi(c2, 2), 1, CentralizerKind::semigroup).dim() == 11);
  CHECK(centralizer_nullspace(semi(c2, 2), 1, CentralizerKind::group).dim() == 6);
  CHECK(centralizer_nullspace(semi(c2, 2), 1, CentralizerKind::star).dim() == 8);
  // corner size 1 inside size 3
  CHECK(centralizer_combinatorial(semi(c2, 3), 1, CentralizerKind::semigroup).dim() == 32);
  // no constraint at m = n: the whole algebra
  CHECK(centralizer_nullspace(semi(c2, 2), 2, CentralizerKind::semigroup).dim() == 17);
  CHECK(centralizer_combinatorial(semi(c2, 2), 2, CentralizerKind::semigroup).dim() == 17);
}

TEST_CASE("every basis element commutes with the defining generators") {
  GroupPtr c3 = cyclic_group(3);
  Ambient<R> amb = semi(c3, 3);
  for (CentralizerKind kind :
       {CentralizerKind::group, CentralizerKind::semigroup, CentralizerKind::star}) {
    for (int m : {0, 1}) {
      CentralizerBasis<R> comb = centralizer_combinatorial(amb, m, kind);
      std::vector<RookMatrix> gens = centralizer_constraints(*c3, 3, m, kind);
      Ambient<R> target = comb.ambient;
      for (const auto& x : comb.basis)
        for (const RookMatrix& g : gens) {
          AlgebraElement<R> gg = AlgebraElement<R>::basis(target, g);
          CHECK(x * gg == gg * x);
        }
    }
  }
}

TEST_CASE("basis agreement across routes, with containment") {
  GroupPtr c2 = cyclic_group(2);
  for (int n = 1; n <= 3; ++n)
    for (int m = 0; m <= n; ++m)
      for (CentralizerKind kind :
           {CentralizerKind::group, CentralizerKind::semigroup, CentralizerKind::star}) {
        Report rep = verify_basis_agreement(semi(c2, n), m, kind);
        CHECK(rep.passed());
      }
  GroupPtr s3 = symmetric_group(3);
  CHECK(verify_basis_agreement(semi(s3, 2), 1, CentralizerKind::semigroup).passed());
}

TEST_CASE("the reduced generator set matches the full one") {
  GroupPtr c2 = cyclic_group(2);
  Ambient<R> amb = semi(c2, 3);
  for (int m : {0, 1, 2})
    for (CentralizerKind kind : {CentralizerKind::group, CentralizerKind::semigroup}) {
      int reduced = centralizer_nullspace(amb, m, kind, /*full_generators=*/false).dim();
      int full = centralizer_nullspace(amb, m, kind, /*full_generators=*/true).dim();
      CHECK(reduced == full);
    }
}

TEST_CASE("filtration terms are spanned by the bounded stable elements") {
  GroupPtr c2 = cyclic_group(2);
  // degree filtration of the center of the rook algebra at size 3
  Ambient<R> amb = semi(c2, 3);
  CHECK(filtration_term(amb, 0, CentralizerKind::semigroup, 0, 0).dim() == 1);
  CHECK(filtration_term(amb, 0, CentralizerKind::semigroup, 2, 0).dim() == 8);
  CHECK(filtration_term(amb, 0, CentralizerKind::semigroup, 3, 0).dim() ==
        centralizer_expected_dim(*c2, 3, 0, CentralizerKind::semigroup));
  // each piece is spanned by the stable class sums of bounded norm
  for (int k = 0; k <= 3; ++k) {
    CentralizerBasis<R> piece = filtration_term(amb, 0, CentralizerKind::semigroup, k, 0);
    LabelInterner interner;
    SpanBasis<R> span;
    for (const auto& e : piece.basis) span.insert(to_sparse(e, interner));
    int count = 0;
    for (const TypeFunction& rho : enumerate_types(*c2, k, TypeBound::at_most)) {
      AlgebraElement<R> d = stable_class_sum(amb, rho);
      CHECK(d.degree() <= k);
      CHECK(span.contains(to_sparse(d, interner)));
      ++count;
    }
    CHECK(count == piece.dim());
  }
  // tail-degree filtration pieces at positive corner size
  CHECK(filtration_term(amb, 1, CentralizerKind::semigroup, 1, 1).dim() == 11);
}

TEST_CASE("corner-projection descent and injectivity reports") {
  GroupPtr c2 = cyclic_group(2);
  CHECK(verify_theta_multiplicative(semi(c2, 2)).passed());
  CHECK(verify_theta_multiplicative(semi(c2, 3)).passed());
  CHECK(verify_theta_descent(semi(c2, 3), 0).passed());
  CHECK(verify_theta_descent(semi(c2, 3), 2).passed());
  CHECK(verify_injectivity(semi(c2, 3), 0).passed());
  CHECK(verify_injectivity(semi(c2, 3), 1).passed());
  CHECK(verify_injectivity(semi(c2, 2), 2).status == "skipped");
}

TEST_CASE("ideal intersection at tiny sizes") {
  GroupPtr c2 = cyclic_group(2);
  Report one = verify_ideal_intersection(semi(c2, 1), 0);
  CHECK(one.passed());
  CHECK(one.dims["lhs"] == 2);
  Report two = verify_ideal_intersection(semi(c2, 2), 0);
  CHECK(two.passed());
  CHECK(two.dims["lhs"] == 5);
  CHECK(verify_ideal_intersection(semi(c2, 2), 1).passed());
}

TEST_CASE("the retraction maps the rook centralizer onto the group one") {
  GroupPtr c2 = cyclic_group(2);
  for (int n = 2; n <= 3; ++n)
    for (int m = 0; m < n; ++m) {
      CentralizerBasis<R> rook = centralizer_combinatorial(semi(c2, n), m,
                                                           CentralizerKind::semigroup);
      CentralizerBasis<R> grp =
          centralizer_combinatorial(semi(c2, n), m, CentralizerKind::group);
      LabelInterner interner;
      SpanBasis<R> image, target;
      for (const auto& x : rook.basis) {
        AlgebraElement<R> y = phi_retraction(x);
        if (!y.is_zero()) image.insert(to_sparse(y, interner));
      }
      for (const auto& x : grp.basis) target.insert(to_sparse(x, interner));
      CHECK(image.rank() == target.rank());
      for (const auto& x : grp.basis) {
        SparseVec<R> v = to_sparse(x, interner);
        CHECK(image.contains(v));
      }
    }
}

TEST_CASE("monomial bases in the atomic class sums have full rank") {
  GroupPtr c2 = cyclic_group(2);
  for (int n = 2; n <= 3; ++n) {
    Ambient<R> amb = semi(c2, n);
    int r = c2->class_count();
    // group case: atoms skip the trivial one-part of the identity class
    std::vector<std::pair<TypeFunction, int>> atoms;  // (atom, weight)
    for (int k = 0; k < r; ++k)
      for (int i = 1; i <= n; ++i)
        if (!(k == 0 && i == 1)) atoms.push_back({TypeFunction::atom(k, i, r), i});
    std::vector<AlgebraElement<R>> monomials;
    std::function<void(size_t, int, AlgebraElement<R>)> build =
        [&](size_t idx, int budget, AlgebraElement<R> acc) {
          if (idx == atoms.size()) {
            monomials.push_back(acc.as_kind(BasisKind::group));
            return;
          }
          build(idx + 1, budget, acc);
          const auto& [atom, w] = atoms[idx];
          AlgebraElement<R> cur = acc;
          for (int used = w; used <= budget; used += w) {
            cur = cur * class_sum(amb, atom);
            build(idx + 1, budget - used, cur);
          }
        };
    build(0, n, AlgebraElement<R>::unit(amb));
    long long center_dim = centralizer_expected_dim(*c2, n, 0, CentralizerKind::group);
    CHECK(static_cast<long long>(monomials.size()) == center_dim);
    CHECK(elements_rank(monomials) == center_dim);

    // rook case: all atoms, including the trivial one
    std::vector<std::pair<TypeFunction, int>> atoms_all;
    for (int k = 0; k < r; ++k)
      for (int i = 1; i <= n; ++i) atoms_all.push_back({TypeFunction::atom(k, i, r), i});
    std::vector<AlgebraElement<R>> stable_monomials;
    std::function<void(size_t, int, AlgebraElement<R>)> build2 =
        [&](size_t idx, int budget, AlgebraElement<R> acc) {
          if (idx == atoms_all.size()) {
            stable_monomials.push_back(acc);
            return;
          }
          build2(idx + 1, budget, acc);
          const auto& [atom, w] = atoms_all[idx];
          AlgebraElement<R> cur = acc;
          for (int used = w; used <= budget; used += w) {
            cur = cur * stable_class_sum(amb, atom);
            build2(idx + 1, budget - used, cur);
          }
        };
    build2(0, n, AlgebraElement<R>::unit(amb));
    long long rook_dim = centralizer_expected_dim(*c2, n, 0, CentralizerKind::semigroup);
    CHECK(static_cast<long long>(stable_monomials.size()) == rook_dim);
    CHECK(elements_rank(stable_monomials) == rook_dim);
  }
}

TEST_CASE("the no-trivial-part orbit family is also a basis") {
  GroupPtr c2 = cyclic_group(2);
  for (auto [m, n] : {std::pair{1, 2}, {1, 3}}) {
    Ambient<R> amb = semi(c2, n);
    std::vector<AlgebraElement<R>> family;
    for (const OmegaMatrix& omega : enumerate_omegas(m, *c2, n - m))
      for (const TypeFunction& rho :
           enumerate_types(*c2, n - m - omega.ord(), TypeBound::at_most))
        if (!rho.class0_has_part_one()) family.push_back(orbit_class_sum(amb, omega, rho));
    long long star_dim = centralizer_expected_dim(*c2, n, m, CentralizerKind::star);
    CHECK(static_cast<long long>(family.size()) == star_dim);
    CHECK(elements_rank(family) == star_dim);
  }
}

TEST_CASE("the no-trivial-part class sums are a second basis of the center") {
  GroupPtr c2 = cyclic_group(2);
  for (int n = 1; n <= 3; ++n) {
    Ambient<R> amb = semi(c2, n);
    std::vector<AlgebraElement<R>> family;
    for (const TypeFunction& rho : enumerate_types(*c2, n, TypeBound::at_most))
      if (!rho.class0_has_part_one())
        family.push_back(class_sum(amb, rho).as_kind(BasisKind::group));
    long long dim = centralizer_expected_dim(*c2, n, 0, CentralizerKind::group);
    CHECK(static_cast<long long>(family.size()) == dim);
    CHECK(elements_rank(family) == dim);
  }
}

TEST_CASE("tail degree of the stable orbit sums") {
  GroupPtr c2 = cyclic_group(2);
  for (int n = 2; n <= 3; ++n)
    for (int m = 1; m < n; ++m) {
      Ambient<R> amb = semi(c2, n);
      for (const OmegaMatrix& omega : enumerate_omegas(m, *c2, n - m))
        for (const TypeFunction& rho :
             enumerate_types(*c2, n - m - omega.ord(), TypeBound::at_most)) {
          AlgebraElement<R> d = stable_orbit_sum(amb, omega, rho);
          CHECK(d.degree(m) == omega.ord() + rho.norm());
          CHECK(d.degree() <= omega.ord() + rho.norm() + m);
        }
    }
}

TEST_CASE("tensor-splitting spans") {
  GroupPtr c2 = cyclic_group(2);
  CHECK(verify_tensor_decomposition(semi(c2, 2), 1).passed());
  Report top = verify_tensor_decomposition(semi(c2, 2), 2);
  CHECK(top.passed());  // at m = n the embedded semigroup spans everything
}

TEST_CASE("a dihedral base group goes through both routes") {
  GroupPtr d4 = dihedral_group(4);
  CHECK(verify_basis_agreement(semi(d4, 2), 1, CentralizerKind::semigroup).passed());
  CHECK(verify_basis_agreement(semi(d4, 2), 0, CentralizerKind::group).passed());
}

TEST_CASE("a file-loaded group goes through both routes") {
  GroupPtr c3 = cyclic_group(3);
  std::string path = "test_centralizers_c3.tbl";
  save_group_file(*c3, path);
  GroupPtr loaded = load_group(path);
  CHECK(verify_basis_agreement(semi(loaded, 2), 1, CentralizerKind::semigroup).passed());
  CHECK(verify_basis_agreement(semi(loaded, 2), 0, CentralizerKind::star).passed());
  std::remove(path.c_str());
}

TEST_CASE("rational and prime-field centralizer dimensions agree") {
  GroupPtr c2 = cyclic_group(2);
  FieldOps<Fp>::Maker mk{101};
  for (int n = 1; n <= 3; ++n)
    for (int m = 0; m <= n; ++m)
      for (CentralizerKind kind :
           {CentralizerKind::group, CentralizerKind::semigroup, CentralizerKind::star}) {
        Ambient<R> ambq = semi(c2, n);
        Ambient<Fp> ambp{c2, n, BasisKind::semigroup, mk};
        CHECK(centralizer_nullspace(ambq, m, kind).dim() ==
              centralizer_nullspace(ambp, m, kind).dim());
      }
}

TEST_SUITE_END();
