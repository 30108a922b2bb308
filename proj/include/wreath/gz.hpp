#ifndef WREATH_GZ_HPP_
#define WREATH_GZ_HPP_

#include <cstdint>
#include <map>
#include <vector>

#include "wreath/closure.hpp"
#include "wreath/subalgebras.hpp"
#include "wreath/jm.hpp"
#include "wreath/partitions.hpp"
#include "wreath/report.hpp"
#include "wreath/typefunc.hpp"

namespace wreath {

// Sum of the dimensions of the irreducible modules of the wreath product
// with an abelian base of order r: over r-multipartitions of n, the
// multinomial times the product of standard-tableaux counts.  Used purely
// as the independent expected dimension of the Gelfand-Zetlin algebra.
inline std::int64_t irrep_dim_sum(int n, int r) {
  require(n >= 0 && r >= 1, "irrep_dim_sum: bad arguments");
  std::int64_t nfact = 1;
  for (int i = 2; i <= n; ++i) nfact *= i;
  std::int64_t total = 0;
  for (const auto& mp : multipartitions_of(n, r)) {
    std::int64_t term = nfact;
    for (const Partition& p : mp) {
      std::int64_t wfact = 1;
      for (int i = 2; i <= partition_weight(p); ++i) wfact *= i;
      require(term % wfact == 0, "irrep_dim_sum: multinomial not integral");
      term /= wfact;
      term *= standard_tableaux_count(p);
    }
    total += term;
  }
  return total;
}

template <class F>
struct GZData {
  Ambient<F> ambient;
  std::vector<AlgebraElement<F>> generators;
  std::vector<AlgebraElement<F>> basis;
  std::int64_t expected_dim = 0;

  int dim() const { return static_cast<int>(basis.size()); }
};

// The commutative subalgebra generated by the Jucys-Murphy elements and the
// per-slot group labels; abelian base groups only.
template <class F>
GZData<F> gz_algebra(const Ambient<F>& amb0) {
  const Group& G = *amb0.group;
  require(G.is_abelian(),
          "gz_algebra: the base group must be abelian (the diagonal subalgebra of a nonabelian "
          "group algebra depends on a choice of irreducible bases)");
  Ambient<F> amb = amb0;
  amb.kind = BasisKind::group;
  GZData<F> data;
  data.ambient = amb;
  for (int k = 1; k <= amb.n; ++k) {
    AlgebraElement<F> xi = jm_element(amb, k);
    if (!xi.is_zero()) data.generators.push_back(xi);
    for (auto& t : slot_torus(amb, k)) data.generators.push_back(std::move(t));
  }
  std::int64_t group_dim = 1;
  for (int i = 0; i < amb.n; ++i) group_dim *= G.order() * (i + 1);
  data.basis = subalgebra_closure(amb, data.generators, static_cast<int>(group_dim));
  data.expected_dim = irrep_dim_sum(amb.n, G.order());
  return data;
}

// dimension, commutativity, and self-centralizing inside the group algebra
template <class F>
Report verify_maximal_commutative(const GZData<F>& data) {
  Report rep;
  rep.claim = "gz-maximal-commutative";
  rep.params = {{"group", data.ambient.group->describe()},
                {"n", data.ambient.n},
                {"field_note",
                 "checked over the rationals; every assertion is a rank or dimension "
                 "equality of rational matrices, so it holds over any extension field"}};
  rep.dims = {{"dim", data.dim()}, {"expected_dim", data.expected_dim}};
  bool commutative = true;
  for (size_t i = 0; i < data.basis.size() && commutative; ++i)
    for (size_t j = i + 1; j < data.basis.size(); ++j)
      if (!(data.basis[i] * data.basis[j] == data.basis[j] * data.basis[i])) {
        commutative = false;
        break;
      }
  rep.dims["commutative"] = commutative;
  if (!commutative) rep.fail_with({{"detail", "basis elements do not commute"}});
  if (data.dim() != data.expected_dim)
    rep.fail_with({{"detail", "dimension differs from the irreducible-dimension sum"}});
  // centralizer of the algebra inside the group algebra
  std::vector<RookMatrix> labels = enumerate_group_elements(data.ambient.n, *data.ambient.group);
  auto cent = commutant(data.ambient, labels, data.basis);
  rep.dims["centralizer_dim"] = cent.size();
  if (static_cast<int>(cent.size()) != data.dim())
    rep.fail_with({{"detail", "algebra is not its own centralizer"}});
  return rep;
}

// The two generation recipes agree: tail centers + slot tori generate the
// same subalgebra as Jucys-Murphy elements + slot tori.
template <class F>
Report verify_gz_generation_variants(const Ambient<F>& amb0) {
  const Group& G = *amb0.group;
  Ambient<F> amb = amb0;
  amb.kind = BasisKind::group;
  Report rep;
  rep.claim = "gz-generation-variants";
  rep.params = {{"group", G.describe()}, {"n", amb.n}};
  GZData<F> jm_version = gz_algebra(amb);
  std::vector<AlgebraElement<F>> gens;
  for (int k = 1; k <= amb.n; ++k) {
    for (auto& c : tail_center_basis<F>(amb, k)) gens.push_back(std::move(c));
    for (auto& t : slot_torus(amb, k)) gens.push_back(std::move(t));
  }
  std::int64_t group_dim = 1;
  for (int i = 0; i < amb.n; ++i) group_dim *= G.order() * (i + 1);
  auto center_version = subalgebra_closure(amb, gens, static_cast<int>(group_dim));
  rep.dims = {{"jm_dim", jm_version.dim()}, {"center_dim", center_version.size()}};
  if (!same_span(jm_version.basis, center_version))
    rep.fail_with({{"detail", "generation variants span different subalgebras"}});
  return rep;
}

// The joint centralizer of the first slot and the tail subgroup is
// commutative and generated by the adjacent centers and the first
// Jucys-Murphy element.
template <class F>
Report verify_corner_commutant(const Ambient<F>& amb0) {
  const Group& G = *amb0.group;
  Ambient<F> amb = amb0;
  amb.kind = BasisKind::group;
  int n = amb.n;
  Report rep;
  rep.claim = "slot1-tail-centralizer";
  rep.params = {{"group", G.describe()}, {"n", n}};
  require(n >= 1, "verify_corner_commutant: n must be positive");

  std::vector<AlgebraElement<F>> constraints;
  for (auto& t : slot_torus(amb, 1)) constraints.push_back(std::move(t));
  for (const RookMatrix& b : tail_subgroup_elements(G, n, n - 1))
    constraints.push_back(AlgebraElement<F>::basis(amb, b));
  std::vector<RookMatrix> labels = enumerate_group_elements(n, G);
  auto cent = commutant(amb, labels, constraints);
  bool commutative = true;
  for (size_t i = 0; i < cent.size() && commutative; ++i)
    for (size_t j = i + 1; j < cent.size(); ++j)
      if (!(cent[i] * cent[j] == cent[j] * cent[i])) {
        commutative = false;
        break;
      }
  rep.dims = {{"centralizer_dim", cent.size()}, {"commutative", commutative}};
  if (!commutative) rep.fail_with({{"detail", "centralizer is not commutative"}});

  std::vector<AlgebraElement<F>> gens;
  for (auto& c : tail_center_basis<F>(amb, n - 1)) gens.push_back(std::move(c));
  for (auto& c : slot_center_basis<F>(amb, 1)) gens.push_back(std::move(c));
  AlgebraElement<F> xi1 = jm_element(amb, 1);
  if (!xi1.is_zero()) gens.push_back(xi1);
  std::int64_t group_dim = 1;
  for (int i = 0; i < n; ++i) group_dim *= G.order() * (i + 1);
  auto generated = subalgebra_closure(amb, gens, static_cast<int>(group_dim));
  rep.dims["generated_dim"] = generated.size();
  if (!same_span(cent, generated))
    rep.fail_with({{"detail", "centralizer differs from the generated subalgebra"}});
  return rep;
}

}  // namespace wreath

#endif  // WREATH_GZ_HPP_
