#ifndef WREATH_SUBALGEBRAS_HPP_
#define WREATH_SUBALGEBRAS_HPP_

#include <map>
#include <vector>

#include "wreath/algebra.hpp"

namespace wreath {

// Nontrivial group labels placed in one slot: a generating set of the slot's
// copy of the group algebra.
template <class F>
std::vector<AlgebraElement<F>> slot_torus(const Ambient<F>& amb, int slot) {
  std::vector<AlgebraElement<F>> out;
  std::vector<int> diag(amb.n, 0);
  for (int h = 1; h < amb.group->order(); ++h) {
    diag[slot - 1] = h;
    out.push_back(AlgebraElement<F>::basis(amb, RookMatrix::diagonal(diag)));
    diag[slot - 1] = 0;
  }
  return out;
}

// Elements of the tail copy of the size-k wreath product (the last k slots),
// as full-size rook matrices.
inline std::vector<RookMatrix> tail_subgroup_elements(const Group& G, int n, int k) {
  require(k >= 0 && k <= n, "tail subgroup: bad size");
  std::vector<RookMatrix> out;
  for (const RookMatrix& x : enumerate_group_elements(k, G)) {
    RookMatrix shifted = RookMatrix::zero(n);
    for (int j = 1; j <= n - k; ++j) shifted.set_entry(j, j, 0);
    for (int j = 1; j <= k; ++j) shifted.set_entry(n - k + j, n - k + x.row(j), x.label(j));
    out.push_back(shifted);
  }
  return out;
}

// Conjugacy class sums of the tail copy of the size-k wreath product,
// computed by brute-force orbits inside the subgroup.  A basis of the center
// of the tail subalgebra.
template <class F>
std::vector<AlgebraElement<F>> tail_center_basis(const Ambient<F>& amb, int k) {
  const Group& G = *amb.group;
  std::vector<RookMatrix> elems = tail_subgroup_elements(G, amb.n, k);
  std::map<RookMatrix, int> index;
  for (size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<int>(i);
  std::vector<char> done(elems.size(), 0);
  std::vector<AlgebraElement<F>> out;
  for (size_t i = 0; i < elems.size(); ++i) {
    if (done[i]) continue;
    std::map<RookMatrix, char> orbit;
    for (const RookMatrix& b : elems)
      orbit[multiply(G, multiply(G, b, elems[i]), rook_inverse(G, b))] = 1;
    AlgebraElement<F> sum(amb);
    for (const auto& [mat, unused] : orbit) {
      (void)unused;
      sum.add_term(mat, amb.make(1));
      done[index.at(mat)] = 1;
    }
    out.push_back(sum);
  }
  return out;
}

// Class sums of the group placed in a single slot: a basis of the center of
// that slot's group algebra.
template <class F>
std::vector<AlgebraElement<F>> slot_center_basis(const Ambient<F>& amb, int slot) {
  const Group& G = *amb.group;
  std::vector<AlgebraElement<F>> out;
  std::vector<int> diag(amb.n, 0);
  for (const auto& cls : G.conjugacy_classes()) {
    AlgebraElement<F> sum(amb);
    for (int h : cls) {
      diag[slot - 1] = h;
      sum.add_term(RookMatrix::diagonal(diag), amb.make(1));
      diag[slot - 1] = 0;
    }
    out.push_back(sum);
  }
  return out;
}

}  // namespace wreath

#endif  // WREATH_SUBALGEBRAS_HPP_
