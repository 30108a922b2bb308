#ifndef WREATH_JM_HPP_
#define WREATH_JM_HPP_

#include "wreath/algebra.hpp"
#include "wreath/error.hpp"

namespace wreath {

// t_{kl} = sum_h h^(k) (h^{-1})^(l): the averaged diagonal pair element.
template <class F>
AlgebraElement<F> pair_sum(const Ambient<F>& amb, int k, int l) {
  const Group& G = *amb.group;
  require(k >= 1 && l >= 1 && k <= amb.n && l <= amb.n && k != l, "pair_sum: bad slots");
  AlgebraElement<F> out(amb);
  std::vector<int> diag(amb.n, 0);
  for (int h = 0; h < G.order(); ++h) {
    diag[k - 1] = h;
    diag[l - 1] = G.inverse(h);
    out.add_term(RookMatrix::diagonal(diag), amb.make(1));
  }
  return out;
}

// Jucys-Murphy element: sum_{l>k} t_{kl} (k,l).  Zero at k = n; commutes
// with the tail subgroup on slots k+1..n.
template <class F>
AlgebraElement<F> jm_element(const Ambient<F>& amb, int k) {
  require(k >= 1 && k <= amb.n, "jm_element: slot out of range");
  AlgebraElement<F> out(amb);
  for (int l = k + 1; l <= amb.n; ++l) {
    AlgebraElement<F> swap =
        AlgebraElement<F>::basis(amb, RookMatrix::transposition(k, l, amb.n));
    out = out + pair_sum(amb, k, l) * swap;
  }
  return out;
}

// The rook-algebra lift of the Jucys-Murphy element:
// sum_{i>k} t_{ki} (k,i) (1-eps_k)(1-eps_i).
template <class F>
AlgebraElement<F> jm_lift(const Ambient<F>& amb, int k) {
  require(amb.kind == BasisKind::semigroup, "jm_lift: semigroup ambient required");
  require(k >= 1 && k <= amb.n, "jm_lift: slot out of range");
  AlgebraElement<F> out(amb);
  AlgebraElement<F> unit = AlgebraElement<F>::unit(amb);
  AlgebraElement<F> bar_k =
      unit - AlgebraElement<F>::basis(amb, RookMatrix::epsilon(k, amb.n));
  for (int i = k + 1; i <= amb.n; ++i) {
    AlgebraElement<F> swap =
        AlgebraElement<F>::basis(amb, RookMatrix::transposition(k, i, amb.n));
    AlgebraElement<F> bar_i =
        unit - AlgebraElement<F>::basis(amb, RookMatrix::epsilon(i, amb.n));
    out = out + pair_sum(amb, k, i) * swap * bar_k * bar_i;
  }
  return out;
}

// The retraction onto the group algebra: kills every non-total matrix,
// fixes the total ones; an algebra homomorphism.
template <class F>
AlgebraElement<F> phi_retraction(const AlgebraElement<F>& e) {
  require(e.ambient().kind == BasisKind::semigroup, "phi_retraction: semigroup input required");
  Ambient<F> amb = e.ambient();
  amb.kind = BasisKind::group;
  AlgebraElement<F> out(amb);
  for (const auto& [label, coeff] : e.terms())
    if (label.is_total()) out.add_term(label, coeff);
  return out;
}

// Group-algebra elements reinterpreted inside the rook algebra.
template <class F>
AlgebraElement<F> as_semigroup(const AlgebraElement<F>& e) {
  return e.as_kind(BasisKind::semigroup);
}

}  // namespace wreath

#endif  // WREATH_JM_HPP_
