#ifndef WREATH_CLASSDATA_HPP_
#define WREATH_CLASSDATA_HPP_

#include <functional>
#include <vector>

#include "wreath/algebra.hpp"
#include "wreath/error.hpp"
#include "wreath/omega.hpp"
#include "wreath/typefunc.hpp"

namespace wreath {

namespace detail {

// Ordered label tuples of length len whose cycle product lands in the given
// conjugacy class; depends only on (len, class), so callers cache per pair.
inline std::vector<std::vector<int>> cycle_label_tuples(const Group& G, int len,
                                                        int class_index) {
  std::vector<std::vector<int>> out;
  std::vector<int> tuple(len);
  std::function<void(int)> rec = [&](int depth) {
    if (depth == len) {
      // product of labels along the cycle, later slots on the left
      int prod = 0;
      for (int i = len - 1; i >= 0; --i) prod = G.mult(prod, tuple[i]);
      if (G.class_of(prod) == class_index) out.push_back(tuple);
      return;
    }
    for (int g = 0; g < G.order(); ++g) {
      tuple[depth] = g;
      rec(depth + 1);
    }
  };
  rec(0);
  return out;
}

inline void subsets_of_size(const std::vector<int>& pool, int k,
                            const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> cur;
  std::function<void(size_t)> rec = [&](size_t from) {
    if (static_cast<int>(cur.size()) == k) {
      fn(cur);
      return;
    }
    if (pool.size() - from < k - cur.size()) return;
    for (size_t i = from; i < pool.size(); ++i) {
      cur.push_back(pool[i]);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

}  // namespace detail

// C^rho_{n,T}: the sum over all ways of filling the cycle slots of rho with
// pairwise distinct indices from T and all label vectors supported on T whose
// cycle products land in the prescribed classes.  |T| must equal the norm.
template <class F>
AlgebraElement<F> class_sum_on(const Ambient<F>& amb, const TypeFunction& rho,
                               const std::vector<int>& T) {
  const Group& G = *amb.group;
  require(rho.class_count() == G.class_count(), "class_sum: type has wrong class count");
  require(static_cast<int>(T.size()) == rho.norm(), "class_sum: |T| must equal the type norm");
  for (int i : T) require(i >= 1 && i <= amb.n, "class_sum: index out of range");

  // slots: one (class, length) per part, in class order
  std::vector<std::pair<int, int>> slots;
  for (int c = 0; c < rho.class_count(); ++c)
    for (int part : rho.parts[c]) slots.push_back({c, part});

  // label tuples per slot, cached by (class, length)
  std::map<std::pair<int, int>, std::vector<std::vector<int>>> tuple_cache;
  for (auto [c, len] : slots)
    if (!tuple_cache.count({c, len}))
      tuple_cache[{c, len}] = detail::cycle_label_tuples(G, len, c);

  AlgebraElement<F> out(amb);
  int n = amb.n;
  WreathElement x = WreathElement::identity(n);
  std::vector<char> used(n + 1, 0);
  F one = amb.make(1);

  std::function<void(size_t)> place = [&](size_t s) {
    if (s == slots.size()) {
      out.add_term(from_wreath(x), one);
      return;
    }
    auto [cls, len] = slots[s];
    const auto& tuples = tuple_cache[{cls, len}];
    std::vector<int> cyc(len);
    std::function<void(int)> choose = [&](int depth) {
      if (depth == len) {
        // install the cycle cyc[0] -> cyc[1] -> ... -> cyc[0]
        for (int i = 0; i < len; ++i) x.sigma[cyc[i] - 1] = cyc[(i + 1) % len];
        for (const auto& labels : tuples) {
          for (int i = 0; i < len; ++i) x.labels[cyc[i] - 1] = labels[i];
          place(s + 1);
        }
        for (int i = 0; i < len; ++i) {
          x.sigma[cyc[i] - 1] = cyc[i];
          x.labels[cyc[i] - 1] = 0;
        }
        return;
      }
      for (int idx : T) {
        if (used[idx]) continue;
        used[idx] = 1;
        cyc[depth] = idx;
        choose(depth + 1);
        used[idx] = 0;
      }
    };
    choose(0);
  };
  place(0);
  return out;
}

// C_n^rho = sum over all index subsets T of size ||rho||; 1 when rho is
// empty, 0 when ||rho|| > n.
template <class F>
AlgebraElement<F> class_sum(const Ambient<F>& amb, const TypeFunction& rho) {
  if (rho.norm() > amb.n) return AlgebraElement<F>::zero(amb);
  if (rho.norm() == 0) return AlgebraElement<F>::unit(amb);
  std::vector<int> pool;
  for (int i = 1; i <= amb.n; ++i) pool.push_back(i);
  AlgebraElement<F> out(amb);
  detail::subsets_of_size(pool, rho.norm(), [&](const std::vector<int>& T) {
    out = out + class_sum_on(amb, rho, T);
  });
  return out;
}

// The degree of C_n^rho predicted combinatorially: parts >= 2 of the
// identity-class partition plus everything in the other classes.
inline int class_sum_degree(const TypeFunction& rho) {
  int d = 0;
  for (int part : rho.parts[0])
    if (part >= 2) d += part;
  for (int c = 1; c < rho.class_count(); ++c) d += partition_weight(rho.parts[c]);
  return d;
}

// product of the slot idempotents over T
template <class F>
AlgebraElement<F> eps_prod(const Ambient<F>& amb, const std::vector<int>& T) {
  require(amb.kind == BasisKind::semigroup, "eps_prod: semigroup ambient required");
  AlgebraElement<F> out = AlgebraElement<F>::unit(amb);
  for (int i : T)
    out = out * AlgebraElement<F>::basis(amb, RookMatrix::epsilon(i, amb.n));
  return out;
}

// product of (1 - eps_i) over T
template <class F>
AlgebraElement<F> eps_bar(const Ambient<F>& amb, const std::vector<int>& T) {
  require(amb.kind == BasisKind::semigroup, "eps_bar: semigroup ambient required");
  AlgebraElement<F> out = AlgebraElement<F>::unit(amb);
  for (int i : T) {
    AlgebraElement<F> factor = AlgebraElement<F>::unit(amb) -
                               AlgebraElement<F>::basis(amb, RookMatrix::epsilon(i, amb.n));
    out = out * factor;
  }
  return out;
}

// The corner-stable central element: sum over T of C^rho_{n,T} * eps_bar(T).
// Lies in the center of the semigroup algebra and maps onto its size-(n-1)
// counterpart under the corner projection.
template <class F>
AlgebraElement<F> stable_class_sum(const Ambient<F>& amb, const TypeFunction& rho) {
  require(amb.kind == BasisKind::semigroup, "stable_class_sum: semigroup ambient required");
  if (rho.norm() > amb.n) return AlgebraElement<F>::zero(amb);
  if (rho.norm() == 0) return AlgebraElement<F>::unit(amb);
  std::vector<int> pool;
  for (int i = 1; i <= amb.n; ++i) pool.push_back(i);
  AlgebraElement<F> out(amb);
  detail::subsets_of_size(pool, rho.norm(), [&](const std::vector<int>& T) {
    out = out + class_sum_on(amb, rho, T) * eps_bar(amb, T);
  });
  return out;
}

// C_n^{Omega,rho}: orbit sum over disjoint tail subsets P (chains realizing
// Omega) and T (residual class data).  Zero when ord + norm exceeds the tail.
template <class F>
AlgebraElement<F> orbit_class_sum(const Ambient<F>& amb, const OmegaMatrix& omega,
                                  const TypeFunction& rho) {
  const Group& G = *amb.group;
  int n = amb.n, m = omega.size();
  require(m <= n, "orbit_class_sum: omega larger than ambient");
  AlgebraElement<F> out(amb);
  if (omega.ord() + rho.norm() > n - m) return out;
  std::vector<int> tail;
  for (int i = m + 1; i <= n; ++i) tail.push_back(i);
  detail::subsets_of_size(tail, omega.ord(), [&](const std::vector<int>& P) {
    AlgebraElement<F> gsum(amb);
    for (const RookMatrix& g : gamma_realizations(G, n, omega, P))
      gsum.add_term(g, amb.make(1));
    std::vector<int> rest;
    for (int i : tail)
      if (!std::binary_search(P.begin(), P.end(), i)) rest.push_back(i);
    detail::subsets_of_size(rest, rho.norm(), [&](const std::vector<int>& T) {
      out = out + gsum * class_sum_on(amb, rho, T);
    });
  });
  return out;
}

// Delta_n^{Omega,rho}: the corner-stable version, cut by the (1 - eps)
// idempotents on both chain and residual supports.
template <class F>
AlgebraElement<F> stable_orbit_sum(const Ambient<F>& amb, const OmegaMatrix& omega,
                                   const TypeFunction& rho) {
  const Group& G = *amb.group;
  require(amb.kind == BasisKind::semigroup, "stable_orbit_sum: semigroup ambient required");
  int n = amb.n, m = omega.size();
  require(m <= n, "stable_orbit_sum: omega larger than ambient");
  AlgebraElement<F> out(amb);
  if (omega.ord() + rho.norm() > n - m) return out;
  std::vector<int> tail;
  for (int i = m + 1; i <= n; ++i) tail.push_back(i);
  detail::subsets_of_size(tail, omega.ord(), [&](const std::vector<int>& P) {
    AlgebraElement<F> gsum(amb);
    for (const RookMatrix& g : gamma_realizations(G, n, omega, P))
      gsum.add_term(g, amb.make(1));
    AlgebraElement<F> ebp = eps_bar(amb, P);
    std::vector<int> rest;
    for (int i : tail)
      if (!std::binary_search(P.begin(), P.end(), i)) rest.push_back(i);
    detail::subsets_of_size(rest, rho.norm(), [&](const std::vector<int>& T) {
      out = out + ebp * gsum * class_sum_on(amb, rho, T) * eps_bar(amb, T) * ebp;
    });
  });
  return out;
}

// Linear extension of the corner projection to algebra elements (not an
// algebra map in general; it is one on the right centralizers).
template <class F>
AlgebraElement<F> theta_element(const AlgebraElement<F>& e, int corner) {
  Ambient<F> amb = e.ambient();
  require(amb.kind == BasisKind::semigroup, "theta_element: semigroup ambient required");
  amb.n = corner;
  AlgebraElement<F> out(amb);
  for (const auto& [label, coeff] : e.terms()) out.add_term(theta(label, corner), coeff);
  return out;
}

// Linear extension of the canonical embedding.
template <class F>
AlgebraElement<F> embed_element(const AlgebraElement<F>& e, int n) {
  Ambient<F> amb = e.ambient();
  amb.n = n;
  AlgebraElement<F> out(amb);
  for (const auto& [label, coeff] : e.terms()) out.add_term(embed(label, n), coeff);
  return out;
}

}  // namespace wreath

#endif  // WREATH_CLASSDATA_HPP_
