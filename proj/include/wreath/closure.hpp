#ifndef WREATH_CLOSURE_HPP_
#define WREATH_CLOSURE_HPP_

#include <vector>

#include "wreath/algebra.hpp"
#include "wreath/linalg.hpp"

namespace wreath {

// A linear basis of the unital subalgebra generated by gens, computed by
// multiplying the current span by the generators until stable.  max_dim
// bounds the iteration count (pass the ambient dimension); failure to
// stabilize within it indicates a bug and raises.
template <class F>
std::vector<AlgebraElement<F>> subalgebra_closure(const Ambient<F>& amb,
                                                  const std::vector<AlgebraElement<F>>& gens,
                                                  int max_dim) {
  LabelInterner interner;
  SpanBasis<F> span;
  std::vector<AlgebraElement<F>> basis;

  auto try_add = [&](const AlgebraElement<F>& e) {
    if (e.is_zero()) return false;
    SparseVec<F> row = to_sparse(e, interner);
    span.reduce(row);
    if (row.empty()) return false;
    AlgebraElement<F> reduced = from_sparse(row, interner, amb);
    span.insert(std::move(row));
    basis.push_back(std::move(reduced));
    return true;
  };

  try_add(AlgebraElement<F>::unit(amb));
  for (const auto& g : gens) try_add(g);

  size_t frontier_begin = 0;
  int rounds = 0;
  while (frontier_begin < basis.size()) {
    require(++rounds <= max_dim + 1, "subalgebra_closure: did not stabilize");
    size_t frontier_end = basis.size();
    for (size_t i = frontier_begin; i < frontier_end; ++i)
      for (const auto& g : gens) try_add(basis[i] * g);
    frontier_begin = frontier_end;
  }
  return basis;
}

// Constraint rows for [x, a] = 0 with x supported on `labels` and a ranging
// over `constraints`; both products must stay inside the label set.
template <class F>
std::vector<SparseVec<F>> commutant_rows(const Ambient<F>& amb,
                                         const std::vector<RookMatrix>& labels,
                                         LabelInterner& cols,
                                         const std::vector<AlgebraElement<F>>& constraints) {
  const Group& G = *amb.group;
  std::vector<SparseVec<F>> rows;
  for (const auto& a : constraints) {
    size_t base = rows.size();
    rows.resize(base + labels.size());
    for (std::int32_t c = 0; c < static_cast<std::int32_t>(labels.size()); ++c) {
      for (const auto& [t, coeff] : a.terms()) {
        std::int32_t right = cols.lookup(multiply(G, labels[c], t));
        std::int32_t left = cols.lookup(multiply(G, t, labels[c]));
        require(right >= 0 && left >= 0, "commutant: label space is not closed");
        if (right == left) continue;
        rows[base + right].push_back({c, coeff});
        rows[base + left].push_back({c, -coeff});
      }
    }
  }
  std::vector<SparseVec<F>> packed;
  packed.reserve(rows.size());
  for (auto& r : rows) {
    if (r.empty()) continue;
    detail::sort_and_combine(r);
    if (!r.empty()) packed.push_back(std::move(r));
  }
  return packed;
}

// Everything in the span of `labels` commuting with all `constraints`.
template <class F>
std::vector<AlgebraElement<F>> commutant(const Ambient<F>& amb,
                                         const std::vector<RookMatrix>& labels,
                                         const std::vector<AlgebraElement<F>>& constraints) {
  LabelInterner cols(labels);
  auto rows = commutant_rows(amb, labels, cols, constraints);
  std::vector<AlgebraElement<F>> out;
  for (const auto& v : nullspace(rows, cols.size(), amb.make))
    out.push_back(from_sparse(v, cols, amb));
  return out;
}

// Rank of a family of algebra elements.
template <class F>
int elements_rank(const std::vector<AlgebraElement<F>>& elems) {
  LabelInterner interner;
  SpanBasis<F> span;
  for (const auto& e : elems) span.insert(to_sparse(e, interner));
  return span.rank();
}

// dim(span A) == dim(span B) == dim(span A u B)
template <class F>
bool same_span(const std::vector<AlgebraElement<F>>& a,
               const std::vector<AlgebraElement<F>>& b) {
  LabelInterner interner;
  SpanBasis<F> sa, sboth;
  for (const auto& e : a) sa.insert(to_sparse(e, interner));
  SpanBasis<F> sb;
  for (const auto& e : b) sb.insert(to_sparse(e, interner));
  for (const auto& e : a) sboth.insert(to_sparse(e, interner));
  for (const auto& e : b) sboth.insert(to_sparse(e, interner));
  return sa.rank() == sb.rank() && sb.rank() == sboth.rank();
}

}  // namespace wreath

#endif  // WREATH_CLOSURE_HPP_
