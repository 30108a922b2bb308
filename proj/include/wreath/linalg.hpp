#ifndef WREATH_LINALG_HPP_
#define WREATH_LINALG_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <unordered_map>
#include <utility>
#include <vector>

#include "wreath/algebra.hpp"
#include "wreath/error.hpp"
#include "wreath/field.hpp"

namespace wreath {

// Sparse vector: (column, coefficient) pairs sorted by column, no zeros.
template <class F>
using SparseVec = std::vector<std::pair<std::int32_t, F>>;

namespace detail {

template <class F>
void sort_and_combine(SparseVec<F>& v) {
  std::sort(v.begin(), v.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec<F> out;
  out.reserve(v.size());
  for (auto& e : v) {
    if (!out.empty() && out.back().first == e.first) {
      out.back().second += e.second;
      if (is_zero(out.back().second)) out.pop_back();
    } else if (!is_zero(e.second)) {
      out.push_back(std::move(e));
    }
  }
  v = std::move(out);
}

// Scale a rational row to coprime integer entries with positive leading
// entry; keeps elimination fraction-free.
inline void normalize_row(SparseVec<Rational>& v) {
  if (v.empty()) return;
  BigInt lcm = 1;
  for (const auto& e : v) lcm = boost::multiprecision::lcm(lcm, denominator(e.second));
  BigInt gcd = 0;
  for (auto& e : v) {
    e.second *= Rational(lcm);
    gcd = boost::multiprecision::gcd(gcd, numerator(e.second));
  }
  if (gcd == 0) return;
  if (v.front().second < 0) gcd = -gcd;
  for (auto& e : v) e.second /= Rational(gcd);
}

inline void normalize_row(SparseVec<Fp>& v) {
  if (v.empty()) return;
  Fp lead = v.front().second;
  for (auto& e : v) e.second /= lead;
}

// row2 <- row2 * a - row1 * b (a = pivot coefficient of row1's lead in row1,
// b = coefficient of that column in row2), then renormalized.  With integer
// rows this is the fraction-free update.
template <class F>
SparseVec<F> eliminate_lead(const SparseVec<F>& row2, const SparseVec<F>& row1, const F& a,
                            const F& b) {
  SparseVec<F> out;
  out.reserve(row2.size() + row1.size());
  auto i2 = row2.begin();
  auto i1 = row1.begin();
  while (i2 != row2.end() || i1 != row1.end()) {
    if (i1 == row1.end() || (i2 != row2.end() && i2->first < i1->first)) {
      out.push_back({i2->first, i2->second * a});
      ++i2;
    } else if (i2 == row2.end() || i1->first < i2->first) {
      out.push_back({i1->first, -(i1->second * b)});
      ++i1;
    } else {
      F c = i2->second * a - i1->second * b;
      if (!is_zero(c)) out.push_back({i2->first, std::move(c)});
      ++i2, ++i1;
    }
  }
  normalize_row(out);
  return out;
}

}  // namespace detail

// Incremental row-echelon span.  Deterministic: pivots are the leading
// (minimal) columns of inserted rows, in insertion order.
template <class F>
class SpanBasis {
 public:
  // Returns true if the row enlarged the span.
  bool insert(SparseVec<F> row) {
    reduce(row);
    if (row.empty()) return false;
    lead_.emplace(row.front().first, static_cast<int>(rows_.size()));
    rows_.push_back(std::move(row));
    return true;
  }

  // Reduces v against the current span in place; empty result means v was in
  // the span.
  void reduce(SparseVec<F>& v) const {
    detail::sort_and_combine(v);
    detail::normalize_row(v);
    while (!v.empty()) {
      auto it = lead_.find(v.front().first);
      if (it == lead_.end()) return;
      const SparseVec<F>& pivot = rows_[it->second];
      v = detail::eliminate_lead(v, pivot, pivot.front().second, v.front().second);
    }
  }

  bool contains(SparseVec<F> v) const {
    reduce(v);
    return v.empty();
  }

  int rank() const { return static_cast<int>(rows_.size()); }
  const std::vector<SparseVec<F>>& rows() const { return rows_; }

 private:
  std::vector<SparseVec<F>> rows_;
  std::unordered_map<std::int32_t, int> lead_;
};

template <class F>
int rank_of(const std::vector<SparseVec<F>>& rows) {
  SpanBasis<F> span;
  for (const auto& r : rows) span.insert(r);
  return span.rank();
}

// Exact kernel of the constraint matrix {rows} acting on columns 0..ncols-1.
// Unit-difference rows are merged by a union-find presolve; the quotient
// system is eliminated fraction-free; kernel vectors are lifted back,
// normalized, and ordered by their leading free column.
template <class F>
std::vector<SparseVec<F>> nullspace(const std::vector<SparseVec<F>>& rows_in, int ncols,
                                    const typename FieldOps<F>::Maker& make = {}) {
  require(ncols >= 0, "nullspace: negative column count");
  for (const auto& r : rows_in)
    for (const auto& [c, v] : r)
      require(c >= 0 && c < ncols, "nullspace: column index out of range");

  // union-find with multipliers: x_col = mult[col] * x_root(col)
  std::vector<std::int32_t> parent(ncols);
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<F> mult(ncols, make(1));
  std::vector<char> is_zero_class(ncols, 0);

  std::function<std::int32_t(std::int32_t)> find = [&](std::int32_t c) -> std::int32_t {
    if (parent[c] == c) return c;
    std::int32_t r = find(parent[c]);
    if (parent[c] != r) {
      mult[c] = mult[c] * mult[parent[c]];
      parent[c] = r;
    }
    return r;
  };
  auto multiplier = [&](std::int32_t c) {
    find(c);
    return parent[c] == c ? make(1) : mult[c];
  };

  std::vector<SparseVec<F>> deferred;
  for (const auto& row_raw : rows_in) {
    SparseVec<F> row = row_raw;
    detail::sort_and_combine(row);
    if (row.empty()) continue;
    if (row.size() == 1) {
      is_zero_class[find(row[0].first)] = 1;
      continue;
    }
    if (row.size() == 2) {
      std::int32_t a = row[0].first, b = row[1].first;
      F ca = row[0].second * multiplier(a);
      F cb = row[1].second * multiplier(b);
      std::int32_t ra = find(a), rb = find(b);
      if (ra == rb) {
        if (!is_zero(ca + cb)) is_zero_class[ra] = 1;
        continue;
      }
      bool zero_union = is_zero_class[ra] || is_zero_class[rb];
      // attach the larger root below the smaller one: x_hi = q * x_lo
      std::int32_t lo = std::min(ra, rb), hi = std::max(ra, rb);
      // ca*x_ra + cb*x_rb = 0
      F q = (hi == ra) ? -(cb / ca) : -(ca / cb);
      parent[hi] = lo;
      mult[hi] = q;
      is_zero_class[lo] = zero_union ? 1 : is_zero_class[lo];
      continue;
    }
    deferred.push_back(std::move(row));
  }
  // propagate zero flags to roots
  for (std::int32_t c = 0; c < ncols; ++c)
    if (is_zero_class[c]) is_zero_class[find(c)] = 1;

  // quotient variables = surviving roots, ascending
  std::vector<std::int32_t> roots;
  std::unordered_map<std::int32_t, std::int32_t> qindex;
  for (std::int32_t c = 0; c < ncols; ++c)
    if (find(c) == c && !is_zero_class[c]) {
      qindex.emplace(c, static_cast<std::int32_t>(roots.size()));
      roots.push_back(c);
    }

  // rewrite deferred rows on quotient variables
  std::vector<SparseVec<F>> qrows;
  qrows.reserve(deferred.size());
  for (const auto& row : deferred) {
    SparseVec<F> q;
    q.reserve(row.size());
    for (const auto& [c, coeff] : row) {
      std::int32_t r = find(c);
      if (is_zero_class[r]) continue;
      q.push_back({qindex[r], coeff * multiplier(c)});
    }
    detail::sort_and_combine(q);
    detail::normalize_row(q);
    if (!q.empty()) qrows.push_back(std::move(q));
  }
  std::sort(qrows.begin(), qrows.end());
  qrows.erase(std::unique(qrows.begin(), qrows.end()), qrows.end());

  // fraction-free echelon on the quotient system
  SpanBasis<F> echelon;
  for (auto& r : qrows) echelon.insert(std::move(r));

  std::vector<char> pivot_col(roots.size(), 0);
  // rows sorted by pivot column, descending, for back-substitution
  std::vector<const SparseVec<F>*> by_pivot;
  for (const auto& r : echelon.rows()) {
    pivot_col[r.front().first] = 1;
    by_pivot.push_back(&r);
  }
  std::sort(by_pivot.begin(), by_pivot.end(),
            [](const SparseVec<F>* a, const SparseVec<F>* b) {
              return a->front().first > b->front().first;
            });

  std::vector<SparseVec<F>> kernel;
  for (std::int32_t f = 0; f < static_cast<std::int32_t>(roots.size()); ++f) {
    if (pivot_col[f]) continue;
    // dense solve in quotient space
    std::vector<F> val(roots.size(), make(0));
    val[f] = make(1);
    for (const SparseVec<F>* row : by_pivot) {
      F acc = make(0);
      for (size_t k = 1; k < row->size(); ++k) acc += (*row)[k].second * val[(*row)[k].first];
      val[row->front().first] = -(acc / row->front().second);
    }
    // lift to original columns
    SparseVec<F> v;
    for (std::int32_t c = 0; c < ncols; ++c) {
      std::int32_t r = find(c);
      if (is_zero_class[r]) continue;
      F x = val[qindex[r]] * multiplier(c);
      if (!is_zero(x)) v.push_back({c, std::move(x)});
    }
    detail::normalize_row(v);
    kernel.push_back(std::move(v));
  }
  return kernel;
}

// Basis of the intersection of two spans inside F^ncols.
template <class F>
std::vector<SparseVec<F>> span_intersection(const std::vector<SparseVec<F>>& a,
                                            const std::vector<SparseVec<F>>& b, int ncols,
                                            const typename FieldOps<F>::Maker& make = {}) {
  int na = static_cast<int>(a.size()), nb = static_cast<int>(b.size());
  // constraint rows indexed by ambient coordinate: sum_i alpha_i a_i[c] -
  // sum_j beta_j b_j[c] = 0
  std::vector<SparseVec<F>> rows(ncols);
  for (int i = 0; i < na; ++i)
    for (const auto& [c, coeff] : a[i]) rows[c].push_back({i, coeff});
  for (int j = 0; j < nb; ++j)
    for (const auto& [c, coeff] : b[j]) rows[c].push_back({na + j, -coeff});
  std::vector<SparseVec<F>> ker = nullspace(rows, na + nb, make);
  SpanBasis<F> result;
  std::vector<SparseVec<F>> out;
  for (const auto& k : ker) {
    SparseVec<F> v;
    for (const auto& [idx, coeff] : k) {
      if (idx >= na) break;
      for (const auto& [c, ac] : a[idx]) v.push_back({c, ac * coeff});
    }
    detail::sort_and_combine(v);
    if (result.insert(v)) out.push_back(std::move(v));
  }
  return out;
}

// Dense label -> column interning for one linear-algebra problem.
class LabelInterner {
 public:
  LabelInterner() = default;
  explicit LabelInterner(const std::vector<RookMatrix>& labels) {
    for (const RookMatrix& m : labels) intern(m);
  }

  std::int32_t intern(const RookMatrix& m) {
    auto [it, inserted] = index_.try_emplace(m, static_cast<std::int32_t>(labels_.size()));
    if (inserted) labels_.push_back(m);
    return it->second;
  }
  // -1 when absent
  std::int32_t lookup(const RookMatrix& m) const {
    auto it = index_.find(m);
    return it == index_.end() ? -1 : it->second;
  }
  const RookMatrix& label(std::int32_t col) const { return labels_[col]; }
  int size() const { return static_cast<int>(labels_.size()); }

 private:
  std::unordered_map<RookMatrix, std::int32_t, RookMatrixHash> index_;
  std::vector<RookMatrix> labels_;
};

template <class F>
SparseVec<F> to_sparse(const AlgebraElement<F>& e, LabelInterner& interner) {
  SparseVec<F> v;
  v.reserve(e.support_size());
  for (const auto& [label, coeff] : e.terms()) v.push_back({interner.intern(label), coeff});
  detail::sort_and_combine(v);
  return v;
}

template <class F>
AlgebraElement<F> from_sparse(const SparseVec<F>& v, const LabelInterner& interner,
                              const Ambient<F>& amb) {
  AlgebraElement<F> e(amb);
  for (const auto& [col, coeff] : v) e.add_term(interner.label(col), coeff);
  return e;
}

}  // namespace wreath

#endif  // WREATH_LINALG_HPP_
