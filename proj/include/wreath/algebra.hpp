#ifndef WREATH_ALGEBRA_HPP_
#define WREATH_ALGEBRA_HPP_

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "wreath/error.hpp"
#include "wreath/field.hpp"
#include "wreath/rook.hpp"

namespace wreath {

enum class BasisKind { semigroup, group };

inline const char* kind_name(BasisKind k) {
  return k == BasisKind::semigroup ? "semigroup" : "group";
}

// Where an algebra element lives: F[semigroup of n x n G-rook matrices] or
// F[G_n] (total matrices only).  Carries the field-constant maker so that
// generic code can build scalars (Fp needs the modulus at runtime).
template <class F>
struct Ambient {
  GroupPtr group;
  int n = 0;
  BasisKind kind = BasisKind::semigroup;
  typename FieldOps<F>::Maker make{};

  friend bool operator==(const Ambient& a, const Ambient& b) {
    return a.group == b.group && a.n == b.n && a.kind == b.kind;
  }
};

using RationalAmbient = Ambient<Rational>;

// A finitely supported linear combination of rook matrices with exact field
// coefficients.  Terms are kept sorted by the canonical order on RookMatrix
// with no zero coefficients stored.  Value type; never mutated in place by
// the algebraic operations.
template <class F>
class AlgebraElement {
 public:
  using Term = std::pair<RookMatrix, F>;

  AlgebraElement() = default;
  explicit AlgebraElement(Ambient<F> amb) : amb_(std::move(amb)) {}

  static AlgebraElement zero(Ambient<F> amb) { return AlgebraElement(std::move(amb)); }

  static AlgebraElement unit(Ambient<F> amb) {
    AlgebraElement e(std::move(amb));
    e.add_term(RookMatrix::identity(e.amb_.n), e.amb_.make(1));
    return e;
  }

  static AlgebraElement basis(Ambient<F> amb, const RookMatrix& m) {
    AlgebraElement e(std::move(amb));
    e.add_term(m, e.amb_.make(1));
    return e;
  }

  static AlgebraElement basis(Ambient<F> amb, const RookMatrix& m, F coeff) {
    AlgebraElement e(std::move(amb));
    e.add_term(m, std::move(coeff));
    return e;
  }

  const Ambient<F>& ambient() const { return amb_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t support_size() const { return terms_.size(); }

  // Coefficient of a basis label (zero if absent).
  F coeff(const RookMatrix& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const RookMatrix& k) { return t.first < k; });
    if (it != terms_.end() && it->first == m) return it->second;
    return amb_.make(0);
  }

  void add_term(const RookMatrix& m, F coeff) {
    check_label(m);
    if (wreath::is_zero(coeff)) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const RookMatrix& k) { return t.first < k; });
    if (it != terms_.end() && it->first == m) {
      it->second += coeff;
      if (wreath::is_zero(it->second)) terms_.erase(it);
    } else {
      terms_.insert(it, {m, std::move(coeff)});
    }
  }

  friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
    a.check_same(b);
    AlgebraElement out(a.amb_);
    out.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    while (ia != a.terms_.end() || ib != b.terms_.end()) {
      if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->first < ib->first)) {
        out.terms_.push_back(*ia++);
      } else if (ia == a.terms_.end() || ib->first < ia->first) {
        out.terms_.push_back(*ib++);
      } else {
        F c = ia->second + ib->second;
        if (!wreath::is_zero(c)) out.terms_.push_back({ia->first, std::move(c)});
        ++ia, ++ib;
      }
    }
    return out;
  }

  AlgebraElement negated() const {
    AlgebraElement out(amb_);
    out.terms_ = terms_;
    for (auto& t : out.terms_) t.second = -t.second;
    return out;
  }

  friend AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
    return a + b.negated();
  }

  AlgebraElement scaled(const F& c) const {
    AlgebraElement out(amb_);
    if (wreath::is_zero(c)) return out;
    out.terms_ = terms_;
    for (auto& t : out.terms_) t.second *= c;
    return out;
  }

  AlgebraElement scaled(std::int64_t c) const { return scaled(amb_.make(c)); }

  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
    a.check_same(b);
    AlgebraElement out(a.amb_);
    if (a.is_zero() || b.is_zero()) return out;
    const Group& G = *a.amb_.group;
    std::vector<Term> acc;
    acc.reserve(a.terms_.size() * b.terms_.size());
    for (const Term& ta : a.terms_)
      for (const Term& tb : b.terms_)
        acc.push_back({multiply(G, ta.first, tb.first), ta.second * tb.second});
    std::sort(acc.begin(), acc.end(),
              [](const Term& x, const Term& y) { return x.first < y.first; });
    for (auto& t : acc) {
      if (!out.terms_.empty() && out.terms_.back().first == t.first) {
        out.terms_.back().second += t.second;
        if (wreath::is_zero(out.terms_.back().second)) out.terms_.pop_back();
      } else if (!wreath::is_zero(t.second)) {
        out.terms_.push_back(std::move(t));
      }
    }
    return out;
  }

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    a.check_same(b);
    return a.terms_ == b.terms_;
  }

  // max degree (or tail degree when tail_from > 0) over the support;
  // undefined on the zero element.
  int degree(int tail_from = 0) const {
    require(!terms_.empty(), "degree: undefined for the zero element");
    int d = 0;
    for (const Term& t : terms_)
      d = std::max(d, degree_tail_of(t.first, tail_from));
    return d;
  }

  // Reinterpret in another basis kind (labels must satisfy the target
  // invariant; checked).
  AlgebraElement as_kind(BasisKind k) const {
    AlgebraElement out(Ambient<F>{amb_.group, amb_.n, k, amb_.make});
    for (const Term& t : terms_) out.add_term(t.first, t.second);
    return out;
  }

 private:
  void check_label(const RookMatrix& m) const {
    require(m.size() == amb_.n, "algebra: label size mismatch");
    require(amb_.kind == BasisKind::semigroup || m.is_total(),
            "algebra: non-total label in a group-algebra element");
  }
  void check_same(const AlgebraElement& o) const {
    require(amb_ == o.amb_, "algebra: ambient mismatch");
  }

  Ambient<F> amb_;
  std::vector<Term> terms_;
};

template <class F>
std::string to_display_string(const AlgebraElement<F>& e) {
  if (e.is_zero()) return "0";
  std::string s;
  const Group& G = *e.ambient().group;
  for (const auto& [label, coeff] : e.terms()) {
    if (!s.empty()) s += " + ";
    s += FieldOps<F>::str(coeff) + "*" + rook_to_string(label, G);
  }
  return s;
}

}  // namespace wreath

#endif  // WREATH_ALGEBRA_HPP_
