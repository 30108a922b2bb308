#ifndef WREATH_ROOK_HPP_
#define WREATH_ROOK_HPP_

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "wreath/field.hpp"
#include "wreath/group.hpp"

namespace wreath {

// Hard cap on matrix size; enumeration guards keep real work far below it.
inline constexpr int kMaxN = 12;

// An element of the semigroup of G-labeled rook matrices of size n: at most
// one nonzero entry per row and per column.  Stored column-wise: column j
// holds (row, label) or is empty.  Rows/columns are 1-indexed in the API.
// Immutable value type with a canonical total order (lexicographic on the
// column mapping), which fixes all deterministic orderings downstream.
class RookMatrix {
 public:
  RookMatrix() : n_(0) { rows_.fill(-1), labels_.fill(-1); }

  static RookMatrix zero(int n);
  static RookMatrix identity(int n);
  // diagonal matrix with identity labels except row/column i zeroed
  static RookMatrix epsilon(int i, int n);
  // diagonal matrix with labels g_1..g_n
  static RookMatrix diagonal(const std::vector<int>& labels);
  // permutation matrix of the transposition (i,j)
  static RookMatrix transposition(int i, int j, int n);

  int size() const { return n_; }
  bool column_empty(int j) const { return rows_[j - 1] < 0; }
  int row(int j) const { return rows_[j - 1] + 1; }  // valid only if nonempty
  int label(int j) const { return labels_[j - 1]; }

  void set_entry(int j, int i, int g);  // column j -> (row i, label g)
  void clear_column(int j) { rows_[j - 1] = -1, labels_[j - 1] = -1; }

  bool is_total() const;  // every row and column nonzero (element of G_n)
  // all rows and columns with index > m nonzero
  bool in_corner_complement(int m) const;

  // 0 if column k does not map to row k with the identity label; otherwise 1.
  bool diagonal_identity_at(int k) const {
    return rows_[k - 1] == k - 1 && labels_[k - 1] == 0;
  }

  friend bool operator==(const RookMatrix& a, const RookMatrix& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_ && a.labels_ == b.labels_;
  }
  friend std::strong_ordering operator<=>(const RookMatrix& a, const RookMatrix& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    for (int j = 0; j < a.n_; ++j) {
      if (auto c = a.rows_[j] <=> b.rows_[j]; c != 0) return c;
      if (auto c = a.labels_[j] <=> b.labels_[j]; c != 0) return c;
    }
    return std::strong_ordering::equal;
  }

  size_t hash() const;

 private:
  std::int8_t n_;
  std::array<std::int8_t, kMaxN> rows_;    // 0-based row, -1 empty
  std::array<std::int8_t, kMaxN> labels_;  // group element index, -1 empty
};

struct RookMatrixHash {
  size_t operator()(const RookMatrix& m) const { return m.hash(); }
};

// An element (g, sigma) of the wreath product G_n = G^n x| S_n.
// sigma is stored as the images sigma(1..n).
struct WreathElement {
  std::vector<int> labels;  // g_1..g_n (element indices), slot i at [i-1]
  std::vector<int> sigma;   // sigma(j) at [j-1]

  int size() const { return static_cast<int>(labels.size()); }
  static WreathElement identity(int n);
  bool is_valid() const;
};

// Product (g,sigma)(h,tau) = (g * sigma(h), sigma tau); matches the matrix
// product under from_wreath.
WreathElement wreath_multiply(const Group& G, const WreathElement& a, const WreathElement& b);

// Column j carries label g_{sigma(j)} in row sigma(j).  Injective and
// multiplicative.
RookMatrix from_wreath(const WreathElement& x);
WreathElement to_wreath(const RookMatrix& m);  // requires is_total()

// Matrix product with 0 absorbing.  Requires equal sizes.
RookMatrix multiply(const Group& G, const RookMatrix& a, const RookMatrix& b);

// Upper-left corner of order m (m <= n).
RookMatrix theta(const RookMatrix& m, int corner);
// The canonical embedding into size n: identity outside the corner.
RookMatrix embed(const RookMatrix& m, int n);

struct RookStatistics {
  std::vector<int> moved;        // J: columns k with entry(k,k) != identity
  std::vector<int> fixed;        // complement of J in 1..n
  int degree = 0;                // |J|
  int rank = 0;                  // number of nonzero columns
  std::vector<int> moved_tail;   // J_m: members of J greater than m
  int degree_tail = 0;           // |J_m|
};

RookStatistics statistics(const RookMatrix& m, int tail_from = 0);

inline int degree_of(const RookMatrix& m) {
  int d = 0;
  for (int k = 1; k <= m.size(); ++k)
    if (!m.diagonal_identity_at(k)) ++d;
  return d;
}

inline int degree_tail_of(const RookMatrix& m, int tail_from) {
  int d = 0;
  for (int k = tail_from + 1; k <= m.size(); ++k)
    if (!m.diagonal_identity_at(k)) ++d;
  return d;
}

inline bool is_group_element(const RookMatrix& m) { return m.is_total(); }
inline bool in_gamma_mn(const RookMatrix& m, int corner) {
  return m.in_corner_complement(corner);
}

// Inverse of a total matrix.
RookMatrix rook_inverse(const Group& G, const RookMatrix& m);

// |semigroup| = sum_t C(n,t)^2 t! |G|^t.
BigInt semigroup_size(int n, int group_order);

// Visits every size-n rook matrix exactly once, in the canonical order.
// Throws if the semigroup size exceeds cap (0 = use the configured default).
void for_each_rook_matrix(int n, const Group& G,
                          const std::function<void(const RookMatrix&)>& fn,
                          BigInt cap = 0);
std::vector<RookMatrix> enumerate_semigroup(int n, const Group& G, BigInt cap = 0);

// Total matrices only (the wreath product subgroup).
std::vector<RookMatrix> enumerate_group_elements(int n, const Group& G);
// Elements whose rows/columns > m are all nonzero.
std::vector<RookMatrix> enumerate_corner_complement(int n, int m, const Group& G);

// Default enumeration cap; WREATHCENT_CAP overrides.
BigInt enumeration_cap();

// Textual form `{1->(2,g), 3->(1,-1)}`; zero columns omitted.
std::string rook_to_string(const RookMatrix& m, const Group& G);
RookMatrix rook_from_string(const std::string& text, const Group& G, int n);

}  // namespace wreath

#endif  // WREATH_ROOK_HPP_
