#ifndef WREATH_OMEGA_HPP_
#define WREATH_OMEGA_HPP_

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "wreath/group.hpp"
#include "wreath/rook.hpp"
#include "wreath/typefunc.hpp"

namespace wreath {

// An m x m rook matrix over G x Z_+ : entries are (group label, exponent),
// at most one nonzero per row and column.  Together with a residual type it
// labels a conjugation orbit in the corner-complement semigroup.
class OmegaMatrix {
 public:
  OmegaMatrix() : m_(0) { rows_.fill(-1), labels_.fill(-1), exps_.fill(-1); }
  explicit OmegaMatrix(int m);

  static OmegaMatrix identity(int m);
  // identity except the (k,k) entry carries exponent 1
  static OmegaMatrix z_slot(int k, int m);
  // exponent-0 copy of a plain rook matrix
  static OmegaMatrix from_rook(const RookMatrix& r);

  int size() const { return m_; }
  bool column_empty(int j) const { return rows_[j - 1] < 0; }
  int row(int j) const { return rows_[j - 1] + 1; }
  int label(int j) const { return labels_[j - 1]; }
  int exponent(int j) const { return exps_[j - 1]; }

  void set_entry(int j, int i, int g, int exp);
  void clear_column(int j) { rows_[j - 1] = -1, labels_[j - 1] = -1, exps_[j - 1] = -1; }

  int ord() const {
    int s = 0;
    for (int j = 0; j < m_; ++j)
      if (rows_[j] >= 0) s += exps_[j];
    return s;
  }
  bool is_total() const {
    for (int j = 0; j < m_; ++j)
      if (rows_[j] < 0) return false;
    return true;
  }
  // forgets exponents
  RookMatrix pattern() const;

  friend bool operator==(const OmegaMatrix& a, const OmegaMatrix& b) = default;
  friend std::strong_ordering operator<=>(const OmegaMatrix& a, const OmegaMatrix& b);

  std::string str(const Group& G) const;

 private:
  std::int8_t m_;
  std::array<std::int8_t, kMaxN> rows_;
  std::array<std::int8_t, kMaxN> labels_;
  std::array<std::int8_t, kMaxN> exps_;
};

// All omega matrices with ord <= max_ord (optionally only the total ones),
// in a fixed deterministic order.
std::vector<OmegaMatrix> enumerate_omegas(int m, const Group& G, int max_ord,
                                          bool total_only = false);

int count_omegas_exact_ord(int m, const Group& G, int ord, bool total_only = false);

// The complete orbit invariant of an element of the corner-complement
// semigroup under conjugation by the tail subgroup: the chained corner
// matrix and the residual type.
struct OrbitInvariant {
  OmegaMatrix omega;
  TypeFunction residual_type;
  std::vector<int> chained;  // P: tail indices absorbed into chains

  friend bool operator==(const OrbitInvariant& a, const OrbitInvariant& b) {
    return a.omega == b.omega && a.residual_type == b.residual_type;
  }
};

OrbitInvariant orbit_invariant(const Group& G, const RookMatrix& gamma, int m);

// Elements gamma realizing (omega, P) with the identity on the rest of the
// tail; the building blocks of the orbit sums.
std::vector<RookMatrix> gamma_realizations(const Group& G, int n, const OmegaMatrix& omega,
                                           const std::vector<int>& P);

// text form `O2{1->(1,g,1), 2->(2,h)}` (exponent defaults to 0)
OmegaMatrix omega_from_string(const std::string& text, const Group& G);

}  // namespace wreath

#endif  // WREATH_OMEGA_HPP_
