#ifndef WREATH_TYPEFUNC_HPP_
#define WREATH_TYPEFUNC_HPP_

#include <compare>
#include <string>
#include <vector>

#include "wreath/group.hpp"
#include "wreath/partitions.hpp"
#include "wreath/rook.hpp"

namespace wreath {

// A partition-valued function on the conjugacy classes of G: one partition
// per class, indexed by the canonical class order (identity class first).
// The complete conjugacy invariant of the wreath product.
struct TypeFunction {
  std::vector<Partition> parts;

  static TypeFunction empty(int class_count) {
    TypeFunction t;
    t.parts.resize(class_count);
    return t;
  }
  // the atom with partition (i) at class k (0-based) and empty elsewhere
  static TypeFunction atom(int class_index, int part, int class_count);

  int class_count() const { return static_cast<int>(parts.size()); }
  int norm() const {
    int s = 0;
    for (const Partition& p : parts) s += partition_weight(p);
    return s;
  }
  // partwise multiset union
  TypeFunction union_with(const TypeFunction& o) const;
  bool class0_has_part_one() const {
    return !parts.empty() && !parts[0].empty() && parts[0].back() == 1;
  }

  friend bool operator==(const TypeFunction& a, const TypeFunction& b) = default;
  // by norm, then lexicographically per class; fixes enumeration order
  friend std::strong_ordering operator<=>(const TypeFunction& a, const TypeFunction& b);

  std::string str() const;
};

// Cycle type of a wreath-product element: decompose sigma into cycles, take
// the conjugacy class of each cycle product, record the cycle length there.
TypeFunction type_of(const Group& G, const WreathElement& x);
TypeFunction type_of(const Group& G, const RookMatrix& m);  // requires total

enum class TypeBound { exact, at_most };

// All type functions with norm == bound (exact) or <= bound, sorted.
std::vector<TypeFunction> enumerate_types(const Group& G, int bound, TypeBound mode);

int count_types(const Group& G, int bound, TypeBound mode);

// `(1);(2)` -> partitions per class.
TypeFunction type_from_string(const std::string& text, const Group& G);

}  // namespace wreath

#endif  // WREATH_TYPEFUNC_HPP_
