#ifndef WREATH_GROUP_HPP_
#define WREATH_GROUP_HPP_

#include <memory>
#include <string>
#include <vector>

namespace wreath {

// A finite group given by its full Cayley table.  Element 0 is the identity.
// Immutable after construction; all downstream code shares it by
// shared_ptr<const Group>.
class Group {
 public:
  // Validates the table: identity at index 0, associativity, two-sided
  // inverses.  Throws Error with the offending indices otherwise.
  Group(std::vector<std::vector<int>> table, std::vector<std::string> names = {},
        std::string description = "");

  int order() const { return order_; }
  int mult(int a, int b) const { return table_[a][b]; }
  int inverse(int a) const { return inv_[a]; }
  bool is_abelian() const { return abelian_; }

  const std::string& name_of(int a) const { return names_[a]; }
  // -1 if no element carries this name and it is not a valid index.
  int element_by_name(const std::string& name) const;

  // Conjugacy classes: class 0 = {0}, then ordered by minimal element index.
  int class_count() const { return static_cast<int>(classes_.size()); }
  const std::vector<std::vector<int>>& conjugacy_classes() const { return classes_; }
  int class_of(int g) const;

  // A small generating set found greedily (deterministic).
  const std::vector<int>& generators() const { return generators_; }

  std::string describe() const { return description_; }

 private:
  int order_;
  std::vector<std::vector<int>> table_;
  std::vector<int> inv_;
  std::vector<std::string> names_;
  std::vector<std::vector<int>> classes_;
  std::vector<int> class_index_;
  std::vector<int> generators_;
  bool abelian_;
  std::string description_;
};

using GroupPtr = std::shared_ptr<const Group>;

// Built-in families.
GroupPtr trivial_group();
GroupPtr cyclic_group(int r);
GroupPtr symmetric_group(int k);
GroupPtr dihedral_group(int k);  // order 2k

// Built-in name ("trivial", "c3"/"cyclic(3)", "s3"/"symmetric(3)",
// "d4"/"dihedral(4)") or a Cayley-table file path.
GroupPtr load_group(const std::string& spec);

GroupPtr load_group_file(const std::string& path);
void save_group_file(const Group& g, const std::string& path);

}  // namespace wreath

#endif  // WREATH_GROUP_HPP_
