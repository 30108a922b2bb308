#ifndef WREATH_PARTITIONS_HPP_
#define WREATH_PARTITIONS_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace wreath {

// A partition is a weakly decreasing list of positive parts.
using Partition = std::vector<int>;

inline int partition_weight(const Partition& p) {
  int s = 0;
  for (int part : p) s += part;
  return s;
}

bool is_valid_partition(const Partition& p);

// All partitions of n, in a fixed deterministic order (largest first part
// first, i.e. (n), (n-1,1), ..., (1^n)).
std::vector<Partition> partitions_of(int n);

// Multiset union of parts, sorted decreasingly.
Partition partition_union(const Partition& a, const Partition& b);

// Number of standard Young tableaux of shape p (hook-length formula).
std::int64_t standard_tableaux_count(const Partition& p);

// All r-tuples of partitions with total weight n, deterministic order.
std::vector<std::vector<Partition>> multipartitions_of(int n, int r);

std::string partition_to_string(const Partition& p);

}  // namespace wreath

#endif  // WREATH_PARTITIONS_HPP_
