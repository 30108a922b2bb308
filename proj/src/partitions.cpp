#include "wreath/partitions.hpp"

#include <algorithm>
#include <functional>

#include "wreath/error.hpp"

namespace wreath {

bool is_valid_partition(const Partition& p) {
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 1) return false;
    if (i > 0 && p[i] > p[i - 1]) return false;
  }
  return true;
}

std::vector<Partition> partitions_of(int n) {
  require(n >= 0, "partitions_of: negative n");
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int rest, int maxpart) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int part = std::min(rest, maxpart); part >= 1; --part) {
      cur.push_back(part);
      rec(rest - part, part);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

Partition partition_union(const Partition& a, const Partition& b) {
  Partition u = a;
  u.insert(u.end(), b.begin(), b.end());
  std::sort(u.begin(), u.end(), std::greater<int>());
  return u;
}

std::int64_t standard_tableaux_count(const Partition& p) {
  require(is_valid_partition(p), "standard_tableaux_count: invalid partition");
  int n = partition_weight(p);
  if (n == 0) return 1;
  // hook product
  std::int64_t numer = 1;
  for (int i = 2; i <= n; ++i) numer *= i;
  std::int64_t hooks = 1;
  int rows = static_cast<int>(p.size());
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < p[i]; ++j) {
      int arm = p[i] - j - 1;
      int leg = 0;
      for (int k = i + 1; k < rows; ++k)
        if (p[k] > j) ++leg;
      hooks *= arm + leg + 1;
    }
  }
  require(numer % hooks == 0, "standard_tableaux_count: hook product does not divide n!");
  return numer / hooks;
}

std::vector<std::vector<Partition>> multipartitions_of(int n, int r) {
  require(n >= 0 && r >= 1, "multipartitions_of: bad arguments");
  std::vector<std::vector<Partition>> out;
  std::vector<Partition> cur(r);
  std::function<void(int, int)> rec = [&](int slot, int rest) {
    if (slot == r - 1) {
      for (const Partition& p : partitions_of(rest)) {
        cur[slot] = p;
        out.push_back(cur);
      }
      cur[slot].clear();
      return;
    }
    for (int w = 0; w <= rest; ++w) {
      for (const Partition& p : partitions_of(w)) {
        cur[slot] = p;
        rec(slot + 1, rest - w);
      }
    }
    cur[slot].clear();
  };
  rec(0, n);
  return out;
}

std::string partition_to_string(const Partition& p) {
  std::string s = "(";
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  s += ")";
  return s;
}

}  // namespace wreath
