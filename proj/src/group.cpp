#include "wreath/group.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "wreath/error.hpp"

namespace wreath {

namespace {

std::vector<int> closure_of(const Group& g, std::vector<int> seed) {
  std::set<int> seen(seed.begin(), seed.end());
  seen.insert(0);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> cur(seen.begin(), seen.end());
    for (int a : cur)
      for (int b : cur) {
        int c = g.mult(a, b);
        if (seen.insert(c).second) grew = true;
      }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

Group::Group(std::vector<std::vector<int>> table, std::vector<std::string> names,
             std::string description)
    : order_(static_cast<int>(table.size())),
      table_(std::move(table)),
      names_(std::move(names)),
      description_(std::move(description)) {
  require(order_ >= 1, "group: empty Cayley table");
  for (int a = 0; a < order_; ++a) {
    require(static_cast<int>(table_[a].size()) == order_,
            "group: row " + std::to_string(a) + " has wrong length");
    for (int b = 0; b < order_; ++b)
      require(table_[a][b] >= 0 && table_[a][b] < order_,
              "group: entry (" + std::to_string(a) + "," + std::to_string(b) + ") out of range");
  }
  for (int a = 0; a < order_; ++a) {
    require(table_[0][a] == a && table_[a][0] == a,
            "group: index 0 is not a two-sided identity (fails at " + std::to_string(a) + ")");
  }
  for (int a = 0; a < order_; ++a)
    for (int b = 0; b < order_; ++b)
      for (int c = 0; c < order_; ++c)
        require(table_[table_[a][b]][c] == table_[a][table_[b][c]],
                "group: associativity fails at (" + std::to_string(a) + "," + std::to_string(b) +
                    "," + std::to_string(c) + ")");
  inv_.assign(order_, -1);
  for (int a = 0; a < order_; ++a) {
    for (int b = 0; b < order_; ++b)
      if (table_[a][b] == 0 && table_[b][a] == 0) {
        inv_[a] = b;
        break;
      }
    require(inv_[a] >= 0, "group: element " + std::to_string(a) + " has no two-sided inverse");
  }
  abelian_ = true;
  for (int a = 0; a < order_ && abelian_; ++a)
    for (int b = 0; b < a; ++b)
      if (table_[a][b] != table_[b][a]) {
        abelian_ = false;
        break;
      }

  if (names_.empty()) {
    names_.resize(order_);
    for (int a = 0; a < order_; ++a) names_[a] = std::to_string(a);
  }
  require(static_cast<int>(names_.size()) == order_, "group: wrong number of names");

  // conjugacy classes: orbits of conjugation, class {0} first, then by
  // minimal element index
  class_index_.assign(order_, -1);
  std::vector<char> done(order_, 0);
  for (int a = 0; a < order_; ++a) {
    if (done[a]) continue;
    std::set<int> orbit;
    for (int b = 0; b < order_; ++b) orbit.insert(table_[table_[b][a]][inv_[b]]);
    std::vector<int> cls(orbit.begin(), orbit.end());
    int idx = static_cast<int>(classes_.size());
    for (int x : cls) {
      done[x] = 1;
      class_index_[x] = idx;
    }
    classes_.push_back(cls);
  }

  // greedy small generating set
  std::vector<int> gens;
  std::vector<int> closed = closure_of(*this, gens);
  while (static_cast<int>(closed.size()) < order_) {
    for (int a = 0; a < order_; ++a) {
      if (!std::binary_search(closed.begin(), closed.end(), a)) {
        gens.push_back(a);
        break;
      }
    }
    closed = closure_of(*this, gens);
  }
  if (gens.empty()) gens.push_back(0);
  generators_ = gens;
  if (description_.empty()) description_ = "order-" + std::to_string(order_);
}

int Group::element_by_name(const std::string& name) const {
  for (int a = 0; a < order_; ++a)
    if (names_[a] == name) return a;
  try {
    size_t pos = 0;
    int v = std::stoi(name, &pos);
    if (pos == name.size() && v >= 0 && v < order_) return v;
  } catch (...) {
  }
  return -1;
}

int Group::class_of(int g) const {
  require(g >= 0 && g < order_, "class_of: element index " + std::to_string(g) + " out of range");
  return class_index_[g];
}

GroupPtr trivial_group() {
  return std::make_shared<Group>(std::vector<std::vector<int>>{{0}},
                                 std::vector<std::string>{"1"}, "trivial");
}

GroupPtr cyclic_group(int r) {
  require(r >= 1, "cyclic: order must be positive");
  std::vector<std::vector<int>> t(r, std::vector<int>(r));
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b) t[a][b] = (a + b) % r;
  std::vector<std::string> names(r);
  if (r == 1) {
    names[0] = "1";
  } else if (r == 2) {
    names = {"1", "-1"};
  } else {
    names[0] = "1";
    names[1] = "g";
    for (int a = 2; a < r; ++a) names[a] = "g^" + std::to_string(a);
  }
  return std::make_shared<Group>(std::move(t), std::move(names),
                                 "cyclic(" + std::to_string(r) + ")");
}

GroupPtr symmetric_group(int k) {
  require(k >= 1 && k <= 6, "symmetric: supported range is 1..6");
  // permutations of {0..k-1} in lexicographic one-line order; identity first
  std::vector<std::vector<int>> perms;
  std::vector<int> p(k);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  int n = static_cast<int>(perms.size());
  auto index_of = [&](const std::vector<int>& q) {
    auto it = std::lower_bound(perms.begin(), perms.end(), q);
    return static_cast<int>(it - perms.begin());
  };
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<int> comp(k);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      for (int i = 0; i < k; ++i) comp[i] = perms[a][perms[b][i]];
      t[a][b] = index_of(comp);
    }
  // cycle-notation names on points 1..k
  std::vector<std::string> names(n);
  for (int a = 0; a < n; ++a) {
    const auto& q = perms[a];
    std::string s;
    std::vector<char> seen(k, 0);
    for (int i = 0; i < k; ++i) {
      if (seen[i] || q[i] == i) continue;
      s += "(";
      int j = i;
      while (!seen[j]) {
        seen[j] = 1;
        s += std::to_string(j + 1);
        j = q[j];
      }
      s += ")";
    }
    names[a] = s.empty() ? "e" : s;
  }
  return std::make_shared<Group>(std::move(t), std::move(names),
                                 "symmetric(" + std::to_string(k) + ")");
}

GroupPtr dihedral_group(int k) {
  require(k >= 1, "dihedral: k must be positive");
  int n = 2 * k;
  // element a + k*b  <->  r^a s^b,  s r s = r^{-1}
  auto idx = [&](int a, int b) { return ((a % k + k) % k) + k * (b & 1); };
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a1 = 0; a1 < k; ++a1)
    for (int b1 = 0; b1 < 2; ++b1)
      for (int a2 = 0; a2 < k; ++a2)
        for (int b2 = 0; b2 < 2; ++b2)
          t[idx(a1, b1)][idx(a2, b2)] = idx(a1 + (b1 ? -a2 : a2), b1 ^ b2);
  std::vector<std::string> names(n);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < 2; ++b) {
      std::string s;
      if (a == 0 && b == 0) s = "e";
      if (a > 0) s = a == 1 ? "r" : "r" + std::to_string(a);
      if (b) s += "s";
      names[idx(a, b)] = s;
    }
  return std::make_shared<Group>(std::move(t), std::move(names),
                                 "dihedral(" + std::to_string(k) + ")");
}

GroupPtr load_group_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), "load_group: cannot open " + path);
  int order = 0;
  require(static_cast<bool>(in >> order), "load_group: missing order line in " + path);
  require(order >= 1, "load_group: non-positive order in " + path);
  std::vector<std::vector<int>> t(order, std::vector<int>(order));
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      require(static_cast<bool>(in >> t[a][b]),
              "load_group: malformed table at row " + std::to_string(a) + " column " +
                  std::to_string(b));
  std::vector<std::string> names;
  std::string word;
  while (in >> word) names.push_back(word);
  require(names.empty() || static_cast<int>(names.size()) == order,
          "load_group: name line has wrong length");
  return std::make_shared<Group>(std::move(t), std::move(names), "file:" + path);
}

void save_group_file(const Group& g, const std::string& path) {
  std::ofstream out(path);
  require(out.good(), "save_group: cannot open " + path);
  out << g.order() << "\n";
  for (int a = 0; a < g.order(); ++a) {
    for (int b = 0; b < g.order(); ++b) out << (b ? " " : "") << g.mult(a, b);
    out << "\n";
  }
  for (int a = 0; a < g.order(); ++a) out << (a ? " " : "") << g.name_of(a);
  out << "\n";
}

GroupPtr load_group(const std::string& spec) {
  auto parse_arg = [&](const std::string& prefix) -> int {
    // "name(k)" form
    if (spec.rfind(prefix + "(", 0) == 0 && spec.back() == ')') {
      return std::stoi(spec.substr(prefix.size() + 1, spec.size() - prefix.size() - 2));
    }
    return -1;
  };
  if (spec == "trivial" || spec == "c1" || spec == "cyclic(1)") return trivial_group();
  if (int r = parse_arg("cyclic"); r > 0) return cyclic_group(r);
  if (int k = parse_arg("symmetric"); k > 0) return symmetric_group(k);
  if (int k = parse_arg("dihedral"); k > 0) return dihedral_group(k);
  if (spec.size() >= 2 && (spec[0] == 'c' || spec[0] == 's' || spec[0] == 'd')) {
    bool digits = true;
    for (size_t i = 1; i < spec.size(); ++i) digits = digits && std::isdigit(spec[i]);
    if (digits) {
      int k = std::stoi(spec.substr(1));
      if (spec[0] == 'c') return cyclic_group(k);
      if (spec[0] == 's') return symmetric_group(k);
      return dihedral_group(k);
    }
  }
  return load_group_file(spec);
}

}  // namespace wreath
