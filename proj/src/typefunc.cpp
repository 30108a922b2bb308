#include "wreath/typefunc.hpp"

#include <algorithm>

#include "wreath/error.hpp"

namespace wreath {

TypeFunction TypeFunction::atom(int class_index, int part, int class_count) {
  require(class_index >= 0 && class_index < class_count, "type atom: bad class index");
  require(part >= 1, "type atom: part must be positive");
  TypeFunction t = empty(class_count);
  t.parts[class_index] = {part};
  return t;
}

TypeFunction TypeFunction::union_with(const TypeFunction& o) const {
  require(parts.size() == o.parts.size(), "type union: class count mismatch");
  TypeFunction t = *this;
  for (size_t c = 0; c < parts.size(); ++c)
    t.parts[c] = partition_union(parts[c], o.parts[c]);
  return t;
}

std::strong_ordering operator<=>(const TypeFunction& a, const TypeFunction& b) {
  if (auto c = a.norm() <=> b.norm(); c != 0) return c;
  if (auto c = a.parts.size() <=> b.parts.size(); c != 0) return c;
  for (size_t i = 0; i < a.parts.size(); ++i) {
    if (auto c = a.parts[i] <=> b.parts[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string TypeFunction::str() const {
  std::string s;
  for (size_t c = 0; c < parts.size(); ++c) {
    if (c) s += ";";
    s += partition_to_string(parts[c]);
  }
  return s;
}

TypeFunction type_of(const Group& G, const WreathElement& x) {
  require(x.is_valid(), "type_of: invalid element");
  int n = x.size();
  TypeFunction t = TypeFunction::empty(G.class_count());
  std::vector<char> seen(n + 1, 0);
  for (int start = 1; start <= n; ++start) {
    if (seen[start]) continue;
    // walk the cycle start -> sigma(start) -> ...; the cycle product is the
    // product of the labels along it, later positions multiplying on the left
    int len = 0;
    int prod = 0;  // identity
    int j = start;
    do {
      seen[j] = 1;
      ++len;
      prod = G.mult(x.labels[j - 1], prod);
      j = x.sigma[j - 1];
    } while (j != start);
    t.parts[G.class_of(prod)].push_back(len);
  }
  for (Partition& p : t.parts) std::sort(p.begin(), p.end(), std::greater<int>());
  return t;
}

TypeFunction type_of(const Group& G, const RookMatrix& m) { return type_of(G, to_wreath(m)); }

std::vector<TypeFunction> enumerate_types(const Group& G, int bound, TypeBound mode) {
  require(bound >= 0, "enumerate_types: negative bound");
  int r = G.class_count();
  std::vector<TypeFunction> out;
  int lo = mode == TypeBound::exact ? bound : 0;
  for (int w = lo; w <= bound; ++w) {
    for (auto& mp : multipartitions_of(w, r)) {
      TypeFunction t;
      t.parts = std::move(mp);
      out.push_back(std::move(t));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int count_types(const Group& G, int bound, TypeBound mode) {
  return static_cast<int>(enumerate_types(G, bound, mode).size());
}

TypeFunction type_from_string(const std::string& text, const Group& G) {
  TypeFunction t = TypeFunction::empty(G.class_count());
  size_t pos = 0;
  int cls = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  while (pos < text.size()) {
    skip_ws();
    if (pos >= text.size()) break;
    require(cls < G.class_count(), "type parse: more partitions than conjugacy classes");
    require(text[pos] == '(', "type parse: expected '(' at position " + std::to_string(pos));
    ++pos;
    Partition p;
    skip_ws();
    while (pos < text.size() && text[pos] != ')') {
      size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      require(pos > start, "type parse: expected part at position " + std::to_string(pos));
      p.push_back(std::stoi(text.substr(start, pos - start)));
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        skip_ws();
      }
    }
    require(pos < text.size(), "type parse: missing ')'");
    ++pos;
    std::sort(p.begin(), p.end(), std::greater<int>());
    require(is_valid_partition(p), "type parse: invalid partition");
    t.parts[cls++] = std::move(p);
    skip_ws();
    if (pos < text.size()) {
      require(text[pos] == ';', "type parse: expected ';' between partitions");
      ++pos;
    }
  }
  return t;
}

}  // namespace wreath
