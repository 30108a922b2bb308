#include "wreath/rook.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "wreath/error.hpp"

namespace wreath {

RookMatrix RookMatrix::zero(int n) {
  require(n >= 0 && n <= kMaxN, "rook: size out of range");
  RookMatrix m;
  m.n_ = static_cast<std::int8_t>(n);
  return m;
}

RookMatrix RookMatrix::identity(int n) {
  RookMatrix m = zero(n);
  for (int j = 1; j <= n; ++j) m.set_entry(j, j, 0);
  return m;
}

RookMatrix RookMatrix::epsilon(int i, int n) {
  require(i >= 1 && i <= n, "epsilon: index out of range");
  RookMatrix m = identity(n);
  m.clear_column(i);
  return m;
}

RookMatrix RookMatrix::diagonal(const std::vector<int>& labels) {
  RookMatrix m = zero(static_cast<int>(labels.size()));
  for (int j = 1; j <= m.size(); ++j) m.set_entry(j, j, labels[j - 1]);
  return m;
}

RookMatrix RookMatrix::transposition(int i, int j, int n) {
  require(i >= 1 && j >= 1 && i <= n && j <= n && i != j, "transposition: bad indices");
  RookMatrix m = identity(n);
  m.clear_column(i);
  m.clear_column(j);
  m.set_entry(i, j, 0);
  m.set_entry(j, i, 0);
  return m;
}

void RookMatrix::set_entry(int j, int i, int g) {
  require(j >= 1 && j <= n_ && i >= 1 && i <= n_ && g >= 0, "rook: bad entry");
  for (int c = 0; c < n_; ++c)
    require(c == j - 1 || rows_[c] != i - 1,
            "rook: row " + std::to_string(i) + " already occupied");
  rows_[j - 1] = static_cast<std::int8_t>(i - 1);
  labels_[j - 1] = static_cast<std::int8_t>(g);
}

bool RookMatrix::is_total() const {
  for (int j = 0; j < n_; ++j)
    if (rows_[j] < 0) return false;
  return true;
}

bool RookMatrix::in_corner_complement(int m) const {
  // columns m+1..n nonzero and rows m+1..n covered
  std::array<char, kMaxN> row_used{};
  for (int j = 0; j < n_; ++j)
    if (rows_[j] >= 0) row_used[rows_[j]] = 1;
  for (int k = m; k < n_; ++k)
    if (rows_[k] < 0 || !row_used[k]) return false;
  return true;
}

size_t RookMatrix::hash() const {
  size_t h = static_cast<size_t>(n_) * 1099511628211ULL;
  for (int j = 0; j < n_; ++j) {
    h = (h ^ static_cast<size_t>(rows_[j] + 1)) * 1099511628211ULL;
    h = (h ^ static_cast<size_t>(labels_[j] + 1)) * 1099511628211ULL;
  }
  return h;
}

WreathElement WreathElement::identity(int n) {
  WreathElement x;
  x.labels.assign(n, 0);
  x.sigma.resize(n);
  for (int j = 0; j < n; ++j) x.sigma[j] = j + 1;
  return x;
}

bool WreathElement::is_valid() const {
  if (labels.size() != sigma.size()) return false;
  std::vector<char> hit(sigma.size(), 0);
  for (int v : sigma) {
    if (v < 1 || v > static_cast<int>(sigma.size()) || hit[v - 1]) return false;
    hit[v - 1] = 1;
  }
  return true;
}

WreathElement wreath_multiply(const Group& G, const WreathElement& a, const WreathElement& b) {
  require(a.size() == b.size(), "wreath_multiply: size mismatch");
  int n = a.size();
  WreathElement c;
  c.labels.resize(n);
  c.sigma.resize(n);
  for (int j = 1; j <= n; ++j) c.sigma[j - 1] = a.sigma[b.sigma[j - 1] - 1];
  // (g, s)(h, t) = (g * s(h), s t) with (s(h))_i = h_{s^{-1}(i)}
  std::vector<int> sinv(n);
  for (int j = 1; j <= n; ++j) sinv[a.sigma[j - 1] - 1] = j;
  for (int i = 1; i <= n; ++i)
    c.labels[i - 1] = G.mult(a.labels[i - 1], b.labels[sinv[i - 1] - 1]);
  return c;
}

RookMatrix from_wreath(const WreathElement& x) {
  require(x.is_valid(), "from_wreath: invalid wreath element");
  int n = x.size();
  RookMatrix m = RookMatrix::zero(n);
  for (int j = 1; j <= n; ++j) m.set_entry(j, x.sigma[j - 1], x.labels[x.sigma[j - 1] - 1]);
  return m;
}

WreathElement to_wreath(const RookMatrix& m) {
  require(m.is_total(), "to_wreath: matrix is not a group element");
  int n = m.size();
  WreathElement x;
  x.labels.resize(n);
  x.sigma.resize(n);
  for (int j = 1; j <= n; ++j) {
    x.sigma[j - 1] = m.row(j);
    x.labels[m.row(j) - 1] = m.label(j);
  }
  return x;
}

RookMatrix multiply(const Group& G, const RookMatrix& a, const RookMatrix& b) {
  require(a.size() == b.size(), "rook multiply: size mismatch");
  int n = a.size();
  RookMatrix c = RookMatrix::zero(n);
  for (int j = 1; j <= n; ++j) {
    if (b.column_empty(j)) continue;
    int k = b.row(j);
    if (a.column_empty(k)) continue;
    c.set_entry(j, a.row(k), G.mult(a.label(k), b.label(j)));
  }
  return c;
}

RookMatrix theta(const RookMatrix& m, int corner) {
  require(corner >= 0 && corner <= m.size(), "theta: corner size out of range");
  RookMatrix c = RookMatrix::zero(corner);
  for (int j = 1; j <= corner; ++j)
    if (!m.column_empty(j) && m.row(j) <= corner) c.set_entry(j, m.row(j), m.label(j));
  return c;
}

RookMatrix embed(const RookMatrix& m, int n) {
  require(n >= m.size() && n <= kMaxN, "embed: target size too small or too large");
  RookMatrix c = RookMatrix::zero(n);
  for (int j = 1; j <= m.size(); ++j)
    if (!m.column_empty(j)) c.set_entry(j, m.row(j), m.label(j));
  for (int j = m.size() + 1; j <= n; ++j) c.set_entry(j, j, 0);
  return c;
}

RookStatistics statistics(const RookMatrix& m, int tail_from) {
  require(tail_from >= 0 && tail_from <= m.size(), "statistics: bad tail index");
  RookStatistics s;
  for (int k = 1; k <= m.size(); ++k) {
    if (m.diagonal_identity_at(k)) {
      s.fixed.push_back(k);
    } else {
      s.moved.push_back(k);
      if (k > tail_from) s.moved_tail.push_back(k);
    }
    if (!m.column_empty(k)) ++s.rank;
  }
  s.degree = static_cast<int>(s.moved.size());
  s.degree_tail = static_cast<int>(s.moved_tail.size());
  return s;
}

RookMatrix rook_inverse(const Group& G, const RookMatrix& m) {
  require(m.is_total(), "rook_inverse: total matrix required");
  RookMatrix inv = RookMatrix::zero(m.size());
  for (int j = 1; j <= m.size(); ++j) inv.set_entry(m.row(j), j, G.inverse(m.label(j)));
  return inv;
}

BigInt semigroup_size(int n, int group_order) {
  BigInt total = 0;
  for (int t = 0; t <= n; ++t) {
    BigInt binom = 1;
    for (int i = 0; i < t; ++i) binom = binom * (n - i) / (i + 1);
    BigInt fact = 1;
    for (int i = 2; i <= t; ++i) fact *= i;
    BigInt pw = 1;
    for (int i = 0; i < t; ++i) pw *= group_order;
    total += binom * binom * fact * pw;
  }
  return total;
}

BigInt enumeration_cap() {
  if (const char* env = std::getenv("WREATHCENT_CAP")) {
    try {
      return BigInt(std::string(env));
    } catch (...) {
      fail("WREATHCENT_CAP is not an integer");
    }
  }
  return BigInt(500000);
}

void for_each_rook_matrix(int n, const Group& G,
                          const std::function<void(const RookMatrix&)>& fn, BigInt cap) {
  require(n >= 0 && n <= kMaxN, "enumerate: size out of range");
  if (cap == 0) cap = enumeration_cap();
  BigInt size = semigroup_size(n, G.order());
  require(size <= cap,
          "enumerate: semigroup size " + size.str() + " exceeds cap " + cap.str());
  RookMatrix m = RookMatrix::zero(n);
  std::vector<char> row_used(n + 1, 0);
  // columns are filled left to right; per column the empty choice sorts
  // first, then (row, label) ascending, matching the canonical order
  std::function<void(int)> rec = [&](int j) {
    if (j > n) {
      fn(m);
      return;
    }
    m.clear_column(j);
    rec(j + 1);
    for (int i = 1; i <= n; ++i) {
      if (row_used[i]) continue;
      row_used[i] = 1;
      for (int g = 0; g < G.order(); ++g) {
        m.set_entry(j, i, g);
        rec(j + 1);
      }
      m.clear_column(j);
      row_used[i] = 0;
    }
  };
  rec(1);
}

std::vector<RookMatrix> enumerate_semigroup(int n, const Group& G, BigInt cap) {
  std::vector<RookMatrix> out;
  for_each_rook_matrix(n, G, [&](const RookMatrix& m) { out.push_back(m); }, cap);
  return out;
}

std::vector<RookMatrix> enumerate_group_elements(int n, const Group& G) {
  std::vector<RookMatrix> out;
  for_each_rook_matrix(n, G, [&](const RookMatrix& m) {
    if (m.is_total()) out.push_back(m);
  });
  return out;
}

std::vector<RookMatrix> enumerate_corner_complement(int n, int m, const Group& G) {
  std::vector<RookMatrix> out;
  for_each_rook_matrix(n, G, [&](const RookMatrix& x) {
    if (x.in_corner_complement(m)) out.push_back(x);
  });
  return out;
}

std::string rook_to_string(const RookMatrix& m, const Group& G) {
  std::string s = "{";
  bool first = true;
  for (int j = 1; j <= m.size(); ++j) {
    if (m.column_empty(j)) continue;
    if (!first) s += ", ";
    first = false;
    s += std::to_string(j) + "->(" + std::to_string(m.row(j)) + "," + G.name_of(m.label(j)) + ")";
  }
  return s + "}";
}

RookMatrix rook_from_string(const std::string& text, const Group& G, int n) {
  RookMatrix m = RookMatrix::zero(n);
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto expect = [&](char c) {
    skip_ws();
    require(pos < text.size() && text[pos] == c,
            "rook parse: expected '" + std::string(1, c) + "' at position " + std::to_string(pos));
    ++pos;
  };
  auto read_int = [&]() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    require(pos > start, "rook parse: expected integer at position " + std::to_string(start));
    return std::stoi(text.substr(start, pos - start));
  };
  expect('{');
  skip_ws();
  if (pos < text.size() && text[pos] == '}') return m;
  while (true) {
    int j = read_int();
    expect('-');
    expect('>');
    expect('(');
    int i = read_int();
    expect(',');
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && text[pos] != ')' &&
           !std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
    std::string name = text.substr(start, pos - start);
    int g = G.element_by_name(name);
    require(g >= 0, "rook parse: unknown group element '" + name + "'");
    expect(')');
    require(j >= 1 && j <= n && i >= 1 && i <= n, "rook parse: index out of range");
    m.set_entry(j, i, g);
    skip_ws();
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      continue;
    }
    break;
  }
  expect('}');
  return m;
}

}  // namespace wreath
