#include "wreath/omega.hpp"

#include <algorithm>
#include <functional>

#include "wreath/error.hpp"

namespace wreath {

OmegaMatrix::OmegaMatrix(int m) : OmegaMatrix() {
  require(m >= 0 && m <= kMaxN, "omega: size out of range");
  m_ = static_cast<std::int8_t>(m);
}

OmegaMatrix OmegaMatrix::identity(int m) {
  OmegaMatrix o(m);
  for (int j = 1; j <= m; ++j) o.set_entry(j, j, 0, 0);
  return o;
}

OmegaMatrix OmegaMatrix::z_slot(int k, int m) {
  require(k >= 1 && k <= m, "omega z_slot: index out of range");
  OmegaMatrix o = identity(m);
  o.set_entry(k, k, 0, 1);
  return o;
}

OmegaMatrix OmegaMatrix::from_rook(const RookMatrix& r) {
  OmegaMatrix o(r.size());
  for (int j = 1; j <= r.size(); ++j)
    if (!r.column_empty(j)) o.set_entry(j, r.row(j), r.label(j), 0);
  return o;
}

void OmegaMatrix::set_entry(int j, int i, int g, int exp) {
  require(j >= 1 && j <= m_ && i >= 1 && i <= m_ && g >= 0 && exp >= 0, "omega: bad entry");
  for (int c = 0; c < m_; ++c)
    require(c == j - 1 || rows_[c] != i - 1, "omega: row already occupied");
  rows_[j - 1] = static_cast<std::int8_t>(i - 1);
  labels_[j - 1] = static_cast<std::int8_t>(g);
  exps_[j - 1] = static_cast<std::int8_t>(exp);
}

RookMatrix OmegaMatrix::pattern() const {
  RookMatrix r = RookMatrix::zero(m_);
  for (int j = 1; j <= m_; ++j)
    if (!column_empty(j)) r.set_entry(j, row(j), label(j));
  return r;
}

std::strong_ordering operator<=>(const OmegaMatrix& a, const OmegaMatrix& b) {
  if (auto c = a.m_ <=> b.m_; c != 0) return c;
  for (int j = 0; j < a.m_; ++j) {
    if (auto c = a.rows_[j] <=> b.rows_[j]; c != 0) return c;
    if (auto c = a.labels_[j] <=> b.labels_[j]; c != 0) return c;
    if (auto c = a.exps_[j] <=> b.exps_[j]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string OmegaMatrix::str(const Group& G) const {
  std::string s = "O" + std::to_string(m_) + "{";
  bool first = true;
  for (int j = 1; j <= m_; ++j) {
    if (column_empty(j)) continue;
    if (!first) s += ", ";
    first = false;
    s += std::to_string(j) + "->(" + std::to_string(row(j)) + "," + G.name_of(label(j));
    if (exponent(j) > 0) s += "," + std::to_string(exponent(j));
    s += ")";
  }
  return s + "}";
}

std::vector<OmegaMatrix> enumerate_omegas(int m, const Group& G, int max_ord, bool total_only) {
  require(m >= 0 && m <= kMaxN && max_ord >= 0, "enumerate_omegas: bad arguments");
  std::vector<OmegaMatrix> out;
  OmegaMatrix o(m);
  std::vector<char> row_used(m + 1, 0);
  std::function<void(int, int)> rec = [&](int j, int budget) {
    if (j > m) {
      out.push_back(o);
      return;
    }
    if (!total_only) rec(j + 1, budget);
    for (int i = 1; i <= m; ++i) {
      if (row_used[i]) continue;
      row_used[i] = 1;
      for (int g = 0; g < G.order(); ++g)
        for (int e = 0; e <= budget; ++e) {
          o.set_entry(j, i, g, e);
          rec(j + 1, budget - e);
        }
      o.clear_column(j);
      row_used[i] = 0;
    }
  };
  rec(1, max_ord);
  std::sort(out.begin(), out.end());
  return out;
}

int count_omegas_exact_ord(int m, const Group& G, int ord, bool total_only) {
  int count = 0;
  for (const OmegaMatrix& o : enumerate_omegas(m, G, ord, total_only))
    if (o.ord() == ord) ++count;
  return count;
}

OrbitInvariant orbit_invariant(const Group& G, const RookMatrix& gamma, int m) {
  require(in_gamma_mn(gamma, m),
          "orbit_invariant: element is not in the corner-complement semigroup");
  int n = gamma.size();
  OrbitInvariant inv;
  inv.omega = OmegaMatrix(m);
  std::vector<char> in_chain(n + 1, 0);
  for (int j = 1; j <= m; ++j) {
    if (gamma.column_empty(j)) continue;
    int cur_row = gamma.row(j);
    int acc = gamma.label(j);
    int hops = 0;
    while (cur_row > m) {
      in_chain[cur_row] = 1;
      inv.chained.push_back(cur_row);
      ++hops;
      // the tail column cur_row is nonzero by the membership requirement
      acc = G.mult(gamma.label(cur_row), acc);
      cur_row = gamma.row(cur_row);
    }
    inv.omega.set_entry(j, cur_row, acc, hops);
  }
  std::sort(inv.chained.begin(), inv.chained.end());
  // residual: the submatrix on the tail indices not absorbed into chains
  std::vector<int> rest;
  for (int k = m + 1; k <= n; ++k)
    if (!in_chain[k]) rest.push_back(k);
  int l = static_cast<int>(rest.size());
  RookMatrix sub = RookMatrix::zero(l);
  for (int t = 1; t <= l; ++t) {
    int col = rest[t - 1];
    int r = gamma.row(col);
    auto it = std::lower_bound(rest.begin(), rest.end(), r);
    require(it != rest.end() && *it == r, "orbit_invariant: residual block is not closed");
    sub.set_entry(t, static_cast<int>(it - rest.begin()) + 1, gamma.label(col));
  }
  inv.residual_type = l == 0 ? TypeFunction::empty(G.class_count()) : type_of(G, sub);
  return inv;
}

std::vector<RookMatrix> gamma_realizations(const Group& G, int n, const OmegaMatrix& omega,
                                           const std::vector<int>& P) {
  int m = omega.size();
  require(m <= n, "gamma_realizations: omega larger than ambient");
  require(omega.ord() == static_cast<int>(P.size()),
          "gamma_realizations: |P| must equal ord(omega)");
  for (int p : P) require(p > m && p <= n, "gamma_realizations: P outside the tail");

  // base: exponent-0 entries of omega, identity off P in the tail
  RookMatrix base = RookMatrix::zero(n);
  std::vector<std::pair<int, int>> chain_cols;  // (column j, exponent)
  for (int j = 1; j <= m; ++j) {
    if (omega.column_empty(j)) continue;
    if (omega.exponent(j) == 0)
      base.set_entry(j, omega.row(j), omega.label(j));
    else
      chain_cols.push_back({j, omega.exponent(j)});
  }
  std::vector<char> in_p(n + 1, 0);
  for (int p : P) in_p[p] = 1;
  for (int k = m + 1; k <= n; ++k)
    if (!in_p[k]) base.set_entry(k, k, 0);

  std::vector<RookMatrix> out;
  std::vector<char> used(n + 1, 0);
  RookMatrix work = base;
  // assign each chained column an ordered tuple from P and edge labels whose
  // product equals the prescribed entry
  std::function<void(size_t)> rec = [&](size_t idx) {
    if (idx == chain_cols.size()) {
      out.push_back(work);
      return;
    }
    auto [j, len] = chain_cols[idx];
    int target_row = omega.row(j);
    int target_label = omega.label(j);
    std::vector<int> tuple(len);
    std::function<void(int, int, int)> build = [&](int depth, int prev_col, int acc) {
      if (depth == len) {
        // closing edge: column tuple[len-1] -> row target_row, forced label
        int closing = G.mult(target_label, G.inverse(acc));
        work.set_entry(prev_col, target_row, closing);
        rec(idx + 1);
        work.clear_column(prev_col);
        return;
      }
      for (int p : P) {
        if (used[p]) continue;
        used[p] = 1;
        tuple[depth] = p;
        for (int g = 0; g < G.order(); ++g) {
          // edge: column prev_col -> row p with label g
          work.set_entry(prev_col, p, g);
          build(depth + 1, p, depth == 0 ? g : G.mult(g, acc));
          work.clear_column(prev_col);
        }
        used[p] = 0;
      }
    };
    build(0, j, 0);
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

OmegaMatrix omega_from_string(const std::string& text, const Group& G) {
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto expect = [&](char c) {
    skip_ws();
    require(pos < text.size() && text[pos] == c,
            "omega parse: expected '" + std::string(1, c) + "' at position " +
                std::to_string(pos));
    ++pos;
  };
  auto read_int = [&]() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    require(pos > start, "omega parse: expected integer at position " + std::to_string(start));
    return std::stoi(text.substr(start, pos - start));
  };
  expect('O');
  int m = read_int();
  OmegaMatrix o(m);
  expect('{');
  skip_ws();
  if (pos < text.size() && text[pos] == '}') {
    ++pos;
    return o;
  }
  while (true) {
    int j = read_int();
    expect('-');
    expect('>');
    expect('(');
    int i = read_int();
    expect(',');
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && text[pos] != ')' && text[pos] != ',' &&
           !std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
    std::string name = text.substr(start, pos - start);
    int g = G.element_by_name(name);
    require(g >= 0, "omega parse: unknown group element '" + name + "'");
    int e = 0;
    skip_ws();
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      e = read_int();
    }
    expect(')');
    o.set_entry(j, i, g, e);
    skip_ws();
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      continue;
    }
    break;
  }
  expect('}');
  return o;
}

}  // namespace wreath
