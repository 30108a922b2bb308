#include "wreath/hecke.hpp"

#include <cctype>

#include "wreath/error.hpp"

namespace wreath {

std::vector<HeckeToken> rook_factorization(const Group& G, const RookMatrix& gamma) {
  (void)G;
  int m = gamma.size();
  std::vector<HeckeToken> out;
  // complete the partial injection to a permutation, smallest targets first
  std::vector<int> sigma(m, 0);
  std::vector<char> row_used(m + 1, 0);
  std::vector<int> empty_cols;
  std::vector<int> labels(m, 0);
  for (int j = 1; j <= m; ++j)
    if (!gamma.column_empty(j)) {
      sigma[j - 1] = gamma.row(j);
      row_used[gamma.row(j)] = 1;
      labels[gamma.row(j) - 1] = gamma.label(j);
    } else {
      empty_cols.push_back(j);
    }
  for (int j : empty_cols)
    for (int i = 1; i <= m; ++i)
      if (!row_used[i]) {
        sigma[j - 1] = i;
        row_used[i] = 1;
        break;
      }
  // diagonal part
  bool nontrivial = false;
  for (int v : labels) nontrivial = nontrivial || v != 0;
  if (nontrivial) out.push_back(HeckeToken{HeckeToken::Type::diag, 0, 1, labels});
  // sigma as adjacent crossings: bubble-sort the one-line form; right
  // multiplication by s_i swaps positions i, i+1
  std::vector<int> line = sigma;
  std::vector<int> swaps;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i + 1 < m; ++i)
      if (line[i] > line[i + 1]) {
        std::swap(line[i], line[i + 1]);
        swaps.push_back(i + 1);
        moved = true;
      }
  }
  for (auto it = swaps.rbegin(); it != swaps.rend(); ++it)
    out.push_back(HeckeToken{HeckeToken::Type::s, *it, 1, {}});
  for (int j : empty_cols) out.push_back(HeckeToken{HeckeToken::Type::eps, j, 1, {}});
  return out;
}

std::vector<HeckeToken> parse_hecke_word(const std::string& text, const Group& G, int m,
                                         HeckeKind* inferred_kind) {
  std::vector<HeckeToken> out;
  bool saw_x = false, saw_rook = false;
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_int = [&]() {
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    require(pos > start, "word parse: expected integer at position " + std::to_string(start));
    return std::stoi(text.substr(start, pos - start));
  };
  while (true) {
    skip_ws();
    if (pos >= text.size()) break;
    char c = text[pos];
    if (c == 's' || c == 'e' || c == 'x' || c == 'u') {
      ++pos;
      int idx = read_int();
      int power = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        power = read_int();
      }
      if (c == 's') {
        require(power == 1, "word parse: powers are only for polynomial generators");
        out.push_back(HeckeToken{HeckeToken::Type::s, idx, 1, {}});
      } else if (c == 'e') {
        require(power == 1, "word parse: powers are only for polynomial generators");
        saw_rook = true;
        out.push_back(HeckeToken{HeckeToken::Type::eps, idx, 1, {}});
      } else {
        (c == 'x' ? saw_x : saw_rook) = true;
        out.push_back(HeckeToken{HeckeToken::Type::poly, idx, power, {}});
      }
      continue;
    }
    if (c == 'g') {
      ++pos;
      require(pos < text.size() && text[pos] == '[', "word parse: expected '[' after g");
      ++pos;
      std::vector<int> labels;
      while (true) {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && text[pos] != ',' && text[pos] != ']' &&
               !std::isspace(static_cast<unsigned char>(text[pos])))
          ++pos;
        std::string name = text.substr(start, pos - start);
        int g = G.element_by_name(name);
        require(g >= 0, "word parse: unknown group element '" + name + "'");
        labels.push_back(g);
        skip_ws();
        if (pos < text.size() && text[pos] == ',') {
          ++pos;
          continue;
        }
        break;
      }
      require(pos < text.size() && text[pos] == ']', "word parse: expected ']'");
      ++pos;
      require(static_cast<int>(labels.size()) == m,
              "word parse: diagonal needs exactly " + std::to_string(m) + " labels");
      out.push_back(HeckeToken{HeckeToken::Type::diag, 0, 1, labels});
      continue;
    }
    fail("word parse: unexpected character '" + std::string(1, c) + "' at position " +
         std::to_string(pos));
  }
  require(!(saw_x && saw_rook), "word parse: cannot mix x with u or e tokens");
  if (inferred_kind) *inferred_kind = saw_x ? HeckeKind::group : HeckeKind::semigroup;
  return out;
}

}  // namespace wreath
