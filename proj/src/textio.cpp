#include "wreath/textio.hpp"

#include <cctype>

#include "wreath/classdata.hpp"
#include "wreath/error.hpp"
#include "wreath/jm.hpp"

namespace wreath {

namespace {

using R = Rational;
using Elem = AlgebraElement<R>;

class ExprParser {
 public:
  ExprParser(const std::string& text, const Ambient<R>& amb)
      : text_(text), amb_(amb), G_(*amb.group) {}

  Elem parse() {
    Elem e = expr();
    skip_ws();
    require(pos_ >= text_.size(), err("trailing input"));
    return e;
  }

 private:
  std::string err(const std::string& what) const {
    return "expression parse at position " + std::to_string(pos_) + ": " + what;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  long long read_uint() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    require(pos_ > start, err("expected integer"));
    return std::stoll(text_.substr(start, pos_ - start));
  }

  // text of a balanced [...] group, brackets stripped
  std::string bracket_group() {
    require(eat('['), err("expected '['"));
    size_t start = pos_;
    int depth = 1;
    while (pos_ < text_.size() && depth > 0) {
      if (text_[pos_] == '[') ++depth;
      if (text_[pos_] == ']') --depth;
      ++pos_;
    }
    require(depth == 0, err("unbalanced '['"));
    return text_.substr(start, pos_ - 1 - start);
  }

  Elem expr() {
    Elem e = term();
    while (true) {
      if (eat('+')) {
        e = e + term();
      } else if (eat('-')) {
        e = e - term();
      } else {
        return e;
      }
    }
  }

  Elem term() {
    Elem e = factor();
    while (eat('*')) e = e * factor();
    return e;
  }

  Elem factor() {
    Elem e = atom();
    if (eat('^')) {
      long long p = read_uint();
      Elem out = Elem::unit(amb_);
      for (long long i = 0; i < p; ++i) out = out * e;
      return out;
    }
    return e;
  }

  Elem atom() {
    skip_ws();
    require(pos_ < text_.size(), err("unexpected end of input"));
    char c = text_[pos_];
    if (c == '-') {
      ++pos_;
      return atom().negated();
    }
    if (c == '(') {
      ++pos_;
      Elem e = expr();
      require(eat(')'), err("expected ')'"));
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)))
      return Elem::unit(amb_).scaled(R(read_uint()));
    if (c == '{') {
      size_t start = pos_;
      int depth = 0;
      while (pos_ < text_.size()) {
        if (text_[pos_] == '{') ++depth;
        if (text_[pos_] == '}') {
          --depth;
          ++pos_;
          if (depth == 0) break;
          continue;
        }
        ++pos_;
      }
      require(depth == 0, err("unbalanced '{'"));
      return Elem::basis(amb_,
                         rook_from_string(text_.substr(start, pos_ - start), G_, amb_.n));
    }
    if (c == 's' || c == 'e') {
      ++pos_;
      long long i = read_uint();
      require(i >= 1 && i <= amb_.n, err("slot index out of range"));
      if (c == 's') {
        require(i < amb_.n, err("crossing index out of range"));
        return Elem::basis(amb_, RookMatrix::transposition(static_cast<int>(i),
                                                           static_cast<int>(i) + 1, amb_.n));
      }
      return Elem::basis(amb_, RookMatrix::epsilon(static_cast<int>(i), amb_.n));
    }
    if (text_.compare(pos_, 3, "xi[") == 0) {
      pos_ += 2;
      std::string body = bracket_group();
      int k = std::stoi(body);
      return as_semigroup(jm_element(group_ambient(), k));
    }
    if (c == 'u' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '[') {
      ++pos_;
      std::string body = bracket_group();
      return jm_lift(amb_, std::stoi(body));
    }
    if (c == 't' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '[') {
      ++pos_;
      std::string body = bracket_group();
      size_t comma = body.find(',');
      require(comma != std::string::npos, err("t needs two slots"));
      return pair_sum(amb_, std::stoi(body.substr(0, comma)),
                      std::stoi(body.substr(comma + 1)));
    }
    if (c == 'g' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '[') {
      ++pos_;
      std::string body = bracket_group();
      std::vector<int> labels;
      size_t p = 0;
      while (p < body.size()) {
        size_t q = body.find(',', p);
        std::string name = body.substr(p, q == std::string::npos ? std::string::npos : q - p);
        // trim
        while (!name.empty() && std::isspace(static_cast<unsigned char>(name.front())))
          name.erase(name.begin());
        while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back())))
          name.pop_back();
        int h = G_.element_by_name(name);
        require(h >= 0, err("unknown group element '" + name + "'"));
        labels.push_back(h);
        if (q == std::string::npos) break;
        p = q + 1;
      }
      require(static_cast<int>(labels.size()) == amb_.n,
              err("diagonal needs " + std::to_string(amb_.n) + " labels"));
      return Elem::basis(amb_, RookMatrix::diagonal(labels));
    }
    if (c == 'C' || c == 'D') {
      ++pos_;
      std::string body = bracket_group();
      return class_like(c == 'D', body);
    }
    fail(err(std::string("unexpected character '") + c + "'"));
  }

  Elem class_like(bool stable, const std::string& body) {
    // optional omega part before the first ';' when it starts with 'O'
    size_t p = 0;
    while (p < body.size() && std::isspace(static_cast<unsigned char>(body[p]))) ++p;
    if (p < body.size() && body[p] == 'O') {
      size_t close = body.find('}', p);
      require(close != std::string::npos, "expression parse: omega part missing '}'");
      OmegaMatrix omega = omega_from_string(body.substr(p, close + 1 - p), G_);
      size_t semi = body.find(';', close);
      TypeFunction rho = semi == std::string::npos
                             ? TypeFunction::empty(G_.class_count())
                             : type_from_string(body.substr(semi + 1), G_);
      return stable ? stable_orbit_sum(amb_, omega, rho) : orbit_class_sum(amb_, omega, rho);
    }
    TypeFunction rho = type_from_string(body, G_);
    return stable ? stable_class_sum(amb_, rho) : class_sum(amb_, rho);
  }

  Ambient<R> group_ambient() const {
    Ambient<R> g = amb_;
    g.kind = BasisKind::group;
    return g;
  }

  const std::string& text_;
  const Ambient<R>& amb_;
  const Group& G_;
  size_t pos_ = 0;
};

}  // namespace

AlgebraElement<Rational> evaluate_element_expression(const std::string& text,
                                                     const Ambient<Rational>& amb) {
  require(amb.kind == BasisKind::semigroup, "expressions evaluate in the rook algebra");
  return ExprParser(text, amb).parse();
}

Json element_to_json(const AlgebraElement<Rational>& e) {
  Json arr = Json::array();
  const Group& G = *e.ambient().group;
  for (const auto& [label, coeff] : e.terms())
    arr.push_back({rook_to_string(label, G), numerator(coeff).str(),
                   denominator(coeff).str()});
  return arr;
}

Json type_to_json(const TypeFunction& t) {
  Json arr = Json::array();
  for (const Partition& p : t.parts) arr.push_back(p);
  return arr;
}

Json omega_to_json(const OmegaMatrix& o, const Group& G) {
  Json arr = Json::array();
  for (int j = 1; j <= o.size(); ++j)
    if (!o.column_empty(j))
      arr.push_back({{"col", j},
                     {"row", o.row(j)},
                     {"label", G.name_of(o.label(j))},
                     {"exp", o.exponent(j)}});
  return arr;
}

}  // namespace wreath
