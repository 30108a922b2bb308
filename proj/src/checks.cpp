#include "wreath/checks.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "wreath/centralizers.hpp"
#include "wreath/gz.hpp"
#include "wreath/hecke.hpp"

namespace wreath {

namespace {

using R = Rational;

Ambient<R> make_ambient(const GroupPtr& g, int n) {
  return Ambient<R>{g, n, BasisKind::semigroup, {}};
}

struct GridEntry {
  std::string spec;
  int max_n;
};

std::vector<GridEntry> size_grid(const CheckScope& s, std::vector<GridEntry> defaults) {
  if (s.group) {
    int cap = s.max_n.value_or(3);
    return {{*s.group, cap}};
  }
  if (s.max_n)
    for (auto& e : defaults) e.max_n = std::min(e.max_n, *s.max_n);
  return defaults;
}

// --- criterion 1: enumerated semigroup sizes match the closed formula ---
std::vector<Report> check_size(const CheckScope& scope) {
  std::vector<Report> out;
  for (const auto& [spec, max_n] :
       size_grid(scope, {{"trivial", 4}, {"c2", 4}, {"c3", 4}, {"s3", 3}})) {
    GroupPtr g = load_group(spec);
    for (int n = 1; n <= max_n; ++n) {
      Report rep;
      rep.claim = "semigroup-size";
      rep.params = {{"group", g->describe()}, {"n", n}};
      BigInt expected = semigroup_size(n, g->order());
      long long counted = 0;
      for_each_rook_matrix(n, *g, [&](const RookMatrix&) { ++counted; });
      rep.dims = {{"enumerated", counted}, {"formula", expected.str()}};
      if (BigInt(counted) != expected)
        rep.fail_with({{"detail", "enumeration and closed formula disagree"}});
      out.push_back(rep);
    }
  }
  return out;
}

// --- criterion 2: the defining relations of the rook algebra ---
std::vector<Report> check_presentation(const CheckScope& scope) {
  std::vector<Report> out;
  for (const auto& [spec, max_n] : size_grid(scope, {{"c2", 4}, {"s3", 4}})) {
    GroupPtr gp = load_group(spec);
    const Group& G = *gp;
    for (int n = 1; n <= max_n; ++n) {
      Report rep;
      rep.claim = "rook-presentation-relations";
      rep.params = {{"group", G.describe()}, {"n", n}};
      Ambient<R> amb = make_ambient(gp, n);
      auto basis = [&](const RookMatrix& r) { return AlgebraElement<R>::basis(amb, r); };
      auto s_of = [&](int i) { return basis(RookMatrix::transposition(i, i + 1, n)); };
      auto eps_of = [&](int i) { return basis(RookMatrix::epsilon(i, n)); };
      AlgebraElement<R> unit = AlgebraElement<R>::unit(amb);
      long long instances = 0;
      auto check = [&](bool ok, const std::string& id) {
        ++instances;
        if (ok) return;
        rep.fail_with({{"relation", id}});
      };

      for (int i = 1; i < n; ++i) {
        check(s_of(i) * s_of(i) == unit, "crossing-involution");
        for (int j = i + 2; j < n; ++j)
          check(s_of(i) * s_of(j) == s_of(j) * s_of(i), "crossing-far-commute");
        if (i + 1 < n)
          check(s_of(i) * s_of(i + 1) * s_of(i) == s_of(i + 1) * s_of(i) * s_of(i + 1),
                "crossing-braid");
      }
      for (int i = 1; i <= n; ++i) {
        check(eps_of(i) * eps_of(i) == eps_of(i), "idempotent");
        for (int j = 1; j <= n; ++j)
          if (j != i) check(eps_of(i) * eps_of(j) == eps_of(j) * eps_of(i), "idempotent-commute");
      }
      for (int i = 1; i < n; ++i) {
        check(s_of(i) * eps_of(i) == eps_of(i + 1) * s_of(i), "crossing-shifts-idempotent");
        for (int j = 1; j <= n; ++j)
          if (j != i && j != i + 1)
            check(s_of(i) * eps_of(j) == eps_of(j) * s_of(i), "crossing-idempotent-commute");
        check(s_of(i) * eps_of(i) * eps_of(i + 1) == eps_of(i) * eps_of(i + 1),
              "crossing-absorbed-by-pair");
      }
      // all diagonal label vectors
      std::vector<int> diag(n, 0);
      std::function<void(int)> each_diag = [&](int slot) {
        if (slot > n) {
          AlgebraElement<R> g = basis(RookMatrix::diagonal(diag));
          for (int i = 1; i < n; ++i) {
            std::vector<int> swapped = diag;
            std::swap(swapped[i - 1], swapped[i]);
            check(s_of(i) * g == basis(RookMatrix::diagonal(swapped)) * s_of(i),
                  "crossing-permutes-labels");
          }
          for (int i = 1; i <= n; ++i)
            check(eps_of(i) * g == g * eps_of(i), "labels-idempotent-commute");
          return;
        }
        for (int h = 0; h < G.order(); ++h) {
          diag[slot - 1] = h;
          each_diag(slot + 1);
        }
        diag[slot - 1] = 0;
      };
      each_diag(1);
      for (int i = 1; i <= n; ++i)
        for (int h = 0; h < G.order(); ++h) {
          std::vector<int> d(n, 0);
          d[i - 1] = h;
          AlgebraElement<R> hi = basis(RookMatrix::diagonal(d));
          check(eps_of(i) * hi == eps_of(i), "idempotent-absorbs-own-label-left");
          check(hi * eps_of(i) == eps_of(i), "idempotent-absorbs-own-label-right");
        }
      rep.dims["instances"] = instances;
      out.push_back(rep);
    }
  }
  return out;
}

// --- criterion 3: the six-term class sum over the order-2 group ---
std::vector<Report> check_golden(const CheckScope&) {
  Report rep;
  rep.claim = "six-term-class-sum";
  GroupPtr c2 = cyclic_group(2);
  rep.params = {{"group", c2->describe()}, {"n", 3}, {"type", "(1);(2)"}};
  Ambient<R> amb = make_ambient(c2, 3);
  AlgebraElement<R> computed = class_sum(amb, type_from_string("(1);(2)", *c2));
  // the six-term literal, coefficient 2 each, written as (labels, images)
  auto w = [&](std::vector<int> labels, std::vector<int> sigma) {
    WreathElement x;
    x.labels = std::move(labels);
    x.sigma = std::move(sigma);
    return from_wreath(x);
  };
  AlgebraElement<R> expected(amb);
  const int neg = 1;  // index of the order-2 label
  expected.add_term(w({0, 0, neg}, {1, 3, 2}), R(2));
  expected.add_term(w({0, neg, 0}, {1, 3, 2}), R(2));
  expected.add_term(w({0, 0, neg}, {3, 2, 1}), R(2));
  expected.add_term(w({neg, 0, 0}, {3, 2, 1}), R(2));
  expected.add_term(w({0, neg, 0}, {2, 1, 3}), R(2));
  expected.add_term(w({neg, 0, 0}, {2, 1, 3}), R(2));
  rep.dims = {{"support", computed.support_size()}};
  if (!(computed == expected))
    rep.fail_with({{"detail", "computed class sum differs from the six-term literal"},
                   {"computed", to_display_string(computed)}});
  return {rep};
}

struct BasisGridEntry {
  std::string spec;
  int max_n;
  int min_m;
};

// --- criterion 4: combinatorial vs nullspace vs closed counts ---
std::vector<Report> check_bases(const CheckScope& scope) {
  std::vector<BasisGridEntry> grid;
  if (scope.group) {
    grid.push_back({*scope.group, scope.max_n.value_or(3), 0});
  } else {
    grid = {{"c2", 4, 0}, {"c3", 3, 0}, {"s3", 3, 1}};
    if (scope.max_n)
      for (auto& e : grid) e.max_n = std::min(e.max_n, *scope.max_n);
  }
  std::vector<Report> out;
  for (const auto& entry : grid) {
    GroupPtr g = load_group(entry.spec);
    for (int n = 1; n <= entry.max_n; ++n)
      for (int m = entry.min_m; m <= n; ++m) {
        if (scope.m && *scope.m != m) continue;
        for (CentralizerKind kind :
             {CentralizerKind::group, CentralizerKind::semigroup, CentralizerKind::star})
          out.push_back(verify_basis_agreement(make_ambient(g, n), m, kind));
      }
  }
  return out;
}

// --- criterion 5: corner-projection chain ---
std::vector<Report> check_theta_chain(const CheckScope& scope) {
  std::vector<Report> out;
  for (const auto& [spec, max_n] : size_grid(scope, {{"c2", 4}})) {
    GroupPtr g = load_group(spec);
    for (int n = 1; n <= max_n; ++n) {
      out.push_back(verify_theta_multiplicative(make_ambient(g, n)));
      for (int m = 0; m < n; ++m) {
        if (scope.m && *scope.m != m) continue;
        out.push_back(verify_theta_descent(make_ambient(g, n), m));
      }
    }
  }
  return out;
}

std::vector<Report> check_injectivity(const CheckScope& scope) {
  std::vector<Report> out;
  for (const auto& [spec, max_n] : size_grid(scope, {{"c2", 4}})) {
    GroupPtr g = load_group(spec);
    for (int n = 1; n <= max_n; ++n)
      for (int m = 0; m <= n; ++m) {
        if (scope.m && *scope.m != m) continue;
        out.push_back(verify_injectivity(make_ambient(g, n), m));
      }
  }
  return out;
}

// --- criterion 6: ideal intersections ---
std::vector<Report> check_ideal(const CheckScope& scope) {
  std::vector<Report> out;
  for (const auto& [spec, max_n] : size_grid(scope, {{"c2", 3}})) {
    GroupPtr g = load_group(spec);
    for (int n = 1; n <= max_n; ++n)
      for (int m = 0; m < n; ++m) {
        if (scope.m && *scope.m != m) continue;
        out.push_back(verify_ideal_intersection(make_ambient(g, n), m));
      }
  }
  return out;
}

// --- criterion 7: leading-term laws ---
std::vector<Report> check_leading_term(const CheckScope& scope) {
  std::vector<Report> out;
  for (const auto& [spec, max_n] : size_grid(scope, {{"c2", 3}})) {
    GroupPtr g = load_group(spec);
    out.push_back(verify_leading_term(make_ambient(g, max_n)));
  }
  return out;
}

// --- criterion 8: lifted relation suite and the evaluation square ---
std::vector<Report> check_hecke(const CheckScope& scope) {
  std::vector<Report> out;
  for (const auto& [spec, max_n] : size_grid(scope, {{"c2", 4}, {"s3", 4}})) {
    GroupPtr g = load_group(spec);
    for (int m = 1; m <= 2; ++m) {
      if (scope.m && *scope.m != m) continue;
      for (int n = m; n <= max_n; ++n)
        out.push_back(verify_hecke_relations(make_ambient(g, n), m));
    }
  }
  return out;
}

std::vector<Report> check_diagram(const CheckScope& scope) {
  std::vector<Report> out;
  for (const auto& [spec, max_n] : size_grid(scope, {{"c2", 4}, {"s3", 4}})) {
    GroupPtr g = load_group(spec);
    for (int m = 1; m <= 2; ++m) {
      if (scope.m && *scope.m != m) continue;
      for (int n = m; n <= max_n; ++n)
        out.push_back(verify_diagram(make_ambient(g, n), m));
    }
  }
  return out;
}

// --- criterion 9: tensor-splitting span ---
std::vector<Report> check_tensor(const CheckScope& scope) {
  std::vector<Report> out;
  if (scope.group) {
    GroupPtr g = load_group(*scope.group);
    int n = scope.max_n.value_or(3);
    int m = scope.m.value_or(1);
    out.push_back(verify_tensor_decomposition(make_ambient(g, n), m));
    return out;
  }
  GroupPtr c2 = cyclic_group(2);
  for (auto [m, n] : {std::pair{1, 2}, {1, 3}, {2, 3}})
    out.push_back(verify_tensor_decomposition(make_ambient(c2, n), m));
  return out;
}

// --- criterion 10: the commutative diagonalizing subalgebra ---
std::vector<Report> check_gz(const CheckScope& scope) {
  std::vector<Report> out;
  std::vector<GridEntry> grid = size_grid(scope, {{"c2", 3}, {"c3", 2}, {"trivial", 4}});
  // involution counts of the symmetric groups: the expected dimensions for
  // the trivial base group
  const std::map<int, long long> involutions = {{1, 1}, {2, 2}, {3, 4}, {4, 10}};
  for (const auto& [spec, max_n] : grid) {
    GroupPtr g = load_group(spec);
    for (int n = 1; n <= max_n; ++n) {
      Ambient<R> amb{g, n, BasisKind::group, {}};
      GZData<R> data = gz_algebra(amb);
      out.push_back(verify_maximal_commutative(data));
      out.push_back(verify_gz_generation_variants(amb));
      if (g->order() == 1 && involutions.count(n)) {
        Report rep;
        rep.claim = "gz-dimension-is-involution-count";
        rep.params = {{"group", g->describe()}, {"n", n}};
        rep.dims = {{"dim", data.dim()}, {"involutions", involutions.at(n)}};
        if (data.dim() != involutions.at(n))
          rep.fail_with({{"detail", "dimension differs from the involution count"}});
        out.push_back(rep);
      }
    }
  }
  return out;
}

std::vector<Report> run_suite_once() {
  std::vector<Report> all;
  auto append = [&](std::vector<Report> part) {
    for (auto& r : part) all.push_back(std::move(r));
  };
  append(check_size({}));
  append(check_presentation({}));
  append(check_golden({}));
  append(check_bases({}));
  append(check_theta_chain({}));
  append(check_injectivity({}));
  append(check_ideal({}));
  append(check_leading_term({}));
  append(check_hecke({}));
  append(check_diagram({}));
  append(check_tensor({}));
  append(check_gz({}));
  return all;
}

// --- criterion 11: byte-identical reruns ---
std::vector<Report> check_determinism(const CheckScope&) {
  Report rep;
  rep.claim = "suite-determinism";
  std::string first = reports_to_json(run_suite_once()).dump();
  std::string second = reports_to_json(run_suite_once()).dump();
  rep.dims = {{"bytes", first.size()}};
  if (first != second) rep.fail_with({{"detail", "two runs produced different reports"}});
  return {rep};
}

using CheckFn = std::vector<Report> (*)(const CheckScope&);

const std::vector<std::pair<std::string, CheckFn>>& registry() {
  static const std::vector<std::pair<std::string, CheckFn>> table = {
      {"size", check_size},
      {"presentation", check_presentation},
      {"golden", check_golden},
      {"example-3.2", check_golden},
      {"bases", check_bases},
      {"theta-chain", check_theta_chain},
      {"injectivity", check_injectivity},
      {"ideal", check_ideal},
      {"leading-term", check_leading_term},
      {"hecke", check_hecke},
      {"diagram", check_diagram},
      {"tensor", check_tensor},
      {"gz", check_gz},
      {"determinism", check_determinism},
  };
  return table;
}

}  // namespace

std::vector<std::string> available_checks() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : registry()) names.push_back(name);
  return names;
}

std::vector<Report> run_check(const std::string& name, const CheckScope& scope) {
  for (const auto& [key, fn] : registry())
    if (key == name) return fn(scope);
  fail("unknown check '" + name + "'");
}

std::vector<Report> run_all_checks() { return run_suite_once(); }

std::vector<Report> run_all_checks_with_determinism() {
  std::vector<Report> first = run_suite_once();
  std::vector<Report> second = run_suite_once();
  Report rep;
  rep.claim = "suite-determinism";
  std::string a = reports_to_json(first).dump();
  std::string b = reports_to_json(second).dump();
  rep.dims = {{"bytes", a.size()}};
  if (a != b) rep.fail_with({{"detail", "two runs produced different reports"}});
  first.push_back(std::move(rep));
  return first;
}

}  // namespace wreath
