#ifndef WREATH_CENTRALIZERS_HPP_
#define WREATH_CENTRALIZERS_HPP_

#include <atomic>
#include <thread>
#include <string>
#include <vector>

#include "wreath/classdata.hpp"
#include "wreath/closure.hpp"
#include "wreath/jm.hpp"
#include "wreath/linalg.hpp"
#include "wreath/report.hpp"

namespace wreath {

// Which invariant space is being computed:
//   group     -- elements of F[G_n] fixed under conjugation by the tail
//                subgroup (slots m+1..n),
//   semigroup -- the centralizer of the tail subsemigroup in the full rook
//                algebra,
//   star      -- tail-conjugation invariants supported on matrices whose
//                tail rows and columns are all nonzero.
enum class CentralizerKind { group, semigroup, star };

inline const char* centralizer_kind_name(CentralizerKind k) {
  switch (k) {
    case CentralizerKind::group: return "group";
    case CentralizerKind::semigroup: return "semigroup";
    default: return "star";
  }
}

inline CentralizerKind centralizer_kind_from_name(const std::string& s) {
  if (s == "group") return CentralizerKind::group;
  if (s == "semigroup") return CentralizerKind::semigroup;
  if (s == "star") return CentralizerKind::star;
  fail("unknown centralizer kind '" + s + "' (expected group|semigroup|star)");
}

template <class F>
struct CentralizerBasis {
  Ambient<F> ambient;
  int m = 0;
  CentralizerKind kind = CentralizerKind::semigroup;
  std::string provenance;  // "combinatorial" or "nullspace"
  std::vector<AlgebraElement<F>> basis;

  int dim() const { return static_cast<int>(basis.size()); }
};

// The ambient basis labels for each kind.
inline std::vector<RookMatrix> centralizer_labels(const Group& G, int n, int m,
                                                  CentralizerKind kind) {
  switch (kind) {
    case CentralizerKind::group: return enumerate_group_elements(n, G);
    case CentralizerKind::semigroup: return enumerate_semigroup(n, G);
    default: return enumerate_corner_complement(n, m, G);
  }
}

// Generators whose commutant cuts out the centralizer: adjacent tail
// transpositions, group generators in the first tail slot, and (semigroup
// kind only) the tail idempotents.  With full_generators every element of
// the tail subgroup is used instead; the reduced set is equivalent because
// commuting with a generating set implies commuting with all products.
inline std::vector<RookMatrix> centralizer_constraints(const Group& G, int n, int m,
                                                       CentralizerKind kind,
                                                       bool full_generators = false) {
  std::vector<RookMatrix> gens;
  if (m >= n) return gens;
  if (full_generators) {
    for (const RookMatrix& x : enumerate_group_elements(n - m, G)) {
      RookMatrix shifted = RookMatrix::zero(n);
      for (int j = 1; j <= m; ++j) shifted.set_entry(j, j, 0);
      for (int j = 1; j <= n - m; ++j)
        if (!x.column_empty(j)) shifted.set_entry(m + j, m + x.row(j), x.label(j));
      gens.push_back(shifted);
    }
  } else {
    for (int i = m + 1; i <= n - 1; ++i) gens.push_back(RookMatrix::transposition(i, i + 1, n));
    for (int h : G.generators()) {
      if (h == 0) continue;
      RookMatrix d = RookMatrix::identity(n);
      d.clear_column(m + 1);
      d.set_entry(m + 1, m + 1, h);
      gens.push_back(d);
    }
  }
  if (kind == CentralizerKind::semigroup)
    for (int i = m + 1; i <= n; ++i) gens.push_back(RookMatrix::epsilon(i, n));
  return gens;
}

inline int worker_count() {
  if (const char* env = std::getenv("WREATHCENT_THREADS")) {
    int t = std::atoi(env);
    if (t >= 1) return t;
  }
  return 1;
}

// Commutant route: exact kernel of x*g - g*x over the label space.
template <class F>
CentralizerBasis<F> centralizer_nullspace(const Ambient<F>& amb0, int m, CentralizerKind kind,
                                          bool full_generators = false, int threads = 0) {
  const Group& G = *amb0.group;
  int n = amb0.n;
  require(m >= 0 && m <= n, "centralizer: need 0 <= m <= n");
  Ambient<F> amb = amb0;
  amb.kind = kind == CentralizerKind::group ? BasisKind::group : BasisKind::semigroup;

  std::vector<RookMatrix> labels = centralizer_labels(G, n, m, kind);
  LabelInterner cols(labels);
  std::vector<RookMatrix> gens = centralizer_constraints(G, n, m, kind, full_generators);

  // one block of constraint rows per generator, assembled independently
  auto assemble = [&](const RookMatrix& g) {
    std::vector<SparseVec<F>> rows(labels.size());
    for (std::int32_t c = 0; c < static_cast<std::int32_t>(labels.size()); ++c) {
      const RookMatrix& lab = labels[c];
      std::int32_t right = cols.lookup(multiply(G, lab, g));
      std::int32_t left = cols.lookup(multiply(G, g, lab));
      require(right >= 0 && left >= 0, "centralizer: label space is not closed");
      if (right == left) continue;
      rows[right].push_back({c, amb.make(1)});
      rows[left].push_back({c, -amb.make(1)});
    }
    return rows;
  };

  if (threads <= 0) threads = worker_count();
  std::vector<std::vector<SparseVec<F>>> blocks(gens.size());
  if (threads > 1 && gens.size() > 1) {
    // blocks land at fixed indices, so the row order stays deterministic
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    int workers = std::min<int>(threads, static_cast<int>(gens.size()));
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (size_t i = next.fetch_add(1); i < gens.size(); i = next.fetch_add(1))
          blocks[i] = assemble(gens[i]);
      });
    for (auto& t : pool) t.join();
  } else {
    for (size_t i = 0; i < gens.size(); ++i) blocks[i] = assemble(gens[i]);
  }
  std::vector<SparseVec<F>> rows;
  for (auto& b : blocks)
    for (auto& r : b)
      if (!r.empty()) rows.push_back(std::move(r));

  std::vector<SparseVec<F>> kernel = nullspace(rows, cols.size(), amb.make);
  CentralizerBasis<F> out{amb, m, kind, "nullspace", {}};
  for (const auto& v : kernel) out.basis.push_back(from_sparse(v, cols, amb));
  return out;
}

// Combinatorial route: the explicit bases indexed by (omega, type) pairs.
template <class F>
CentralizerBasis<F> centralizer_combinatorial(const Ambient<F>& amb0, int m,
                                              CentralizerKind kind) {
  const Group& G = *amb0.group;
  int n = amb0.n;
  require(m >= 0 && m <= n, "centralizer: need 0 <= m <= n");
  Ambient<F> amb = amb0;
  amb.kind = kind == CentralizerKind::group ? BasisKind::group : BasisKind::semigroup;
  Ambient<F> work = amb;
  work.kind = BasisKind::semigroup;

  CentralizerBasis<F> out{amb, m, kind, "combinatorial", {}};
  int budget = n - m;
  bool exact = kind != CentralizerKind::semigroup;
  for (const OmegaMatrix& omega :
       enumerate_omegas(m, G, budget, kind == CentralizerKind::group)) {
    int rest = budget - omega.ord();
    for (const TypeFunction& rho :
         enumerate_types(G, rest, exact ? TypeBound::exact : TypeBound::at_most)) {
      AlgebraElement<F> e = kind == CentralizerKind::semigroup
                                ? stable_orbit_sum(work, omega, rho)
                                : orbit_class_sum(work, omega, rho);
      require(!e.is_zero(), "centralizer: unexpected zero basis element");
      out.basis.push_back(kind == CentralizerKind::group ? e.as_kind(BasisKind::group) : e);
    }
  }
  return out;
}

// Closed dimension counts from the (omega, type) indexing.
inline long long centralizer_expected_dim(const Group& G, int n, int m, CentralizerKind kind) {
  long long total = 0;
  int budget = n - m;
  for (int d = 0; d <= budget; ++d) {
    long long omegas = count_omegas_exact_ord(m, G, d, kind == CentralizerKind::group);
    long long types =
        count_types(G, budget - d,
                    kind == CentralizerKind::semigroup ? TypeBound::at_most : TypeBound::exact);
    total += omegas * types;
  }
  return total;
}

template <class F>
std::vector<SparseVec<F>> to_rows(const std::vector<AlgebraElement<F>>& elems,
                                  LabelInterner& interner) {
  std::vector<SparseVec<F>> rows;
  rows.reserve(elems.size());
  for (const auto& e : elems) rows.push_back(to_sparse(e, interner));
  return rows;
}

// Both routes, dimension agreement, closed count, and mutual span
// containment.
template <class F>
Report verify_basis_agreement(const Ambient<F>& amb, int m, CentralizerKind kind,
                              bool check_containment = true) {
  Report rep;
  rep.claim = "centralizer-basis-agreement";
  rep.params = {{"group", amb.group->describe()},
                {"n", amb.n},
                {"m", m},
                {"kind", centralizer_kind_name(kind)}};
  CentralizerBasis<F> comb = centralizer_combinatorial(amb, m, kind);
  CentralizerBasis<F> null = centralizer_nullspace(amb, m, kind);
  long long expected = centralizer_expected_dim(*amb.group, amb.n, m, kind);
  rep.dims = {{"combinatorial", comb.dim()}, {"nullspace", null.dim()}, {"closed_count", expected}};
  if (comb.dim() != null.dim() || comb.dim() != expected) {
    rep.fail_with({{"detail", "dimension mismatch"}});
    return rep;
  }
  if (check_containment) {
    LabelInterner interner;
    auto rows_a = to_rows(comb.basis, interner);
    auto rows_b = to_rows(null.basis, interner);
    int ra = rank_of(rows_a);
    int rb = rank_of(rows_b);
    std::vector<SparseVec<F>> all = rows_a;
    all.insert(all.end(), rows_b.begin(), rows_b.end());
    int runion = rank_of(all);
    rep.dims["rank_combinatorial"] = ra;
    rep.dims["rank_union"] = runion;
    if (ra != comb.dim() || rb != comb.dim() || runion != comb.dim())
      rep.fail_with({{"detail", "bases are not mutually spanning"},
                     {"rank_a", ra},
                     {"rank_b", rb},
                     {"rank_union", runion}});
  }
  return rep;
}

// The subspace of centralizer elements supported on labels of bounded
// (tail-)degree: a restricted commutant kernel.
template <class F>
CentralizerBasis<F> filtration_term(const Ambient<F>& amb0, int m, CentralizerKind kind, int k,
                                    int degree_tail_from) {
  const Group& G = *amb0.group;
  int n = amb0.n;
  Ambient<F> amb = amb0;
  amb.kind = kind == CentralizerKind::group ? BasisKind::group : BasisKind::semigroup;

  std::vector<RookMatrix> all_labels = centralizer_labels(G, n, m, kind);
  LabelInterner out_cols(all_labels);
  // variables: labels inside the filtration piece
  std::vector<RookMatrix> small;
  for (const RookMatrix& lab : all_labels)
    if (degree_tail_of(lab, degree_tail_from) <= k) small.push_back(lab);
  LabelInterner var_cols(small);

  std::vector<RookMatrix> gens = centralizer_constraints(G, n, m, kind);
  std::vector<SparseVec<F>> rows(all_labels.size() * gens.size());
  for (size_t gi = 0; gi < gens.size(); ++gi) {
    for (std::int32_t c = 0; c < static_cast<std::int32_t>(small.size()); ++c) {
      const RookMatrix& lab = small[c];
      std::int32_t right = out_cols.lookup(multiply(G, lab, gens[gi]));
      std::int32_t left = out_cols.lookup(multiply(G, gens[gi], lab));
      if (right == left) continue;
      rows[gi * all_labels.size() + right].push_back({c, amb.make(1)});
      rows[gi * all_labels.size() + left].push_back({c, -amb.make(1)});
    }
  }
  std::vector<SparseVec<F>> kernel = nullspace(rows, var_cols.size(), amb.make);
  CentralizerBasis<F> out{amb, m, kind, "nullspace", {}};
  for (const auto& v : kernel) out.basis.push_back(from_sparse(v, var_cols, amb));
  return out;
}

// The corner projection is an algebra map on the top centralizer of the
// chain: theta(xy) = theta(x)theta(y) for all basis pairs.
template <class F>
Report verify_theta_multiplicative(const Ambient<F>& amb) {
  int n = amb.n;
  Report rep;
  rep.claim = "theta-multiplicative-on-top-centralizer";
  rep.params = {{"group", amb.group->describe()}, {"n", n}};
  require(n >= 1, "verify_theta_multiplicative: n must be positive");
  Ambient<F> amb_sg = amb;
  amb_sg.kind = BasisKind::semigroup;
  CentralizerBasis<F> top = centralizer_combinatorial(amb_sg, n - 1, CentralizerKind::semigroup);
  std::vector<AlgebraElement<F>> projected;
  projected.reserve(top.basis.size());
  for (const auto& x : top.basis) projected.push_back(theta_element(x, n - 1));
  for (size_t i = 0; i < top.basis.size() && rep.passed(); ++i)
    for (size_t j = 0; j < top.basis.size(); ++j)
      if (!(theta_element(top.basis[i] * top.basis[j], n - 1) == projected[i] * projected[j])) {
        rep.fail_with({{"detail", "theta(xy) != theta(x)theta(y)"}, {"i", i}, {"j", j}});
        break;
      }
  rep.dims["top_basis"] = top.dim();
  return rep;
}

// The corner projection carries the level-n centralizer into the level-(n-1)
// one and sends each stable basis element to its lower counterpart; the
// corner copy of the small semigroup is fixed pointwise.
template <class F>
Report verify_theta_descent(const Ambient<F>& amb, int m) {
  const Group& G = *amb.group;
  int n = amb.n;
  Report rep;
  rep.claim = "theta-descent";
  rep.params = {{"group", G.describe()}, {"n", n}, {"m", m}};
  require(n > m, "verify_theta_descent: need n > m");
  Ambient<F> amb_sg = amb;
  amb_sg.kind = BasisKind::semigroup;
  Ambient<F> down = amb_sg;
  down.n = n - 1;

  CentralizerBasis<F> mid = centralizer_combinatorial(amb_sg, m, CentralizerKind::semigroup);
  CentralizerBasis<F> low = centralizer_combinatorial(down, m, CentralizerKind::semigroup);
  LabelInterner interner;
  SpanBasis<F> low_span;
  for (const auto& e : low.basis) low_span.insert(to_sparse(e, interner));
  for (const auto& x : mid.basis) {
    AlgebraElement<F> tx = theta_element(x, n - 1);
    if (tx.is_zero()) continue;
    if (!low_span.contains(to_sparse(tx, interner))) {
      rep.fail_with({{"detail", "theta image leaves the lower centralizer"}});
      break;
    }
  }
  rep.dims["upper_basis"] = mid.dim();
  rep.dims["lower_basis"] = low.dim();

  for (const OmegaMatrix& omega : enumerate_omegas(m, G, n - m)) {
    int rest = n - m - omega.ord();
    for (const TypeFunction& rho : enumerate_types(G, rest, TypeBound::at_most)) {
      AlgebraElement<F> hi = stable_orbit_sum(amb_sg, omega, rho);
      AlgebraElement<F> lo = stable_orbit_sum(down, omega, rho);
      if (!(theta_element(hi, n - 1) == lo)) {
        rep.fail_with({{"detail", "theta does not map the stable element down"},
                       {"omega", omega.str(G)},
                       {"rho", rho.str()}});
      }
    }
  }

  for (const RookMatrix& g : enumerate_semigroup(m, G)) {
    if (!(theta(embed(g, n), n - 1) == embed(g, n - 1))) {
      rep.fail_with({{"detail", "constant sequence moved by theta"}});
      break;
    }
  }
  return rep;
}

// Injectivity of the corner projection on the filtration piece of degree
// n-m-1 (plain degree at m = 0, tail degree for m > 0).
template <class F>
Report verify_injectivity(const Ambient<F>& amb, int m) {
  int n = amb.n;
  Report rep;
  rep.claim = "theta-injective-on-filtration";
  rep.params = {{"group", amb.group->describe()}, {"n", n}, {"m", m}};
  if (n <= m) {
    rep.status = "skipped";
    rep.params["reason"] = "no constraint when n = m";
    return rep;
  }
  int k = n - m - 1;
  int tail_from = m == 0 ? 0 : m;
  CentralizerBasis<F> piece =
      filtration_term(amb, m, CentralizerKind::semigroup, k, tail_from);
  rep.dims["filtration_dim"] = piece.dim();
  // kernel of theta restricted to the piece
  LabelInterner out_cols;
  std::vector<SparseVec<F>> rows;
  for (std::int32_t c = 0; c < static_cast<std::int32_t>(piece.basis.size()); ++c) {
    AlgebraElement<F> img = theta_element(piece.basis[c], n - 1);
    for (const auto& [label, coeff] : img.terms()) {
      std::int32_t r = out_cols.intern(label);
      if (static_cast<size_t>(r) >= rows.size()) rows.resize(r + 1);
      rows[r].push_back({c, coeff});
    }
  }
  auto kernel = nullspace(rows, static_cast<int>(piece.basis.size()), amb.make);
  rep.dims["kernel_dim"] = kernel.size();
  if (!kernel.empty())
    rep.fail_with({{"detail", "corner projection has a kernel on the filtration piece"}});
  return rep;
}

// Left-ideal intersection: the centralizer elements killed by the last slot
// idempotent are exactly the fully cut orbit sums.
template <class F>
Report verify_ideal_intersection(const Ambient<F>& amb0, int m) {
  const Group& G = *amb0.group;
  int n = amb0.n;
  Report rep;
  rep.claim = "ideal-intersection";
  rep.params = {{"group", G.describe()}, {"n", n}, {"m", m}};
  require(m >= 0 && m < n, "verify_ideal_intersection: need 0 <= m < n");
  Ambient<F> amb = amb0;
  amb.kind = BasisKind::semigroup;

  // left side: span{gamma (1 - eps_n)} intersected with the centralizer
  AlgebraElement<F> cut = AlgebraElement<F>::unit(amb) -
                          AlgebraElement<F>::basis(amb, RookMatrix::epsilon(n, amb.n));
  LabelInterner interner;
  std::vector<SparseVec<F>> ideal_rows;
  for (const RookMatrix& g : enumerate_semigroup(n, G)) {
    AlgebraElement<F> e = AlgebraElement<F>::basis(amb, g) * cut;
    if (!e.is_zero()) ideal_rows.push_back(to_sparse(e, interner));
  }
  CentralizerBasis<F> cent = centralizer_combinatorial(amb, m, CentralizerKind::semigroup);
  std::vector<SparseVec<F>> cent_rows = to_rows(cent.basis, interner);
  std::vector<SparseVec<F>> lhs =
      span_intersection(ideal_rows, cent_rows, interner.size(), amb.make);

  // right side
  std::vector<int> tail;
  for (int i = m + 1; i <= n; ++i) tail.push_back(i);
  AlgebraElement<F> bar = eps_bar(amb, tail);
  std::vector<SparseVec<F>> rhs;
  SpanBasis<F> rhs_span;
  if (m == 0) {
    // center of the group algebra times the full cut
    for (const TypeFunction& rho : enumerate_types(G, n, TypeBound::exact)) {
      AlgebraElement<F> e = class_sum(amb, rho) * bar;
      if (rhs_span.insert(to_sparse(e, interner))) rhs.push_back(to_sparse(e, interner));
    }
  } else {
    for (const OmegaMatrix& omega : enumerate_omegas(m, G, n - m)) {
      for (const TypeFunction& rho :
           enumerate_types(G, n - m - omega.ord(), TypeBound::exact)) {
        AlgebraElement<F> e = bar * orbit_class_sum(amb, omega, rho) * bar;
        if (e.is_zero()) continue;
        if (rhs_span.insert(to_sparse(e, interner))) rhs.push_back(to_sparse(e, interner));
      }
    }
  }

  int dim_lhs = rank_of(lhs);
  int dim_rhs = rank_of(rhs);
  std::vector<SparseVec<F>> all = lhs;
  all.insert(all.end(), rhs.begin(), rhs.end());
  int dim_union = rank_of(all);
  rep.dims = {{"lhs", dim_lhs}, {"rhs", dim_rhs}, {"union", dim_union}};
  if (dim_lhs != dim_rhs || dim_union != dim_lhs)
    rep.fail_with({{"detail", "ideal intersection spans differ"}});
  return rep;
}

// Products of class sums (or their stable versions) reproduce the union
// type up to lower-norm corrections.
template <class F>
Report verify_leading_term(const Ambient<F>& amb0) {
  const Group& G = *amb0.group;
  int n = amb0.n;
  Report rep;
  rep.claim = "leading-term-law";
  rep.params = {{"group", G.describe()}, {"n", n}};
  Ambient<F> amb = amb0;
  amb.kind = BasisKind::semigroup;

  std::vector<TypeFunction> all = enumerate_types(G, n, TypeBound::at_most);
  LabelInterner interner;
  long long checked_c = 0, checked_d = 0;

  // spans of lower-norm class sums, by norm bound
  std::vector<SpanBasis<F>> low_c(n + 1), low_d(n + 1);
  for (const TypeFunction& rho : all) {
    AlgebraElement<F> c = class_sum(amb, rho);
    AlgebraElement<F> d = stable_class_sum(amb, rho);
    for (int bound = rho.norm() + 1; bound <= n; ++bound) {
      low_c[bound].insert(to_sparse(c, interner));
      low_d[bound].insert(to_sparse(d, interner));
    }
  }
  for (const TypeFunction& rho : all) {
    for (const TypeFunction& pi : all) {
      int s = rho.norm() + pi.norm();
      if (s > n || s == 0) continue;
      TypeFunction uni = rho.union_with(pi);
      // plain class sums need no 1-parts in the identity class
      if (!rho.class0_has_part_one() && !pi.class0_has_part_one()) {
        AlgebraElement<F> diff =
            class_sum(amb, rho) * class_sum(amb, pi) - class_sum(amb, uni);
        ++checked_c;
        if (!diff.is_zero() && !low_c[s].contains(to_sparse(diff, interner))) {
          rep.fail_with({{"detail", "class-sum product leaves the lower span"},
                         {"rho", rho.str()},
                         {"pi", pi.str()}});
        }
      }
      AlgebraElement<F> diff = stable_class_sum(amb, rho) * stable_class_sum(amb, pi) -
                               stable_class_sum(amb, uni);
      ++checked_d;
      if (!diff.is_zero() && !low_d[s].contains(to_sparse(diff, interner))) {
        rep.fail_with({{"detail", "stable product leaves the lower span"},
                       {"rho", rho.str()},
                       {"pi", pi.str()}});
      }
    }
  }
  rep.dims = {{"plain_pairs", checked_c}, {"stable_pairs", checked_d}};
  return rep;
}

// The monomial spanning set gamma * u^k * Delta<identity, rho> reaches the
// full centralizer dimension (the finite shadow of the tensor splitting).
template <class F>
Report verify_tensor_decomposition(const Ambient<F>& amb0, int m) {
  const Group& G = *amb0.group;
  int n = amb0.n;
  Report rep;
  rep.claim = "tensor-decomposition-span";
  rep.params = {{"group", G.describe()}, {"n", n}, {"m", m}};
  require(m >= 0 && m <= n, "verify_tensor_decomposition: bad m");
  Ambient<F> amb = amb0;
  amb.kind = BasisKind::semigroup;

  std::vector<AlgebraElement<F>> lifts;
  for (int k = 1; k <= m; ++k) lifts.push_back(jm_lift(amb, k));

  long long expected = centralizer_expected_dim(G, n, m, CentralizerKind::semigroup);
  std::vector<RookMatrix> gens = centralizer_constraints(G, n, m, CentralizerKind::semigroup);

  std::vector<AlgebraElement<F>> family;
  OmegaMatrix id = OmegaMatrix::identity(m);
  std::vector<int> exps(std::max(m, 1), 0);
  std::function<void(int, int)> rec = [&](int slot, int budget) {
    if (slot == m) {
      for (const TypeFunction& rho : enumerate_types(G, budget, TypeBound::at_most)) {
        AlgebraElement<F> mono = stable_orbit_sum(amb, id, rho);
        for (int k = m; k >= 1; --k)
          for (int e = 0; e < exps[k - 1]; ++e) mono = lifts[k - 1] * mono;
        for (const RookMatrix& g : enumerate_semigroup(m, G))
          family.push_back(AlgebraElement<F>::basis(amb, embed(g, n)) * mono);
      }
      return;
    }
    for (int e = 0; e <= budget; ++e) {
      exps[slot] = e;
      rec(slot + 1, budget - e);
    }
    exps[slot] = 0;
  };
  rec(0, n - m);

  // containment in the centralizer
  for (const auto& e : family) {
    for (const RookMatrix& g : gens) {
      AlgebraElement<F> gg = AlgebraElement<F>::basis(amb, g);
      if (!(e * gg == gg * e)) {
        rep.fail_with({{"detail", "monomial leaves the centralizer"}});
        break;
      }
    }
    if (!rep.passed()) break;
  }
  int r = elements_rank(family);
  rep.dims = {{"family", family.size()}, {"rank", r}, {"centralizer_dim", expected}};
  if (r != expected) rep.fail_with({{"detail", "monomials do not span the centralizer"}});
  return rep;
}

}  // namespace wreath

#endif  // WREATH_CENTRALIZERS_HPP_
