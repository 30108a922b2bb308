// Command-line front end: exact computations in wreath-product rook
// algebras and batch verification of their centralizer structure.

#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "wreath/centralizers.hpp"
#include "wreath/checks.hpp"
#include "wreath/gz.hpp"
#include "wreath/textio.hpp"

namespace {

using wreath::Json;
using R = wreath::Rational;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct CommonOpts {
  std::string group = "c2";
  int n = 2;
  int m = 0;
  std::string field = "rational";
  std::uint32_t prime = 101;
};

wreath::Ambient<R> make_ambient(const CommonOpts& c) {
  return {wreath::load_group(c.group), c.n, wreath::BasisKind::semigroup, {}};
}

void emit(const Json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream f(out_path);
    wreath::require(f.good(), "cannot open output file " + out_path);
    f << j.dump(2) << "\n";
  }
}

std::string reports_to_tsv(const std::vector<wreath::Report>& reports) {
  std::string tsv = "claim\tparams\tstatus\tdims\n";
  for (const auto& r : reports)
    tsv += r.claim + "\t" + r.params.dump() + "\t" + r.status + "\t" + r.dims.dump() + "\n";
  return tsv;
}

template <class F>
int dims_agree(const wreath::Ambient<F>& amb, int m, wreath::CentralizerKind kind) {
  auto comb = wreath::centralizer_combinatorial(amb, m, kind);
  auto null = wreath::centralizer_nullspace(amb, m, kind);
  long long closed = wreath::centralizer_expected_dim(*amb.group, amb.n, m, kind);
  std::cout << wreath::centralizer_kind_name(kind) << ": combinatorial=" << comb.dim()
            << " nullspace=" << null.dim() << " closed=" << closed << "\n";
  return comb.dim() == null.dim() && comb.dim() == closed ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wreathcent: exact wreath-product rook-algebra computations"};
  app.require_subcommand(1);
  CommonOpts common;
  int threads = 0;
  std::string cap;
  app.add_option("--threads", threads,
                 "worker threads for constraint assembly (WREATHCENT_THREADS)");
  app.add_option("--cap", cap, "enumeration size cap (WREATHCENT_CAP)");

  // dim: both centralizer computation routes plus the closed count
  auto* dim = app.add_subcommand("dim", "centralizer dimensions by both routes");
  std::string dim_kind = "all";
  dim->add_option("--group", common.group, "group spec (trivial|cN|sN|dN|file)");
  dim->add_option("--n", common.n, "ambient size")->required();
  dim->add_option("--m", common.m, "corner size");
  dim->add_option("--kind", dim_kind, "group|semigroup|star|all");
  dim->add_option("--field", common.field, "rational|prime");
  dim->add_option("--prime", common.prime, "modulus when --field prime");

  // verify: named checks with JSON/TSV reports
  auto* verify = app.add_subcommand("verify", "run verification checks");
  std::vector<std::string> check_names;
  bool verify_all = false;
  std::string out_path, tsv_path;
  bool have_group = false, have_max_n = false, have_m = false;
  std::string v_group;
  int v_max_n = 0, v_m = 0;
  std::string config_path;
  verify->add_flag("--all", verify_all, "run the full suite plus the determinism check");
  verify->add_option("--check", check_names, "named check (repeatable); see --list");
  bool list_checks = false;
  verify->add_flag("--list", list_checks, "list available checks");
  verify->add_option("--group", v_group, "restrict to one group")->each([&](const std::string&) {
    have_group = true;
  });
  verify->add_option("--max-n,--n", v_max_n, "cap the size range")->each([&](const std::string&) {
    have_max_n = true;
  });
  verify->add_option("--m", v_m, "restrict to one corner size")->each([&](const std::string&) {
    have_m = true;
  });
  bool timings = false;
  verify->add_flag("--timings", timings,
                   "attach per-check wall-clock times (off by default so reports "
                   "stay byte-identical across runs)");
  verify->add_option("--out", out_path, "write the JSON report here (default stdout)");
  verify->add_option("--tsv", tsv_path, "also write a TSV summary");
  verify->add_option("--config", config_path, "JSON config file with the options above");

  // elem: evaluate an element expression
  auto* elem = app.add_subcommand("elem", "evaluate an element expression");
  std::string expr;
  bool elem_json = false;
  elem->add_option("expr", expr, "expression, e.g. \"e1*e1 - e1\"")->required();
  elem->add_option("--group", common.group, "group spec");
  elem->add_option("--n", common.n, "ambient size");
  elem->add_flag("--json", elem_json, "JSON output");

  // gz: the commutative diagonalizing subalgebra
  auto* gz = app.add_subcommand("gz", "Gelfand-Zetlin subalgebra summary");
  gz->add_option("--group", common.group, "abelian group spec");
  gz->add_option("--n", common.n, "ambient size");

  // enumerate: list the rook semigroup
  auto* enumerate = app.add_subcommand("enumerate", "list the rook matrices");
  bool count_only = false;
  enumerate->add_option("--group", common.group, "group spec");
  enumerate->add_option("--n", common.n, "matrix size");
  enumerate->add_flag("--count", count_only, "print the count only");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }
  if (threads > 0) setenv("WREATHCENT_THREADS", std::to_string(threads).c_str(), 1);
  if (!cap.empty()) setenv("WREATHCENT_CAP", cap.c_str(), 1);

  try {
    if (dim->parsed()) {
      int rc = 0;
      auto run_kind = [&](wreath::CentralizerKind kind) {
        if (common.field == "prime") {
          wreath::Ambient<wreath::Fp> amb{wreath::load_group(common.group), common.n,
                                          wreath::BasisKind::semigroup, {common.prime}};
          rc |= dims_agree(amb, common.m, kind);
        } else {
          rc |= dims_agree(make_ambient(common), common.m, kind);
        }
      };
      if (dim_kind == "all") {
        for (auto k : {wreath::CentralizerKind::group, wreath::CentralizerKind::semigroup,
                       wreath::CentralizerKind::star})
          run_kind(k);
      } else {
        run_kind(wreath::centralizer_kind_from_name(dim_kind));
      }
      return rc;
    }

    if (verify->parsed()) {
      if (list_checks) {
        for (const auto& name : wreath::available_checks()) std::cout << name << "\n";
        return 0;
      }
      if (!config_path.empty()) {
        std::ifstream f(config_path);
        wreath::require(f.good(), "cannot open config " + config_path);
        Json cfg = Json::parse(f);
        if (cfg.contains("all")) verify_all = cfg["all"].get<bool>();
        if (cfg.contains("checks")) check_names = cfg["checks"].get<std::vector<std::string>>();
        if (cfg.contains("group")) v_group = cfg["group"].get<std::string>(), have_group = true;
        if (cfg.contains("max_n")) v_max_n = cfg["max_n"].get<int>(), have_max_n = true;
        if (cfg.contains("threads"))
          setenv("WREATHCENT_THREADS", std::to_string(cfg["threads"].get<int>()).c_str(), 1);
        if (cfg.contains("cap"))
          setenv("WREATHCENT_CAP", cfg["cap"].get<std::string>().c_str(), 1);
        if (cfg.contains("m")) v_m = cfg["m"].get<int>(), have_m = true;
        if (cfg.contains("out")) out_path = cfg["out"].get<std::string>();
        if (cfg.contains("tsv")) tsv_path = cfg["tsv"].get<std::string>();
      }
      wreath::CheckScope scope;
      if (have_group) scope.group = v_group;
      if (have_max_n) scope.max_n = v_max_n;
      if (have_m) scope.m = v_m;
      std::vector<wreath::Report> reports;
      Json timing = Json::object();
      auto timed = [&](const std::string& label, auto&& fn) {
        auto start = std::chrono::steady_clock::now();
        for (auto& r : fn()) reports.push_back(std::move(r));
        auto stop = std::chrono::steady_clock::now();
        timing[label] =
            std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
      };
      if (verify_all) {
        timed("all", [] { return wreath::run_all_checks_with_determinism(); });
      } else {
        wreath::require(!check_names.empty(), "verify: pass --all or --check NAME");
        for (const auto& name : check_names)
          timed(name, [&] { return wreath::run_check(name, scope); });
      }
      Json j = wreath::reports_to_json(reports);
      if (timings) j["elapsed_ms"] = timing;
      emit(j, out_path);
      if (!tsv_path.empty()) {
        std::ofstream f(tsv_path);
        wreath::require(f.good(), "cannot open TSV file " + tsv_path);
        f << reports_to_tsv(reports);
      }
      return j["failures"].get<int>() == 0 ? 0 : kExitFailure;
    }

    if (elem->parsed()) {
      auto amb = make_ambient(common);
      auto value = wreath::evaluate_element_expression(expr, amb);
      if (elem_json) {
        emit(wreath::element_to_json(value), "");
      } else {
        std::cout << wreath::to_display_string(value) << "\n";
      }
      return 0;
    }

    if (gz->parsed()) {
      wreath::Ambient<R> amb{wreath::load_group(common.group), common.n,
                             wreath::BasisKind::group, {}};
      wreath::GZData<R> data = wreath::gz_algebra(amb);
      wreath::Report max = wreath::verify_maximal_commutative(data);
      Json j = {{"n", common.n},
                {"group", amb.group->describe()},
                {"dim", data.dim()},
                {"expected_dim", data.expected_dim},
                {"maximal", max.passed()},
                {"commutative", max.dims["commutative"].get<bool>()}};
      emit(j, "");
      return max.passed() ? 0 : kExitFailure;
    }

    if (enumerate->parsed()) {
      auto g = wreath::load_group(common.group);
      long long count = 0;
      wreath::for_each_rook_matrix(common.n, *g, [&](const wreath::RookMatrix& mtx) {
        ++count;
        if (!count_only) std::cout << wreath::rook_to_string(mtx, *g) << "\n";
      });
      std::cout << count << "\n";
      return 0;
    }
  } catch (const wreath::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
