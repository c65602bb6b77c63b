#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <optional>
#include <string>

#include "mbc/contest.hpp"
#include "mbc/matrix.hpp"
#include "mbc/oracle.hpp"
#include "mbc/simulator.hpp"
#include "mbc/strategy.hpp"

namespace py = pybind11;
using namespace mbc;

namespace {

Exact to_exact(const py::handle& obj) { return parse_exact(std::string(py::str(obj))); }

AuctionVariant variant_of(const std::string& name, const std::optional<py::object>& alpha) {
  std::optional<Exact> a;
  if (alpha && !alpha->is_none()) a = to_exact(*alpha);
  return parse_variant(name, a);
}

py::object to_py(const Exact& q) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(format_exact(q));
}

py::object to_py(double x) { return py::float_(x); }

template <class Num>
py::object to_py(const Ratio<Num>& r) {
  return r.is_unwinnable() ? py::float_(INFINITY) : to_py(r.value());
}

template <class Num>
py::list matrix_rows(const CountdownMatrix<Num>& m) {
  py::list rows;
  for (int i = 1; i <= m.size(); ++i) {
    py::list row;
    for (int j = 1; j <= m.size(); ++j) row.append(to_py(m.at(i, j)));
    rows.append(row);
  }
  return rows;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Optimal budget ratios for two-player budget-constrained multi-battle contests";

  static py::exception<DomainError> domain_error(m, "DomainError", PyExc_ValueError);
  static py::exception<ResourceError> resource_error(m, "ResourceError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const DomainError& e) {
      domain_error(e.what());
    } catch (const ResourceError& e) {
      resource_error(e.what());
    }
  });

  m.def(
      "obr",
      [](const std::string& variant, int turns, std::optional<py::object> alpha, int handicap,
         bool exact) -> py::object {
        const auto v = variant_of(variant, alpha);
        if (exact)
          return to_py(handicap > 0 ? handicap_obr<Exact>(v, turns, handicap) : obr<Exact>(v, turns));
        return to_py(handicap > 0 ? handicap_obr<double>(v, turns, handicap) : obr<double>(v, turns));
      },
      py::arg("variant"), py::arg("turns"), py::arg("alpha") = py::none(), py::arg("handicap") = 0,
      py::arg("exact") = false);

  m.def(
      "closed_form",
      [](const std::string& variant, int i, int j, std::optional<py::object> alpha, bool exact) {
        const auto v = variant_of(variant, alpha);
        return exact ? to_py(closed_form<Exact>(v, i, j)) : to_py(closed_form<double>(v, i, j));
      },
      py::arg("variant"), py::arg("i"), py::arg("j"), py::arg("alpha") = py::none(),
      py::arg("exact") = true);

  m.def(
      "build_matrix",
      [](const std::string& variant, int n, std::optional<py::object> alpha, bool exact) {
        const auto v = variant_of(variant, alpha);
        return exact ? matrix_rows(build_matrix<Exact>(v, n)) : matrix_rows(build_matrix<double>(v, n));
      },
      py::arg("variant"), py::arg("n"), py::arg("alpha") = py::none(), py::arg("exact") = false,
      "Rows i = 1..n of the countdown matrix; math.inf marks unwinnable entries.");

  m.def(
      "matrix_dump",
      [](const std::string& variant, int n, std::optional<py::object> alpha, bool exact,
         const std::string& format) {
        const auto v = variant_of(variant, alpha);
        if (format != "csv" && format != "json") throw DomainError("format must be csv or json");
        if (exact) {
          const auto mat = build_matrix<Exact>(v, n);
          return format == "csv" ? to_csv(mat) : to_json(mat);
        }
        const auto mat = build_matrix<double>(v, n);
        return format == "csv" ? to_csv(mat) : to_json(mat);
      },
      py::arg("variant"), py::arg("n"), py::arg("alpha") = py::none(), py::arg("exact") = false,
      py::arg("format") = "csv");

  m.def(
      "verify_matrix",
      [](const std::string& variant, int n, std::optional<py::object> alpha) {
        const VerifyReport r = verify_matrix(variant_of(variant, alpha), n);
        py::dict out;
        out["ok"] = r.ok;
        out["entries_checked"] = r.entries_checked;
        if (r.mismatch) out["mismatch"] = py::make_tuple(r.mismatch->i, r.mismatch->j);
        return out;
      },
      py::arg("variant"), py::arg("n"), py::arg("alpha") = py::none());

  m.def(
      "optimal_bid_fraction",
      [](const std::string& variant, int i, int j, std::optional<py::object> alpha, bool exact) {
        const auto v = variant_of(variant, alpha);
        return exact ? to_py(optimal_bid_fraction<Exact>(v, i, j))
                     : to_py(optimal_bid_fraction<double>(v, i, j));
      },
      py::arg("variant"), py::arg("i"), py::arg("j"), py::arg("alpha") = py::none(),
      py::arg("exact") = true);

  m.def(
      "p1_can_win",
      [](const std::string& variant, int turns, std::int64_t b1, std::int64_t b2,
         std::optional<py::object> alpha) {
        Oracle oracle(variant_of(variant, alpha), turns);
        return oracle.p1_can_win(GameState<std::int64_t>::fresh(turns, b1, b2));
      },
      py::arg("variant"), py::arg("turns"), py::arg("b1"), py::arg("b2"),
      py::arg("alpha") = py::none(), "Oracle verdict for integer (grid-unit) budgets.");

  m.def(
      "min_winning_budget",
      [](const std::string& variant, int turns, std::int64_t b2, std::optional<py::object> alpha,
         bool bisect) {
        BudgetSearchOptions options;
        options.mode = bisect ? BudgetSearch::Bisection : BudgetSearch::Linear;
        const OracleResult r = min_winning_budget(variant_of(variant, alpha), turns, b2, options);
        py::dict out;
        out["b_star"] = r.b_star;
        out["ratio"] = r.ratio;
        out["nodes_expanded"] = r.nodes_expanded;
        return out;
      },
      py::arg("variant"), py::arg("turns"), py::arg("b2"), py::arg("alpha") = py::none(),
      py::arg("bisect") = false);

  m.def(
      "run_game",
      [](const std::string& variant, int turns, const py::object& ratio,
         const std::string& adversary, std::uint64_t seed, std::optional<py::object> alpha,
         const py::object& b2) {
        GameConfig config;
        config.variant = variant_of(variant, alpha);
        config.turns = turns;
        config.budget_p2 = to_exact(b2);
        const Exact b1 = to_exact(ratio) * config.budget_p2;
        return to_json_string(run_game(config, b1, P1Policy::strategy(),
                                       AdversaryPolicy::of(parse_adversary(adversary)), seed));
      },
      py::arg("variant"), py::arg("turns"), py::arg("ratio"), py::arg("adversary"),
      py::arg("seed") = 0, py::arg("alpha") = py::none(), py::arg("b2") = 1,
      "Plays one game and returns the trace as a JSON string.");

  m.def(
      "exhaustive_adversary_check",
      [](const std::string& variant, int turns, const py::object& b1, int denominator_bound,
         std::optional<py::object> alpha) {
        GameConfig config;
        config.variant = variant_of(variant, alpha);
        config.turns = turns;
        const ExhaustiveVerdict v =
            exhaustive_adversary_check(config, to_exact(b1), denominator_bound);
        py::dict out;
        out["win_all"] = v.win_all;
        out["states_visited"] = v.states_visited;
        out["leaves"] = v.leaves;
        if (v.counterexample) out["counterexample"] = to_json_string(*v.counterexample);
        return out;
      },
      py::arg("variant"), py::arg("turns"), py::arg("b1"), py::arg("denominator_bound"),
      py::arg("alpha") = py::none());
}
