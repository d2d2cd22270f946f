#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "commands.hpp"
#include "toric/error.hpp"
#include "toric/io.hpp"
#include "toric/lattice.hpp"
#include "toric/parallel.hpp"
#include "toric/typea.hpp"
#include "toric/wonderful.hpp"

namespace py = pybind11;
using namespace toric;

namespace {

std::vector<std::int64_t> counts(const GradedCount& g) { return g.coefficients(); }

// CLI reports travel through JSON text so the Python side gets plain dicts.
py::object to_python(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

py::object report(const cli::CommandOutput& out) {
  py::dict d = to_python(out.json);
  d["status"] = out.status;
  return std::move(d);
}

IntegerMatrix matrix(const std::vector<std::vector<long>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  IntegerMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw ValidationError("ragged matrix");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::vector<std::string> integers(const std::vector<Integer>& v) {
  std::vector<std::string> out;
  for (const Integer& x : v) out.push_back(x.get_str());
  return out;
}

struct Model {
  ArrangementFile file;
  LayerPoset poset;
  BuildingSet g;
  Fan fan;
};

Model load(const std::string& arr, const std::string& fan_path) {
  ArrangementFile file = load_arrangement(arr);
  LayerPoset poset = poset_of_layers(file.arrangement(), file.torus_dim);
  BuildingSet g = building_set_from(file, poset);
  Fan fan = load_fan(fan_path);
  return Model{std::move(file), std::move(poset), std::move(g), std::move(fan)};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Wonderful models of toric arrangements and type-A companion computations";

  auto base = py::register_exception<std::runtime_error>(m, "ToricError");
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
  py::register_exception<MathError>(m, "MathError", base.ptr());

  m.def("set_thread_count", &set_thread_count, py::arg("n"));
  m.def("thread_count", &thread_count);

  // Lattice
  m.def(
      "smith_diagonal", [](const std::vector<std::vector<long>>& rows) { return integers(smith_normal_form(matrix(rows)).diagonal); },
      py::arg("rows"), "Smith normal form diagonal as decimal strings");
  m.def(
      "determinant", [](const std::vector<std::vector<long>>& rows) { return determinant(matrix(rows)).get_str(); },
      py::arg("rows"));

  // Fans
  m.def(
      "f_vector", [](const std::string& path) { return f_vector(load_fan(path)); }, py::arg("fan_path"));
  m.def(
      "betti_numbers", [](const std::string& path) { return counts(betti_numbers(load_fan(path))); },
      py::arg("fan_path"));
  m.def(
      "weyl_betti_numbers", [](std::size_t n) { return counts(betti_numbers(weyl_fan_A(n))); }, py::arg("n"));
  m.def(
      "fan_check", [](const std::string& path) { return report(cli::fan_check(path)); }, py::arg("fan_path"));

  // Arrangements and models
  m.def(
      "poset", [](const std::string& arr) { return report(cli::arr_poset(arr)); }, py::arg("arr_path"));
  m.def(
      "goodness",
      [](const std::string& arr, const std::string& fan, int bound) { return report(cli::arr_goodness(arr, fan, bound)); },
      py::arg("arr_path"), py::arg("fan_path"), py::arg("bound") = kDefaultSearchBound);
  m.def(
      "nested_sets", [](const std::string& arr) { return report(cli::model_nested(arr)); }, py::arg("arr_path"));
  m.def(
      "admissible_functions", [](const std::string& arr) { return report(cli::model_admissible(arr)); },
      py::arg("arr_path"));
  m.def(
      "basis",
      [](const std::string& arr, const std::string& fan, int bound) { return report(cli::model_basis(arr, fan, bound)); },
      py::arg("arr_path"), py::arg("fan_path"), py::arg("bound") = kDefaultSearchBound);
  m.def(
      "presentation",
      [](const std::string& arr, const std::string& fan, int bound) {
        return report(cli::model_presentation(arr, fan, bound));
      },
      py::arg("arr_path"), py::arg("fan_path"), py::arg("bound") = kDefaultSearchBound);
  m.def(
      "poincare",
      [](const std::string& arr, const std::string& fan) {
        Model md = load(arr, fan);
        return counts(poincare(md.g, md.fan));
      },
      py::arg("arr_path"), py::arg("fan_path"));
  m.def(
      "blowup_recursion",
      [](const std::string& arr, const std::string& fan) {
        Model md = load(arr, fan);
        return counts(rank_via_blowup_recursion(md.g, md.fan));
      },
      py::arg("arr_path"), py::arg("fan_path"));

  // Type A
  m.def("hook_factorize", [](const Word& w) {
    HookFactorization h = hook_factorize(w);
    return py::make_tuple(h.prefix, h.hooks);
  }, py::arg("word"));
  m.def("lec", [](const Word& w) { return lec(w); }, py::arg("word"));
  m.def("des", [](const Word& w) { return des(w); }, py::arg("word"));
  m.def("eulerian_polynomial", [](std::size_t n) { return counts(eulerian_polynomial(n)); }, py::arg("n"));
  m.def("lec_distribution", [](std::size_t n) { return counts(lec_distribution(n)); }, py::arg("n"));
  m.def("des_distribution", [](std::size_t n) { return counts(des_distribution(n)); }, py::arg("n"));
  m.def(
      "psi", [](const std::string& forest, const Word& sigma) { return to_string(psi(parse_forest(forest), sigma)); },
      py::arg("forest"), py::arg("sigma"));
  m.def(
      "psi_inverse",
      [](const std::string& forest) {
        auto [base_forest, sigma] = psi_inverse(parse_forest(forest));
        return py::make_tuple(to_string(base_forest), sigma);
      },
      py::arg("forest"));
  m.def(
      "forests",
      [](std::size_t n) {
        std::vector<std::string> out;
        for (const AdmissibleForest& f : enumerate_forests(n)) out.push_back(to_string(f));
        return out;
      },
      py::arg("n"));
  m.def("tree_degree_counts", [](std::size_t n) { return counts(tree_degree_counts(n)); }, py::arg("n"));
  m.def(
      "chain_to_permutation",
      [](const std::vector<std::pair<Word, unsigned>>& chain, std::size_t n) {
        ChainMonomial c;
        for (const auto& [set, e] : chain) c.push_back({set, e});
        return chain_monomial_to_permutation(c, n);
      },
      py::arg("chain"), py::arg("n"));
  m.def(
      "typea_poincare",
      [](std::size_t n) { return counts(poincare(typea_minimal_building_set(n), weyl_fan_A(n))); }, py::arg("n"));
  m.def(
      "verify_identities", [](std::size_t order) { return report(cli::typea_verify(order)); },
      py::arg("order") = 8);

  m.def(
      "reproduce",
      [](const std::string& id, const std::string& data_dir, const std::string& golden_dir) {
        return report(cli::reproduce(id, data_dir, golden_dir, false));
      },
      py::arg("example"), py::arg("data_dir"), py::arg("golden_dir"));
}
