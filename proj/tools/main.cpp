#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"
#include "toric/error.hpp"
#include "toric/parallel.hpp"

#ifndef TORIC_DEFAULT_DATA_DIR
#define TORIC_DEFAULT_DATA_DIR "data"
#endif

namespace {

using toric::cli::CommandOutput;

std::string env_or(const char* name, const std::string& fallback) {
  const char* v = std::getenv(name);
  return (v && *v) ? std::string(v) : fallback;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wonderful models of toric arrangements and type-A companion computations"};
  app.require_subcommand(1);

  bool json = false;
  bool table = false;
  int bound = toric::kDefaultSearchBound;
  std::string threads;
  std::string data_dir = env_or("TORIC_DATA_DIR", TORIC_DEFAULT_DATA_DIR);
  std::string golden_dir;
  auto* json_flag = app.add_flag("--json", json, "Print JSON output");
  app.add_flag("--table", table, "Print table output (default)")->excludes(json_flag);
  app.add_option("--bound", bound, "Coefficient bound for the equal-sign basis search")
      ->check(CLI::Range(1, 64));
  app.add_option("--threads", threads, "Worker threads (overrides TORIC_THREADS; 0 = hardware)");
  app.add_option("--data-dir", data_dir, "Directory holding the bundled data files");
  app.add_option("--golden-dir", golden_dir, "Directory holding golden outputs (default <data-dir>/golden)");

  std::string fan_path, arr_path, word, forest, sigma, example;
  std::size_t n = 0, order = 8;
  bool inverse = false, update = false;

  auto* fan = app.add_subcommand("fan", "Fan commands")->require_subcommand(1);
  auto* fan_check = fan->add_subcommand("check", "Validate a fan; print f-vector and Betti numbers");
  fan_check->add_option("fanfile", fan_path)->required();

  auto* arr = app.add_subcommand("arr", "Arrangement commands")->require_subcommand(1);
  auto* arr_poset = arr->add_subcommand("poset", "Poset of layers with Hasse edges");
  arr_poset->add_option("arrfile", arr_path)->required();
  auto* arr_good = arr->add_subcommand("goodness", "Equal-sign certificates for every layer");
  arr_good->add_option("arrfile", arr_path)->required();
  arr_good->add_option("fanfile", fan_path)->required();

  auto* model = app.add_subcommand("model", "Wonderful model commands")->require_subcommand(1);
  auto* m_nested = model->add_subcommand("nested", "Nested sets of the building set");
  auto* m_adm = model->add_subcommand("admissible", "Admissible functions");
  auto* m_basis = model->add_subcommand("basis", "Monomial cohomology basis");
  auto* m_poin = model->add_subcommand("poincare", "Poincare polynomial with blowup-recursion check");
  auto* m_pres = model->add_subcommand("presentation", "Generators of the cohomology ring presentation");
  for (auto* sub : {m_nested, m_adm}) {
    sub->add_option("arrfile", arr_path)->required();
    sub->add_option("fanfile", fan_path, "Optional fan; when given, goodness is checked first");
  }
  for (auto* sub : {m_basis, m_poin, m_pres}) {
    sub->add_option("arrfile", arr_path)->required();
    sub->add_option("fanfile", fan_path)->required();
  }

  auto* typea = app.add_subcommand("typea", "Type-A companion computations")->require_subcommand(1);
  auto* t_eul = typea->add_subcommand("eulerian", "Eulerian polynomial and lec/des distributions");
  t_eul->add_option("n", n)->required();
  auto* t_lec = typea->add_subcommand("lec", "Hook factorization and lec of a word");
  t_lec->add_option("word", word, "e.g. [3,1,2] or 3,1,2")->required();
  auto* t_psi = typea->add_subcommand("psi", "Forest bijection psi(F, sigma)");
  t_psi->add_option("forest", forest, "e.g. \"q1(1,2,3) 4\"")->required();
  t_psi->add_option("sigma", sigma, "permutation of the trees");
  t_psi->add_flag("--inverse", inverse, "Decompose a forest on n+1 leaves");
  auto* t_for = typea->add_subcommand("forests", "Admissible tree and forest counts");
  t_for->add_option("n", n)->required();
  auto* t_model = typea->add_subcommand("model", "Type-A toric model Poincare polynomial");
  t_model->add_option("n", n)->required();
  auto* t_ver = typea->add_subcommand("verify", "Generating-function identities");
  t_ver->add_option("--order", order, "Truncation order in t");

  auto* rep = app.add_subcommand("reproduce", "Run a bundled example and compare with its golden output");
  rep->add_option("example", example)->required()->check(CLI::IsMember(toric::cli::reproduce_ids()));
  rep->add_flag("--update", update, "Rewrite the golden output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : toric::cli::kExitParse;
  }

  try {
    const std::string thread_text = threads.empty() ? env_or("TORIC_THREADS", "") : threads;
    if (!thread_text.empty()) {
      if (thread_text.find_first_not_of("0123456789") != std::string::npos)
        throw toric::ParseError("thread count must be a nonnegative integer: '" + thread_text + "'");
      toric::set_thread_count(std::stoul(thread_text));
    }
    if (golden_dir.empty()) golden_dir = data_dir + "/golden";

    CommandOutput out;
    if (*fan_check) {
      out = toric::cli::fan_check(fan_path);
    } else if (*arr_poset) {
      out = toric::cli::arr_poset(arr_path);
    } else if (*arr_good) {
      out = toric::cli::arr_goodness(arr_path, fan_path, bound);
    } else if (*m_nested || *m_adm) {
      if (!fan_path.empty()) {
        CommandOutput g = toric::cli::arr_goodness(arr_path, fan_path, bound);
        if (g.status != toric::cli::kExitOk) throw toric::ValidationError("fan is not good for the arrangement");
      }
      out = *m_nested ? toric::cli::model_nested(arr_path) : toric::cli::model_admissible(arr_path);
    } else if (*m_basis) {
      out = toric::cli::model_basis(arr_path, fan_path, bound);
    } else if (*m_poin) {
      out = toric::cli::model_poincare(arr_path, fan_path, bound);
    } else if (*m_pres) {
      out = toric::cli::model_presentation(arr_path, fan_path, bound);
    } else if (*t_eul) {
      out = toric::cli::typea_eulerian(n);
    } else if (*t_lec) {
      out = toric::cli::typea_lec(word);
    } else if (*t_psi) {
      if (inverse) {
        if (!sigma.empty()) throw toric::ParseError("psi --inverse takes a single forest");
        out = toric::cli::typea_psi_inverse(forest);
      } else {
        if (sigma.empty()) throw toric::ParseError("psi needs a forest and a permutation");
        out = toric::cli::typea_psi(forest, sigma);
      }
    } else if (*t_for) {
      out = toric::cli::typea_forests(n);
    } else if (*t_model) {
      out = toric::cli::typea_model(n);
    } else if (*t_ver) {
      out = toric::cli::typea_verify(order);
    } else if (*rep) {
      out = toric::cli::reproduce(example, data_dir, golden_dir, update);
    }

    if (json) {
      std::cout << out.json.dump(2) << '\n';
    } else {
      std::cout << out.table;
    }
    return out.status;
  } catch (const toric::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return toric::cli::kExitParse;
  } catch (const toric::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << '\n';
    return toric::cli::kExitValidation;
  } catch (const toric::MathError& e) {
    std::cerr << "math error: " << e.what() << '\n';
    return toric::cli::kExitMath;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return toric::cli::kExitValidation;
  }
}
