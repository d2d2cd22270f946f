// Acceptance checks, one per criterion. Usage: acceptance <1..9> | all
// Each criterion prints its sub-checks and a final "criterion k: PASS|FAIL" line.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "toric/error.hpp"
#include "toric/io.hpp"
#include "toric/series.hpp"
#include "toric/typea.hpp"
#include "toric/wonderful.hpp"

using namespace toric;

namespace {

std::string data(const std::string& file) { return std::string(TORIC_DATA_DIR) + "/" + file; }

class Checker {
 public:
  void check(bool ok, const std::string& what) {
    std::cout << "  [" << (ok ? "ok" : "FAIL") << "] " << what << '\n';
    all_ = all_ && ok;
  }
  template <class A, class B>
  void equal(const A& actual, const B& expected, const std::string& what) {
    std::ostringstream os;
    os << what << ": got " << show(actual) << ", expected " << show(expected);
    check(actual == expected, os.str());
  }
  bool passed() const { return all_; }

 private:
  static std::string show(const GradedCount& g) { return g.to_string(); }
  static std::string show(std::size_t x) { return std::to_string(x); }
  static std::string show(int x) { return std::to_string(x); }
  static std::string show(const std::string& s) { return s; }
  static std::string show(const Word& w) { return to_string(w); }
  static std::string show(const FVector& f) {
    std::string s = "(";
    for (std::size_t i = 0; i < f.size(); ++i) s += (i ? ", " : "") + std::to_string(f[i]);
    return s + ")";
  }
  bool all_ = true;
};

struct Example {
  ArrangementFile file;
  LayerPoset poset;
  BuildingSet g;
  Fan fan;
  std::vector<std::string> names;

  Example(const std::string& arr, const std::string& fan_file)
      : file(load_arrangement(data(arr))),
        poset(poset_of_layers(file.arrangement(), file.torus_dim)),
        g(building_set_from(file, poset)),
        fan(load_fan(data(fan_file))),
        names(element_names(file, poset)) {}

  std::string label(const MemberSet& s) const {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + names[g.poset_index(s[i])];
    return out + "}";
  }
  std::string monomial(const AdmissibleFunction& f) const {
    std::string out;
    for (std::size_t i = 0; i < f.support.size(); ++i) {
      out += "T" + std::to_string(f.support[i] + 1);
      if (f.values[i] > 1) out += "^" + std::to_string(f.values[i]);
    }
    return out.empty() ? "1" : out;
  }
  std::string monomials(const std::vector<AdmissibleFunction>& fs) const {
    std::vector<std::string> parts;
    for (const AdmissibleFunction& f : fs) parts.push_back(monomial(f));
    std::sort(parts.begin(), parts.end());
    std::string out = "{";
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "," : "") + parts[i];
    return out + "}";
  }
};

Fan p1_power(std::size_t d) {
  std::vector<IntVector> rays;
  for (std::size_t i = 0; i < d; ++i)
    for (long s : {1L, -1L}) {
      IntVector v(d, 0);
      v[i] = s;
      rays.push_back(v);
    }
  std::vector<Cone> cones;
  for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
    Cone c;
    for (std::size_t i = 0; i < d; ++i) c.push_back(2 * i + ((mask >> i) & 1U));
    cones.push_back(c);
  }
  return Fan(d, rays, cones);
}

BuildingSet all_elements(const LayerPoset& poset) {
  std::vector<std::size_t> members;
  for (std::size_t i = 1; i < poset.size(); ++i) members.push_back(i);
  return BuildingSet(poset, members);
}

// Random arrangement in (C*)^d of coordinate layers with phi in {0, 1/2}.
std::vector<Layer> random_arrangement(std::mt19937& rng, std::size_t d) {
  std::uniform_int_distribution<int> count(1, 4);
  std::uniform_int_distribution<int> coin(0, 1);
  std::vector<Layer> layers;
  const int k = count(rng);
  for (int l = 0; l < k; ++l) {
    std::vector<IntVector> rows;
    std::vector<Rational> phi;
    for (std::size_t i = 0; i < d; ++i)
      if (coin(rng)) {
        IntVector v(d, 0);
        v[i] = 1;
        rows.push_back(v);
        phi.push_back(Rational(coin(rng), 2));
      }
    if (rows.empty()) {
      IntVector v(d, 0);
      v[static_cast<std::size_t>(l) % d] = 1;
      rows.push_back(v);
      phi.push_back(0);
    }
    layers.emplace_back(IntegerMatrix::from_rows(rows, d), phi);
  }
  return layers;
}

const Example& main_example() {
  static const Example ex("example_main.json", "appendix_a_fan.json");
  return ex;
}
const Example& second_example() {
  static const Example ex("example_arr2.json", "p1_4_fan.json");
  return ex;
}
const Example& typea_example() {
  static const Example ex("typea_a4.json", "weyl_a4_fan.json");
  return ex;
}

std::vector<std::int64_t> eulerian_row(std::size_t n) {
  std::vector<std::int64_t> row(n, 0);
  Word w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = static_cast<int>(i + 1);
  do ++row[des(w)];
  while (std::next_permutation(w.begin(), w.end()));
  return row;
}

// ---------------------------------------------------------------------------

void criterion1(Checker& c) {
  Fan fan = load_fan(data("appendix_a_fan.json"));
  FanReport r = validate(fan);
  c.equal(fan.rays().size(), std::size_t{72}, "rays");
  c.equal(fan.maximal_cones().size(), std::size_t{140}, "maximal cones");
  c.check(r.simplicial && r.smooth && r.complete, "simplicial, smooth and complete");
  c.equal(f_vector(fan), FVector{1, 72, 210, 140}, "f-vector");
  c.equal(betti_numbers(fan), GradedCount({1, 69, 69, 1}), "Betti numbers");
}

void criterion2(Checker& c) {
  const Example& ex = main_example();
  std::size_t by_codim[4] = {0, 0, 0, 0};
  for (const Layer& l : ex.poset.elements()) ++by_codim[l.codim()];
  c.check(ex.poset.size() == 12 && by_codim[0] == 1 && by_codim[1] == 3 && by_codim[2] == 4 && by_codim[3] == 4,
          "poset shape: 1 torus, 3 divisors, 4 curves, 4 points");
  auto idx = [&](const char* n) { return ex.poset.require_index(ex.file.named(n)); };
  c.check(ex.poset.below_or_equal(idx("L2"), idx("P1")) && ex.poset.below_or_equal(idx("L2"), idx("P3")) &&
              ex.poset.below_or_equal(idx("L3"), idx("P2")) && ex.poset.below_or_equal(idx("L3"), idx("P4")) &&
              !ex.poset.below_or_equal(idx("L2"), idx("P2")),
          "points P1, P3 on L2 and P2, P4 on L3");
  c.equal(ex.g.size(), std::size_t{9}, "building set size");
  c.check(is_well_connected(ex.g).well_connected, "building set is well-connected");

  const std::set<std::string> expected_nested{
      "{}",          "{K1}",        "{K2}",        "{K3}",        "{L2}",        "{L3}",        "{P1}",
      "{P2}",        "{P3}",        "{P4}",        "{K1,K2}",     "{K1,L2}",     "{K1,L3}",     "{K1,P1}",
      "{K1,P2}",     "{K1,P3}",     "{K1,P4}",     "{K2,K3}",     "{K2,P1}",     "{K2,P2}",     "{K2,P3}",
      "{K2,P4}",     "{K3,L2}",     "{K3,L3}",     "{K3,P1}",     "{K3,P2}",     "{K3,P3}",     "{K3,P4}",
      "{L2,P1}",     "{L2,P3}",     "{L3,P2}",     "{L3,P4}",     "{K1,K2,P1}",  "{K1,K2,P2}",  "{K1,K2,P3}",
      "{K1,K2,P4}",  "{K1,L2,P1}",  "{K1,L2,P3}",  "{K1,L3,P2}",  "{K1,L3,P4}",  "{K2,K3,P1}",  "{K2,K3,P2}",
      "{K2,K3,P3}",  "{K2,K3,P4}",  "{K3,L2,P1}",  "{K3,L2,P3}",  "{K3,L3,P2}",  "{K3,L3,P4}"};
  auto nested = enumerate_nested_sets(ex.g);
  std::set<std::string> computed;
  for (const MemberSet& s : nested) computed.insert(ex.label(s));
  c.equal(nested.size(), std::size_t{48}, "nested sets");
  c.check(computed == expected_nested, "nested sets equal the reference list");

  auto fs = enumerate_admissible(ex.g);
  std::multiset<std::string> adm;
  for (const AdmissibleFunction& f : fs) {
    std::string s = ex.label(f.support);
    for (unsigned v : f.values) s += std::to_string(v);
    adm.insert(s);
  }
  c.equal(fs.size(), std::size_t{11}, "admissible functions");
  c.check(adm == std::multiset<std::string>{"{}", "{L2}1", "{L3}1", "{P1}1", "{P1}2", "{P2}1", "{P2}2", "{P3}1",
                                            "{P3}2", "{P4}1", "{P4}2"},
          "admissible supports and values equal the reference table");

  WonderfulBasis b = compute_basis(ex.g, ex.fan);
  c.equal(b.poincare, GradedCount({1, 75, 75, 1}), "Poincare polynomial");

  struct Row {
    GradedCount betti;
    std::string monomials;
    GradedCount contribution;
  };
  const std::map<std::string, Row> expected{
      {"{}", {GradedCount({1, 69, 69, 1}), "{1}", GradedCount({1, 69, 69, 1})}},
      {"{L2}", {GradedCount({1, 1}), "{T4}", GradedCount({0, 1, 1})}},
      {"{L3}", {GradedCount({1, 1}), "{T5}", GradedCount({0, 1, 1})}},
      {"{P1}", {GradedCount({1}), "{T6,T6^2}", GradedCount({0, 1, 1})}},
      {"{P2}", {GradedCount({1}), "{T8,T8^2}", GradedCount({0, 1, 1})}},
      {"{P3}", {GradedCount({1}), "{T7,T7^2}", GradedCount({0, 1, 1})}},
      {"{P4}", {GradedCount({1}), "{T9,T9^2}", GradedCount({0, 1, 1})}}};
  bool rows_ok = b.rows.size() == expected.size();
  for (const SupportContribution& row : b.rows) {
    auto it = expected.find(ex.label(row.support));
    const bool ok = it != expected.end() && row.subfan_betti == it->second.betti &&
                    ex.monomials(row.functions) == it->second.monomials && row.contribution == it->second.contribution;
    rows_ok = rows_ok && ok;
    if (!ok) c.check(false, "row " + ex.label(row.support) + " differs from the reference tables");
  }
  c.check(rows_ok, "per-support rows equal the reference tables");

  bool theta_ok = true;
  for (const SupportContribution& row : b.rows) {
    const std::string l = ex.label(row.support);
    if (l != "{L2}" && l != "{L3}") continue;
    theta_ok = theta_ok && row.theta.size() == 2 && row.theta[0].size() == 1 && row.theta[0][0].empty() &&
               row.theta[1].size() == 1 && to_string(row.theta[1][0]) == "C7";
  }
  c.check(theta_ok, "Theta({L2}) = Theta({L3}) = {1, C7} with C7 in degree 1");
  std::set<std::string> l2_elements;
  for (const BasisElement& e : b.elements)
    if (ex.label(e.function.support) == "{L2}")
      l2_elements.insert((e.theta.empty() ? "" : to_string(e.theta)) + ex.monomial(e.function));
  c.check(l2_elements == std::set<std::string>{"C7T4", "T4"}, "basis elements from {L2} are {C7 T4, T4}");
}

void criterion3(Checker& c) {
  const Example& ex = second_example();
  c.equal(ex.fan.maximal_cones().size(), std::size_t{16}, "(P1)^4 maximal cones");
  auto fs = enumerate_admissible(ex.g);
  std::map<std::string, std::vector<std::string>> supports;
  for (const AdmissibleFunction& f : fs) {
    std::string v;
    for (unsigned x : f.values) v += std::to_string(x);
    supports[ex.label(f.support)].push_back(v);
  }
  const std::map<std::string, std::vector<std::string>> expected{
      {"{}", {""}}, {"{L}", {"1"}}, {"{M1}", {"1", "2"}}, {"{M2}", {"1", "2"}}, {"{P}", {"1", "2", "3"}},
      {"{L,P}", {"11"}}};
  c.check(supports.count("{L,P}") == 1 && supports["{L,P}"] == std::vector<std::string>{"11"},
          "size-2 support {L,P} with f(L) = f(P) = 1");
  for (const auto& [s, values] : supports)
    if (!expected.count(s)) c.check(false, "computed support " + s + " is not in the reference list");
  c.check(supports == expected, "admissible supports and value ranges equal the reference list");

  WonderfulBasis b = compute_basis(ex.g, ex.fan);
  struct Row {
    GradedCount betti;
    std::string monomials;
    GradedCount contribution;
  };
  const std::map<std::string, Row> expected_rows{
      {"{}", {GradedCount({1, 4, 6, 4, 1}), "{1}", GradedCount({1, 4, 6, 4, 1})}},
      {"{L}", {GradedCount({1, 2, 1}), "{T6}", GradedCount({0, 1, 2, 1})}},
      {"{M1}", {GradedCount({1, 1}), "{T4,T4^2}", GradedCount({0, 1, 2, 1})}},
      {"{M2}", {GradedCount({1, 1}), "{T5,T5^2}", GradedCount({0, 1, 2, 1})}},
      {"{P}", {GradedCount({1}), "{T7,T7^2,T7^3}", GradedCount({0, 1, 1, 1})}},
      {"{L,P}", {GradedCount({1}), "{T6T7}", GradedCount({0, 0, 1})}}};
  std::set<std::string> matched;
  for (const SupportContribution& row : b.rows) {
    const std::string l = ex.label(row.support);
    auto it = expected_rows.find(l);
    if (it == expected_rows.end()) {
      c.check(false, "computed row " + l + " contributes " + row.contribution.to_string() +
                         " and has no reference counterpart");
      continue;
    }
    const bool ok = row.subfan_betti == it->second.betti && ex.monomials(row.functions) == it->second.monomials &&
                    row.contribution == it->second.contribution;
    c.check(ok, "row " + l + " equals the reference row");
    if (ok) matched.insert(l);
  }
  c.check(matched.size() == expected_rows.size() && b.rows.size() == expected_rows.size(),
          "contribution rows equal the reference table row-for-row");
  c.equal(b.poincare, GradedCount({1, 8, 14, 8, 1}), "total Poincare polynomial (reference row sums)");
  c.equal(rank_via_blowup_recursion(ex.g, ex.fan), b.poincare, "blowup-recursion oracle");
}

void criterion4(Checker& c) {
  for (const Example* ex : {&main_example(), &second_example(), &typea_example()}) {
    const GradedCount p = poincare(ex->g, ex->fan);
    c.equal(rank_via_blowup_recursion(ex->g, ex->fan), p, ex->file.name + ": blowup recursion vs basis");
  }
  std::mt19937 rng(20240611);
  std::size_t agree = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t d = 2 + static_cast<std::size_t>(trial % 2);
    LayerPoset poset = poset_of_layers(random_arrangement(rng, d), d);
    BuildingSet g = all_elements(poset);
    Fan fan = p1_power(d);
    if (!goodness_check(fan, poset).good || !is_well_connected(g).well_connected) {
      c.check(false, "random arrangement " + std::to_string(trial) + " is not admissible input");
      continue;
    }
    const GradedCount p = poincare(g, fan);
    const GradedCount r = rank_via_blowup_recursion(g, fan);
    if (p == r) {
      ++agree;
    } else {
      c.check(false, "random arrangement " + std::to_string(trial) + ": " + p.to_string() + " vs " + r.to_string());
    }
  }
  c.equal(agree, std::size_t{20}, "random arrangements with agreement");
}

void criterion5(Checker& c) {
  bool all = true;
  for (std::size_t n = 1; n <= 8; ++n) {
    const GradedCount l = lec_distribution(n), d = des_distribution(n);
    const bool ok = l == d && d.shifted(1) == eulerian_polynomial(n);
    if (!ok) c.check(false, "n = " + std::to_string(n));
    all = all && ok;
  }
  c.check(all, "sum q^lec = sum q^des = A_n(q)/q for n <= 8");
  c.equal(lec(Word{10, 13, 14, 8, 3, 6, 5, 4, 7, 11, 12, 9, 1, 2}), std::size_t{5}, "lec of the reference word");
  const ChainMonomial chain{{{1, 2}, 1}, {{1, 2, 4, 5, 6}, 2}, {{1, 2, 4, 5, 6, 7, 8}, 1}};
  const Word sigma = chain_monomial_to_permutation(chain, 10);
  c.equal(sigma, Word{3, 9, 10, 2, 1, 6, 4, 5, 8, 7}, "chain monomial to permutation");
  c.check(permutation_to_chain_monomial(sigma) == chain, "permutation back to the chain monomial");
}

void criterion6(Checker& c) {
  for (std::size_t n = 1; n <= 6; ++n) {
    std::map<unsigned, std::size_t> pairs, forests;
    bool round_trip = true, degree = true;
    std::set<std::string> images;
    for (const AdmissibleForest& f : enumerate_forests(n)) {
      Word sigma(f.trees.size());
      for (std::size_t i = 0; i < sigma.size(); ++i) sigma[i] = static_cast<int>(i + 1);
      do {
        const AdmissibleForest out = psi(f, sigma);
        degree = degree && out.degree() == f.degree() + lec(sigma) && out.leaf_count() == n + 1;
        const auto back = psi_inverse(out);
        round_trip = round_trip && back.first == f && back.second == sigma;
        images.insert(to_string(out));
        ++pairs[out.degree()];
      } while (std::next_permutation(sigma.begin(), sigma.end()));
    }
    std::size_t total = 0;
    for (const AdmissibleForest& f : enumerate_forests(n + 1)) {
      ++forests[f.degree()];
      ++total;
    }
    const std::string tag = "n = " + std::to_string(n) + ": ";
    c.check(round_trip, tag + "psi_inverse(psi(F, sigma)) = (F, sigma)");
    c.check(degree, tag + "deg psi(F, sigma) = deg F + lec(sigma)");
    c.check(pairs == forests && images.size() == total,
            tag + "pairs by degree equal forests on n+1 leaves (" + std::to_string(total) + ")");
  }
}

void criterion7(Checker& c) {
  c.check(lambda_series(4).coefficient(3) == QPoly({0, 1}) && lambda_series(4).coefficient(4) == QPoly({0, 1, 1}),
          "lambda = t + q t^3/3! + (q + q^2) t^4/4! + ...");
  std::vector<IdentityCheck> checks{verify_lambda_recurrence(8)};
  for (IdentityCheck& id : verify_main_identity(8)) checks.push_back(std::move(id));
  for (const IdentityCheck& id : checks) c.check(id.holds && id.order == 8, id.name + " (" + id.detail + ")");
}

void criterion8(Checker& c) {
  const TruncatedSeries e_lambda = compose_in_t(eulerian_series(4), lambda_series(4));
  for (std::size_t n = 2; n <= 4; ++n) {
    const GradedCount p = poincare(typea_minimal_building_set(n), weyl_fan_A(n));
    std::vector<mpq_class> coeffs(p.coefficients().begin(), p.coefficients().end());
    c.check(QPoly(coeffs) == e_lambda.coefficient(n),
            "n = " + std::to_string(n) + ": poincare " + p.to_string() + " = [t^n/n!] E(q, lambda) = " +
                e_lambda.coefficient(n).to_string());
  }
  for (std::size_t n = 1; n <= 7; ++n)
    c.check(betti_numbers(weyl_fan_A(n)).coefficients() == eulerian_row(n),
            "n = " + std::to_string(n) + ": Betti of the Weyl fan are Eulerian numbers");
}

// Minimal non-faces of the fan's simplicial complex.
std::size_t minimal_non_faces(const Fan& fan) {
  std::set<Cone> faces;
  for (const auto& level : faces_by_dimension(fan))
    for (const Cone& f : level) faces.insert(f);
  const std::size_t r = fan.rays().size();
  std::size_t count = 0;
  std::vector<Cone> frontier{{}};
  for (std::size_t size = 1; size <= fan.ambient_dim() + 1; ++size) {
    std::vector<Cone> next;
    for (const Cone& base : frontier)
      for (std::size_t v = base.empty() ? 0 : base.back() + 1; v < r; ++v) {
        Cone cand = base;
        cand.push_back(v);
        bool boundary_faces = true;
        for (std::size_t drop = 0; drop < cand.size() && boundary_faces; ++drop) {
          Cone sub = cand;
          sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
          boundary_faces = faces.count(sub) == 1;
        }
        if (!boundary_faces) continue;
        if (faces.count(cand)) {
          next.push_back(cand);
        } else {
          ++count;
        }
      }
    frontier = std::move(next);
  }
  return count;
}

void criterion9(Checker& c) {
  // Palindromic Poincare polynomials.
  bool pal = true;
  for (const Example* ex : {&main_example(), &second_example(), &typea_example()})
    pal = pal && poincare(ex->g, ex->fan).is_palindromic();
  for (std::size_t n = 2; n <= 4; ++n) pal = pal && poincare(typea_minimal_building_set(n), weyl_fan_A(n)).is_palindromic();
  std::mt19937 rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t d = 2 + static_cast<std::size_t>(trial % 3);
    LayerPoset poset = poset_of_layers(random_arrangement(rng, d), d);
    pal = pal && poincare(all_elements(poset), p1_power(d)).is_palindromic();
  }
  c.check(pal, "every computed Poincare polynomial is palindromic");

  // Betti sums.
  bool sums = true;
  std::vector<Fan> fans{load_fan(data("appendix_a_fan.json")), load_fan(data("p1_4_fan.json")),
                        load_fan(data("weyl_a4_fan.json"))};
  for (std::size_t n = 1; n <= 7; ++n) fans.push_back(weyl_fan_A(n));
  for (std::size_t d = 1; d <= 4; ++d) fans.push_back(p1_power(d));
  for (const Fan& f : fans)
    sums = sums && betti_numbers(f).total() == static_cast<std::int64_t>(f.maximal_cones().size());
  c.check(sums, "sum of Betti numbers equals the number of maximal cones (" + std::to_string(fans.size()) + " fans)");

  // Lattice invariants.
  std::mt19937 lrng(7);
  std::uniform_int_distribution<long> entry(-6, 6);
  bool snf = true, sat = true;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t rows = 1 + lrng() % 4, cols = 1 + lrng() % 4;
    IntegerMatrix a(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) a(i, j) = entry(lrng);
    const SmithDecomposition s = smith_normal_form(a);
    const IntegerMatrix d = s.left * a * s.right;
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) snf = snf && d(i, j) == (i == j ? s.diagonal[i] : Integer(0));
    for (std::size_t i = 0; i + 1 < s.diagonal.size(); ++i)
      if (s.diagonal[i + 1] != 0) snf = snf && s.diagonal[i] != 0 && s.diagonal[i + 1] % s.diagonal[i] == 0;
    for (const Integer& x : s.diagonal) snf = snf && x >= 0;
    snf = snf && abs(determinant(s.left)) == 1 && abs(determinant(s.right)) == 1;
    snf = snf && s.right * s.right_inverse == IntegerMatrix::identity(cols);
    const HermiteDecomposition h = hermite_normal_form(a);
    snf = snf && h.transform * a == h.form && h.rank == s.rank();

    const Sublattice g(a);
    const Sublattice t = g.saturation();
    sat = sat && t.rank() == g.rank() && t.contains(g) && t.is_split_summand() && t.saturation() == t &&
          ((g.quotient_torsion_order() == 1) == g.is_split_summand());
  }
  c.check(snf, "Smith/Hermite invariants on 300 random matrices");
  c.check(sat, "saturation invariants on 300 random lattices");

  // Presentation class counts.
  for (const Example* ex : {&main_example(), &second_example(), &typea_example()}) {
    const Presentation p = emit_presentation(ex->g, ex->fan);
    std::size_t boundary = 0;
    for (std::size_t m = 0; m < ex->g.size(); ++m) {
      const IntegerMatrix& basis = ex->g.layer(m).gamma().basis();
      for (const IntVector& ray : ex->fan.rays()) {
        bool pairs = false;
        for (std::size_t r = 0; r < basis.rows(); ++r) pairs = pairs || dot(basis.row(r), ray) != 0;
        boundary += pairs;
      }
    }
    const bool ok = p.count(GeneratorKind::StanleyReisner) == minimal_non_faces(ex->fan) &&
                    p.count(GeneratorKind::Linear) == ex->fan.ambient_dim() && p.count(GeneratorKind::Boundary) == boundary &&
                    p.count(GeneratorKind::NestedPair) == count_nested_pairs(ex->g) &&
                    p.count(GeneratorKind::EmptyIntersection) == count_empty_intersections(ex->g) &&
                    p.variables.size() == ex->fan.rays().size() + ex->g.size();
    std::ostringstream os;
    os << ex->file.name << ": presentation class counts (" << p.count(GeneratorKind::StanleyReisner) << ", "
       << p.count(GeneratorKind::Linear) << ", " << p.count(GeneratorKind::Boundary) << ", "
       << p.count(GeneratorKind::NestedPair) << ", " << p.count(GeneratorKind::EmptyIntersection)
       << ") match direct counts";
    c.check(ok, os.str());
  }
}

struct Criterion {
  std::string title;
  std::function<void(Checker&)> run;
  double limit_seconds;  // 0 = no limit
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list{
      {"appendix fan f-vector and Betti numbers", criterion1, 1.0},
      {"main example end-to-end", criterion2, 30.0},
      {"second example on the (P1)^4 fan", criterion3, 5.0},
      {"dual oracle on bundled and random arrangements", criterion4, 0.0},
      {"type-A statistics", criterion5, 0.0},
      {"bijection psi", criterion6, 0.0},
      {"series identities", criterion7, 10.0},
      {"type-A model against E(q, lambda)", criterion8, 0.0},
      {"property suites", criterion9, 0.0}};
  return list;
}

bool run(std::size_t k) {
  const Criterion& crit = criteria().at(k - 1);
  std::cout << "criterion " << k << ": " << crit.title << '\n';
  Checker c;
  const auto start = std::chrono::steady_clock::now();
  try {
    crit.run(c);
  } catch (const std::exception& e) {
    c.check(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (crit.limit_seconds > 0) {
    std::ostringstream os;
    os << "runtime " << secs << " s < " << crit.limit_seconds << " s";
    c.check(secs < crit.limit_seconds, os.str());
  }
  std::cout << "criterion " << k << ": " << (c.passed() ? "PASS" : "FAIL") << '\n';
  return c.passed();
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: acceptance <1.." << criteria().size() << "|all>\n";
    return 2;
  }
  const std::string arg = argv[1];
  if (arg == "all") {
    bool all = true;
    for (std::size_t k = 1; k <= criteria().size(); ++k) all = run(k) && all;
    return all ? 0 : 1;
  }
  const long k = std::strtol(arg.c_str(), nullptr, 10);
  if (k < 1 || static_cast<std::size_t>(k) > criteria().size()) {
    std::cerr << "unknown criterion " << arg << '\n';
    return 2;
  }
  return run(static_cast<std::size_t>(k)) ? 0 : 1;
}
