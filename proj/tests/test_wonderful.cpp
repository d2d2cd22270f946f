#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>
#include <string>

#include "toric/error.hpp"
#include "toric/io.hpp"
#include "toric/wonderful.hpp"

using namespace toric;

namespace {

std::string data(const std::string& file) { return std::string(TORIC_DATA_DIR) + "/" + file; }

struct Loaded {
  ArrangementFile file;
  LayerPoset poset;
  BuildingSet g;
  Fan fan;
  std::vector<std::string> names;

  Loaded(const std::string& arr, const std::string& fan_file)
      : file(load_arrangement(data(arr))),
        poset(poset_of_layers(file.arrangement(), file.torus_dim)),
        g(building_set_from(file, poset)),
        fan(load_fan(data(fan_file))),
        names(element_names(file, poset)) {}

  std::size_t member(const std::string& name) const {
    return *g.position_of(poset.require_index(file.named(name)));
  }
  MemberSet members(std::initializer_list<const char*> list) const {
    MemberSet s;
    for (const char* n : list) s.push_back(member(n));
    std::sort(s.begin(), s.end());
    return s;
  }
  std::string label(const MemberSet& s) const {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + names[g.poset_index(s[i])];
    return out + "}";
  }
};

const Loaded& main_example() {
  static const Loaded ex("example_main.json", "appendix_a_fan.json");
  return ex;
}

const Loaded& second_example() {
  static const Loaded ex("example_arr2.json", "p1_4_fan.json");
  return ex;
}

// Fan of (P^1)^d: rays +e_i, -e_i at indices 2i, 2i+1.
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

// All non-torus poset elements.
BuildingSet full_building_set(const LayerPoset& poset) {
  std::vector<std::size_t> members;
  for (std::size_t i = 1; i < poset.size(); ++i) members.push_back(i);
  return BuildingSet(poset, members);
}

}  // namespace

TEST_CASE("building sets and well-connectedness") {
  const Loaded& ex = main_example();
  CHECK(ex.g.size() == 9);
  CHECK(is_well_connected(ex.g).well_connected);
  CHECK(is_well_connected(second_example().g).well_connected);

  BuildingSet pair(ex.poset, {ex.poset.require_index(ex.file.named("K1")), ex.poset.require_index(ex.file.named("K3"))});
  WellConnectedReport r = is_well_connected(pair);
  CHECK_FALSE(r.well_connected);
  CHECK(r.subset == MemberSet{0, 1});
  REQUIRE(r.missing_component.has_value());
  CHECK(r.missing_component->codim() == 2);

  CHECK_THROWS_AS(BuildingSet(ex.poset, {0}), ValidationError);
  CHECK_THROWS_AS(BuildingSet(ex.poset, {1, 1}), ValidationError);
}

TEST_CASE("nested sets of the main example") {
  const Loaded& ex = main_example();
  auto nested = enumerate_nested_sets(ex.g);
  CHECK(nested.size() == 48);
  std::set<MemberSet> all(nested.begin(), nested.end());
  CHECK(all.count({}) == 1);
  for (std::size_t m = 0; m < ex.g.size(); ++m) CHECK(all.count({m}) == 1);
  CHECK(all.count(ex.members({"K1", "K2", "P1"})) == 1);
  CHECK(all.count(ex.members({"K1", "K3"})) == 0);
  CHECK(all.count(ex.members({"K1", "L2", "P1"})) == 1);
  CHECK(all.count(ex.members({"P1", "P3"})) == 0);
  CHECK(all.count(ex.members({"L2", "L3"})) == 0);

  // Closed under subsets.
  for (const MemberSet& s : nested) {
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      MemberSet sub = s;
      sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
      CHECK(all.count(sub) == 1);
    }
  }
}

TEST_CASE("admissible functions of the main example") {
  const Loaded& ex = main_example();
  auto fs = enumerate_admissible(ex.g);
  REQUIRE(fs.size() == 11);
  CHECK(fs[0].support.empty());
  std::multiset<std::string> seen;
  for (const AdmissibleFunction& f : fs) {
    CHECK(is_nested(ex.g, f.support));
    std::string s = ex.label(f.support);
    for (unsigned v : f.values) s += std::to_string(v);
    seen.insert(s);
  }
  std::multiset<std::string> expected{"{}", "{L2}1", "{L3}1", "{P1}1", "{P1}2", "{P2}1", "{P2}2",
                                      "{P3}1", "{P3}2", "{P4}1", "{P4}2"};
  CHECK(seen == expected);

  // Codimension-one members never carry an admissible value.
  CHECK(admissible_bounds(ex.g, {ex.member("K1")}) == std::vector<std::size_t>{1});
  CHECK(admissible_bounds(ex.g, {ex.member("P1")}) == std::vector<std::size_t>{3});
}

TEST_CASE("basis and Poincare polynomial of the main example") {
  const Loaded& ex = main_example();
  WonderfulBasis b = compute_basis(ex.g, ex.fan);
  CHECK(b.poincare == GradedCount({1, 75, 75, 1}));
  CHECK(b.poincare.is_palindromic());
  CHECK(b.elements.size() == 152);
  for (const SupportContribution& row : b.rows) {
    const std::string l = ex.label(row.support);
    if (row.support.empty()) {
      CHECK(row.subfan_betti == GradedCount({1, 69, 69, 1}));
      CHECK(row.contribution == GradedCount({1, 69, 69, 1}));
    } else if (l == "{L2}" || l == "{L3}") {
      CHECK(row.subfan_betti == GradedCount({1, 1}));
      CHECK(row.contribution == GradedCount({0, 1, 1}));
      REQUIRE(row.theta.size() == 2);
      CHECK(row.theta[0].size() == 1);
      CHECK(row.theta[1].size() == 1);
    } else {
      CHECK(l[1] == 'P');
      CHECK(row.subfan_betti == GradedCount({1}));
      CHECK(row.contribution == GradedCount({0, 1, 1}));
    }
  }
  // Table golden: Theta({L2}) = {1, C7}.
  for (const SupportContribution& row : b.rows)
    if (ex.label(row.support) == "{L2}") CHECK(to_string(row.theta[1][0]) == "C7");
  CHECK(rank_via_blowup_recursion(ex.g, ex.fan) == b.poincare);
}

TEST_CASE("second example: admissible functions, basis and blowup oracle") {
  const Loaded& ex = second_example();
  auto nested = enumerate_nested_sets(ex.g);
  CHECK(nested.size() == 26);
  auto fs = enumerate_admissible(ex.g);
  std::multiset<std::string> seen;
  for (const AdmissibleFunction& f : fs) {
    std::string s = ex.label(f.support);
    for (unsigned v : f.values) s += std::to_string(v);
    seen.insert(s);
  }
  // K1 = {z = t = 1} has codimension 2 and belongs to the building set, so it
  // carries f = 1 alone and together with P.
  std::multiset<std::string> expected{"{}",     "{K1}1",   "{L}1",    "{M1}1", "{M1}2", "{M2}1", "{M2}2",
                                      "{P}1",   "{P}2",    "{P}3",    "{L,P}11", "{K1,P}11"};
  CHECK(seen == expected);

  WonderfulBasis b = compute_basis(ex.g, ex.fan);
  CHECK(b.poincare == GradedCount({1, 9, 17, 9, 1}));
  CHECK(rank_via_blowup_recursion(ex.g, ex.fan) == b.poincare);
  for (const SupportContribution& row : b.rows) {
    const std::string l = ex.label(row.support);
    if (l == "{L}") {
      CHECK(row.subfan_betti == GradedCount({1, 2, 1}));
      CHECK(row.contribution == GradedCount({0, 1, 2, 1}));
    }
    if (l == "{P}") CHECK(row.contribution == GradedCount({0, 1, 1, 1}));
    if (l == "{L,P}") CHECK(row.contribution == GradedCount({0, 0, 1}));
  }
}

TEST_CASE("small building sets") {
  const Loaded& ex = second_example();
  const GradedCount base({1, 4, 6, 4, 1});
  CHECK(betti_numbers(ex.fan) == base);

  // A divisorial center changes nothing.
  BuildingSet divisor(ex.poset, {ex.poset.require_index(ex.file.named("K2"))});
  CHECK(enumerate_admissible(divisor).size() == 1);
  CHECK(poincare(divisor, ex.fan) == base);
  CHECK(rank_via_blowup_recursion(divisor, ex.fan) == base);

  // One codimension-2 center Z adds q * Betti(Z).
  BuildingSet line(ex.poset, {ex.poset.require_index(ex.file.named("L"))});
  GradedCount expected = base + GradedCount({1, 2, 1}).shifted(1);
  CHECK(poincare(line, ex.fan) == expected);
  CHECK(rank_via_blowup_recursion(line, ex.fan) == expected);

  // An order that does not refine inclusion is rejected.
  BuildingSet two(ex.poset, {ex.poset.require_index(ex.file.named("K2")), ex.poset.require_index(ex.file.named("L"))});
  CHECK(inclusion_order(two) == std::vector<std::size_t>{1, 0});
  CHECK_THROWS_AS(rank_via_blowup_recursion(two, ex.fan, {0, 1}), MathError);
  CHECK(rank_via_blowup_recursion(two, ex.fan, {1, 0}) == poincare(two, ex.fan));
}

TEST_CASE("dual oracle on random coordinate arrangements") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t d = 3 + static_cast<std::size_t>(trial % 2);
    std::uniform_int_distribution<int> count(2, 4);
    std::uniform_int_distribution<int> coin(0, 1);
    std::vector<Layer> layers;
    const int k = count(rng);
    for (int l = 0; l < k; ++l) {
      std::vector<IntVector> rows;
      std::vector<Rational> phi;
      for (std::size_t i = 0; i < d; ++i) {
        if (coin(rng) && rows.size() + 1 < d) {
          IntVector v(d, 0);
          v[i] = 1;
          rows.push_back(v);
          phi.push_back(Rational(coin(rng), 2));
        }
      }
      if (rows.empty()) {
        IntVector v(d, 0);
        v[static_cast<std::size_t>(l) % d] = 1;
        rows.push_back(v);
        phi.push_back(0);
      }
      layers.emplace_back(IntegerMatrix::from_rows(rows, d), phi);
    }
    LayerPoset poset = poset_of_layers(layers, d);
    BuildingSet g = full_building_set(poset);
    Fan fan = p1_power(d);
    REQUIRE(goodness_check(fan, poset).good);
    REQUIRE(is_well_connected(g).well_connected);
    GradedCount p = poincare(g, fan);
    CHECK_MESSAGE(p == rank_via_blowup_recursion(g, fan), "trial " << trial);
    CHECK(p.is_palindromic());
    for (const AdmissibleFunction& f : enumerate_admissible(g)) CHECK(is_nested(g, f.support));
  }
}

TEST_CASE("presentation of the main example") {
  const Loaded& ex = main_example();
  Presentation p = emit_presentation(ex.g, ex.fan);
  CHECK(p.ray_count == 72);
  CHECK(p.member_count == 9);
  REQUIRE(p.variables.size() == 81);
  CHECK(p.variables[0] == "C1");
  CHECK(p.variables[72] == "T1");
  CHECK(p.variables[80] == "T9");
  CHECK(p.count(GeneratorKind::Linear) == 3);
  CHECK(p.count(GeneratorKind::NestedPair) == count_nested_pairs(ex.g));
  CHECK(p.count(GeneratorKind::EmptyIntersection) == count_empty_intersections(ex.g));
  CHECK(p.count(GeneratorKind::EmptyIntersection) > 0);
  CHECK(p.count(GeneratorKind::StanleyReisner) > 0);
  CHECK(p.count(GeneratorKind::Boundary) > 0);
}

TEST_CASE("presentation invariants") {
  for (const Loaded* ex : {&main_example(), &second_example()}) {
    Presentation p = emit_presentation(ex->g, ex->fan);
    const std::size_t first_t = p.ray_count;
    std::set<std::size_t> members_with_empty_h;
    for (const Generator& gen : p.generators) {
      for (const auto& [m, c] : gen.expand())
        for (const auto& [var, e] : m) CHECK(var < p.variables.size());
      if (gen.kind == GeneratorKind::NestedPair) {
        REQUIRE(gen.member.has_value());
        const Layer& g_layer = ex->g.layer(*gen.member);
        const std::size_t m_dim = gen.m_layer ? gen.m_layer->dim() : ex->poset.torus_dim();
        CHECK(gen.factors.size() == m_dim - g_layer.dim());
        CHECK(gen.t_degree(first_t) == (m_dim - g_layer.dim()) + gen.set.size());
        for (std::size_t h : gen.set) CHECK(ex->g.contained(*gen.member, h));
        if (gen.set.empty()) members_with_empty_h.insert(*gen.member);
        if (gen.m_layer && *gen.m_layer == g_layer) CHECK(gen.factors.empty());
      }
      if (gen.kind == GeneratorKind::Boundary) {
        REQUIRE(gen.member.has_value());
        REQUIRE(gen.ray.has_value());
        bool nonzero = false;
        const auto& basis = ex->g.layer(*gen.member).gamma().basis();
        for (std::size_t r = 0; r < basis.rows(); ++r)
          nonzero = nonzero || dot(basis.row(r), ex->fan.rays()[*gen.ray]) != 0;
        CHECK(nonzero);
      }
      if (gen.kind == GeneratorKind::EmptyIntersection) {
        std::vector<Layer> ls;
        for (std::size_t h : gen.set) ls.push_back(ex->g.layer(h));
        CHECK(intersect_all(ls, ex->poset.torus_dim()).empty());
      }
    }
    CHECK(members_with_empty_h.size() == ex->g.size());
  }
}
