#include "doctest.h"

#include <string>

#include "toric/error.hpp"
#include "toric/fan.hpp"
#include "toric/io.hpp"

using namespace toric;

namespace {

Fan appendix_fan() { return load_fan(std::string(TORIC_DATA_DIR) + "/appendix_a_fan.json"); }
Fan p1_4_fan() { return load_fan(std::string(TORIC_DATA_DIR) + "/p1_4_fan.json"); }

Fan p2_fan() {
  return Fan(2, {make_vector({1, 0}), make_vector({0, 1}), make_vector({-1, -1})},
             {{0, 1}, {1, 2}, {0, 2}});
}

std::vector<std::int64_t> eulerian_row(int n) {
  std::vector<std::int64_t> row(static_cast<std::size_t>(n), 0);
  std::vector<int> p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
  do {
    int d = 0;
    for (int i = 0; i + 1 < n; ++i) d += p[static_cast<std::size_t>(i)] > p[static_cast<std::size_t>(i + 1)];
    ++row[static_cast<std::size_t>(d)];
  } while (std::next_permutation(p.begin(), p.end()));
  return row;
}

}  // namespace

TEST_CASE("appendix fan fixture") {
  Fan f = appendix_fan();
  CHECK(f.rays().size() == 72);
  CHECK(f.maximal_cones().size() == 140);
  FanReport r = validate(f);
  CHECK(r.simplicial);
  CHECK(r.smooth);
  CHECK(r.complete);
  CHECK(f_vector(f) == FVector{1, 72, 210, 140});
  CHECK(betti_numbers(f) == GradedCount({1, 69, 69, 1}));
}

TEST_CASE("(P1)^4 fan") {
  Fan f = p1_4_fan();
  FanReport r = validate(f);
  CHECK(r.smooth);
  CHECK(r.complete);
  CHECK(f_vector(f) == FVector{1, 8, 24, 32, 16});
  CHECK(betti_numbers(f) == GradedCount({1, 4, 6, 4, 1}));
}

TEST_CASE("projective plane and non-smooth cones") {
  CHECK(f_vector(p2_fan()) == FVector{1, 3, 3});
  CHECK(betti_numbers(p2_fan()) == GradedCount({1, 1, 1}));

  Fan single(2, {make_vector({1, 0}), make_vector({1, 2})}, {{0, 1}});
  FanReport r = validate(single);
  CHECK(r.simplicial);
  CHECK_FALSE(r.smooth);
  CHECK_FALSE(r.complete);
  CHECK_THROWS_AS(betti_numbers(single), ValidationError);
}

TEST_CASE("fan construction errors") {
  CHECK_THROWS_AS(Fan(2, {make_vector({2, 0})}, {{0}}), ValidationError);
  CHECK_THROWS_AS(Fan(2, {make_vector({1, 0})}, {{3}}), ValidationError);
  CHECK_THROWS_AS(Fan(2, {make_vector({1, 0}), make_vector({1, 0})}, {{0}, {1}}), ValidationError);
  CHECK_THROWS_AS(Fan(2, {make_vector({1, 0}), make_vector({0, 1})}, {{0}}), ValidationError);
}

TEST_CASE("completeness detects overlapping and missing cones") {
  // Two cones on the same side of the ray (1,0).
  Fan overlap(2, {make_vector({1, 0}), make_vector({0, 1}), make_vector({1, 1}), make_vector({-1, -1})},
              {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  CHECK_FALSE(validate(overlap).complete);
  Fan missing(2, {make_vector({1, 0}), make_vector({0, 1}), make_vector({-1, -1})}, {{0, 1}, {1, 2}});
  CHECK_FALSE(validate(missing).complete);
}

TEST_CASE("equal sign property") {
  Fan f = appendix_fan();
  CHECK(equal_sign_holds(f, make_vector({1, 0, 2})));
  CHECK(equal_sign_holds(f, make_vector({0, 0, 0})));
  // Pairings of (1,0,2) with r6, r53, r69.
  CHECK(dot(make_vector({1, 0, 2}), f.ray(5)) == 0);
  CHECK(dot(make_vector({1, 0, 2}), f.ray(52)) == 1);
  CHECK(dot(make_vector({1, 0, 2}), f.ray(68)) == 4);

  Fan mixed(2, {make_vector({1, 0}), make_vector({-1, 1}), make_vector({0, -1})},
            {{0, 1}, {1, 2}, {0, 2}});
  CHECK_FALSE(equal_sign_holds(mixed, make_vector({1, 0})));
  CHECK_THROWS_AS(equal_sign_holds(mixed, make_vector({1, 0, 0})), MathError);
}

TEST_CASE("subfan restriction") {
  Fan f = appendix_fan();
  SUBCASE("trivial lattice gives the fan itself") {
    SubFan s = subfan(f, Sublattice(3));
    CHECK(s.fan.rays().size() == 72);
    CHECK(betti_numbers(s.fan) == betti_numbers(f));
  }
  SUBCASE("full lattice gives a point") {
    SubFan s = subfan(f, Sublattice::full(3));
    CHECK(s.fan.ambient_dim() == 0);
    CHECK(betti_numbers(s.fan) == GradedCount({1}));
  }
  SUBCASE("rank-2 layer with two rays") {
    Sublattice gamma(IntegerMatrix{{1, 0, 2}, {0, 1, -1}});
    SubFan s = subfan(f, gamma);
    CHECK(betti_numbers(s.fan) == GradedCount({1, 1}));
    CHECK(s.parent_rays == std::vector<std::size_t>{6, 14});
    auto basis = cohomology_basis(s.fan);
    REQUIRE(basis.size() == 2);
    CHECK(to_string(basis[1][0]) == "C1");
  }
  SUBCASE("non-split lattice is rejected") {
    CHECK_THROWS_AS(subfan(f, Sublattice(IntegerMatrix{{2, 0, 0}})), ValidationError);
  }
}

TEST_CASE("subfan detects equal-sign violations") {
  Fan mixed(2, {make_vector({1, 0}), make_vector({-1, 1}), make_vector({0, -1})},
            {{0, 1}, {1, 2}, {0, 2}});
  CHECK_THROWS_AS(subfan(mixed, Sublattice(IntegerMatrix{{1, 1}})), ValidationError);
}

TEST_CASE("type A Weyl fan") {
  CHECK_THROWS_AS(weyl_fan_A(0), ValidationError);
  CHECK(betti_numbers(weyl_fan_A(2)) == GradedCount({1, 1}));
  CHECK(betti_numbers(weyl_fan_A(3)) == GradedCount({1, 4, 1}));
  Fan a4 = weyl_fan_A(4);
  CHECK(a4.rays().size() == 14);
  CHECK(a4.maximal_cones().size() == 24);
  for (int n = 1; n <= 7; ++n) {
    Fan w = weyl_fan_A(static_cast<std::size_t>(n));
    CHECK(validate(w).smooth);
    CHECK(validate(w).complete);
    CHECK(betti_numbers(w).coefficients() == eulerian_row(n));
  }
}

TEST_CASE("Betti sums and palindromicity") {
  for (const Fan& f : {appendix_fan(), p1_4_fan(), p2_fan(), weyl_fan_A(4)}) {
    GradedCount b = betti_numbers(f);
    CHECK(b.total() == static_cast<std::int64_t>(f.maximal_cones().size()));
    CHECK(b.is_palindromic());
  }
}

TEST_CASE("cohomology basis ranks") {
  for (const Fan& f : {p2_fan(), p1_4_fan(), weyl_fan_A(4), appendix_fan()}) {
    auto basis = cohomology_basis(f);
    GradedCount b = betti_numbers(f);
    REQUIRE(basis.size() == f.ambient_dim() + 1);
    for (std::size_t k = 0; k < basis.size(); ++k)
      CHECK(static_cast<std::int64_t>(basis[k].size()) == b[k]);
    CHECK(basis[0] == std::vector<RayMonomial>{RayMonomial{}});
  }
  auto p2 = cohomology_basis(p2_fan());
  CHECK(to_string(p2[1][0]) == "C1");
  CHECK(to_string(p2[2][0]) == "C1*C2");
}

TEST_CASE("fan JSON round trip") {
  Fan f = p2_fan();
  CHECK(fan_from_json(fan_to_json(f)) == f);
  CHECK_THROWS_AS(fan_from_json(Json::parse(R"({"rays": []})")), ParseError);
}
