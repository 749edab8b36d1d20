#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "grcat/generator.hpp"
#include "grcat/measure.hpp"
#include "oracles.hpp"

using namespace grcat;
using namespace grcat::gen;

TEST_CASE("intervals and their representations") {
  const auto ints = intervals(3);
  REQUIRE(ints.size() == 6);
  CHECK(ints[0].id() == "[1,1]");
  CHECK(ints[3].id() == "[1,2]");
  CHECK(ints[5].id() == "[1,3]");
  const MatrixRep r = interval_rep(3, {1, 2});
  CHECK(r.dims == std::vector<int>{1, 1, 0});
  CHECK(r.path(0, 1).rank() == 1);
  CHECK(r.path(0, 2).rank() == 0);
}

TEST_CASE("hom dimensions agree with brute-force enumeration") {
  for (int n = 1; n <= 3; ++n) {
    std::vector<MatrixRep> reps;
    for (const auto& m : intervals(n)) reps.push_back(interval_rep(n, m));
    // Small decomposables as well.
    reps.push_back(direct_sum({reps.front(), reps.back()}));
    reps.push_back(direct_sum({reps.front(), reps.front()}));
    for (const auto& v : reps) {
      for (const auto& w : reps) REQUIRE(hom_dim(v, w) == oracle::hom_dim_bruteforce(v, w));
    }
  }
}

TEST_CASE("Euler-form ext dimensions agree with counted extensions") {
  for (int n = 1; n <= 3; ++n) {
    const CategorySpec an = generate_an(n);
    const auto ints = intervals(n);
    for (Index c = 0; c < ints.size(); ++c) {
      for (Index a = 0; a < ints.size(); ++a) {
        INFO(ints[c].id() << " " << ints[a].id());
        REQUIRE((*an.ext)(c, a) == static_cast<Dim>(oracle::ext_dim_bruteforce(
                                       interval_rep(n, ints[c]), interval_rep(n, ints[a]))));
      }
    }
  }
}

TEST_CASE("small cases") {
  const CategorySpec a1 = generate_an(1);
  CHECK(a1.size() == 1);
  CHECK(a1.hom(0, 0) == 1);
  CHECK(a1.conflations.empty());

  const CategorySpec a2 = generate_an(2);
  CHECK(a2.size() == 3);
  CHECK((*a2.ext)(a2.require("[1,1]"), a2.require("[2,2]")) == 1);
  CHECK((*a2.ext)(a2.require("[2,2]"), a2.require("[1,1]")) == 0);
  std::vector<Conflation> indecomposable_terms;
  for (const auto& cf : a2.conflations) {
    CHECK(cf.stable);
    if (cf.a.is_indecomposable() && cf.b.is_indecomposable() && cf.c.is_indecomposable()) {
      indecomposable_terms.push_back(cf);
    }
  }
  REQUIRE(indecomposable_terms.size() == 1);
  CHECK(indecomposable_terms[0].a == a2.object({"[2,2]"}));
  CHECK(indecomposable_terms[0].b == a2.object({"[1,2]"}));
  CHECK(indecomposable_terms[0].c == a2.object({"[1,1]"}));

  CHECK(has_injective_hom(interval_rep(2, {2, 2}), interval_rep(2, {1, 2})));
  CHECK_FALSE(has_injective_hom(interval_rep(2, {1, 2}), interval_rep(2, {2, 2})));
  CHECK(generate_an(3).size() == 6);
}

TEST_CASE("multiplicities and subrepresentations") {
  const MatrixRep sum = direct_sum({interval_rep(3, {1, 3}), interval_rep(3, {2, 2}),
                                    interval_rep(3, {2, 2})});
  const auto mult = interval_multiplicities(3, [&](int i, int j) { return sum.path(i, j).rank(); });
  CHECK(mult.size() == 2);
  CHECK(mult.at({1, 3}) == 1);
  CHECK(mult.at({2, 2}) == 2);

  int count = 0;
  for_each_subrep(interval_rep(2, {1, 2}), [&](const auto&) { ++count; });
  CHECK(count == 3);
  CHECK(euler_form({1, 1}, {0, 1}) == 0);
  CHECK(euler_form({0, 1}, {1, 1}) == 1);
}

TEST_CASE("mod kA_3 matches the final example up to renaming") {
  const CategorySpec a3 = generate_an(3);
  const CategorySpec fe = fixture_final_example();
  const auto ma = gr_measures(a3);
  const auto mf = gr_measures(fe);
  for (const auto& [f, a] : oracle::final_example_renaming()) {
    INFO(f << " ~ " << a);
    CHECK(mf[fe.require(f)] == ma[a3.require(a)]);
    CHECK(fe.theta(fe.require(f)) == a3.theta(a3.require(a)));
    for (const auto& [g, b] : oracle::final_example_renaming()) {
      CHECK(fe.hom(fe.require(f), fe.require(g)) == a3.hom(a3.require(a), a3.require(b)));
    }
  }
  CHECK(gr_table(fe).gr_chain == gr_table(a3).gr_chain);
}

TEST_CASE("ZA_3 coordinates") {
  CHECK(za3_name({4, 1}) == "P1m1");
  CHECK(za3_name({6, 1}) == "S3");
  CHECK(za3_name({5, 2}) == "I2m1");
  CHECK(za3_name({6, 3}) == "S1m1");
  CHECK(za3_name({14, 1}) == "S3p2");
  CHECK(za3_name({12, 1}) == "P1p1");
  CHECK_THROWS_AS(za3_name({5, 1}), std::invalid_argument);
  CHECK(za3_shift({6, 1}).column == 10);
  CHECK(za3_shift({6, 1}).row == 3);
  CHECK(za3_hom({4, 1}, {5, 2}) == 1);
  CHECK(za3_hom({4, 1}, {6, 3}) == 1);
  CHECK(za3_hom({4, 1}, {6, 1}) == 0);
  CHECK(za3_hom({6, 3}, {8, 1}) == 1);
  CHECK(za3_hom({6, 3}, {9, 2}) == 0);
}

TEST_CASE("db-window shape") {
  for (int w = 1; w <= 3; ++w) {
    const CategorySpec db = fixture_db_window(w);
    CHECK(db.size() == static_cast<std::size_t>(12 * w));
    CHECK(db.metadata.models_infinite);
    CHECK(db.name == "db-window-" + std::to_string(w));
    for (Index i = 0; i < db.size(); ++i) CHECK(db.theta(i) <= 3);
    CHECK(db.theta(db.require("I2")) == 2);
    CHECK(db.theta(db.require("S1m1")) == 3);
    CHECK(db.theta(db.require("S3")) == 1);
  }
}

TEST_CASE("guards") {
  CHECK_THROWS_AS(generate_an(0), SizeGuardError);
  CHECK_THROWS_AS(generate_an(7), SizeGuardError);
  CHECK_THROWS_AS(generate_an(3, AnOptions{2}), SizeGuardError);
  CHECK_THROWS_AS(fixture_db_window(0), SizeGuardError);
  CHECK_THROWS_AS(fixture_db_window(5, 4), SizeGuardError);
  CHECK_THROWS_AS(fixture("nope"), std::invalid_argument);
}

TEST_CASE("bundled fixtures are the generator's canonical output") {
  auto read = [](const std::string& name) {
    std::ifstream in(std::string(GRCAT_SOURCE_DIR) + "/fixtures/" + name, std::ios::binary);
    REQUIRE(in);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  };
  CHECK(read("final-example.grcat.json") == render_spec(fixture_final_example()));
  for (int w = 1; w <= 3; ++w) {
    CHECK(read("db-window-" + std::to_string(w) + ".grcat.json") ==
          render_spec(fixture_db_window(w)));
  }
}
