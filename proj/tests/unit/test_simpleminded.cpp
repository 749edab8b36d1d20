#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "grcat/generator.hpp"
#include "grcat/simpleminded.hpp"
#include "oracles.hpp"

using namespace grcat;

namespace {

std::vector<std::string> names(const CategorySpec& spec, const std::vector<Index>& members) {
  std::vector<std::string> out;
  for (Index i : members) out.push_back(spec.id(i));
  return out;
}

}  // namespace

TEST_CASE("final example tower") {
  const CategorySpec fe = gen::fixture_final_example();
  const std::vector<std::string> simples{"P1m1", "S3", "S2"};
  CHECK(names(fe, theta_one(fe)) == simples);
  CHECK(names(fe, theta_n(fe, 1)) == simples);
  CHECK(names(fe, theta_n(fe, 2)) == simples);
  CHECK(names(fe, theta_n(fe, 3)) == simples);
  const BrickSet inf = theta_infinity(fe);
  CHECK(names(fe, inf.members) == simples);
  CHECK(inf.semibrick);
  CHECK(inf.sms == Tristate::yes);
  CHECK(is_finite_type(fe));
}

TEST_CASE("orthogonal objects of larger length join the tower") {
  // Two blocks: S (1) < M (2), and a separate brick T of length 2.
  CategorySpec spec = make_spec("two-blocks", {{"S", 1}, {"M", 2}, {"T", 2}});
  spec.hom(0, 1) = 1;
  spec.inflations.push_back({0, ObjectRef::single(1), ""});
  spec.conflations.push_back({ObjectRef{0}, ObjectRef{1}, ObjectRef{0}, true, ""});
  spec.metadata.complete = true;
  CHECK(names(spec, theta_one(spec)) == std::vector<std::string>{"S"});
  CHECK(names(spec, theta_n(spec, 2)) == std::vector<std::string>{"S", "T"});
  const BrickSet inf = theta_infinity(spec);
  CHECK(inf.semibrick);
  CHECK(inf.sms == Tristate::yes);
  CHECK_FALSE(is_finite_type(spec));
}

TEST_CASE("semibrick and sms status") {
  const CategorySpec fe = gen::fixture_final_example();
  CHECK(is_semibrick(fe, {fe.require("P1m1"), fe.require("S2")}));
  CHECK_FALSE(is_semibrick(fe, {fe.require("S3"), fe.require("P2")}));

  CategorySpec loose = fe;
  loose.metadata.complete = false;
  CHECK(theta_infinity(loose).sms == Tristate::unknown);

  CategorySpec fat = fe;
  fat.hom(0, 0) = 2;
  const BrickSet b = theta_infinity(fat);
  CHECK_FALSE(b.semibrick);
  CHECK(b.sms == Tristate::no);

  CHECK(std::string(to_string(Tristate::yes)) == "true");
  CHECK(std::string(to_string(Tristate::unknown)) == "unknown");
}

TEST_CASE("mod kA_n: the simples form a simple-minded system") {
  for (int n = 1; n <= 4; ++n) {
    const CategorySpec an = gen::generate_an(n);
    const BrickSet inf = theta_infinity(an);
    CHECK(inf.members.size() == static_cast<std::size_t>(n));
    CHECK(inf.sms == Tristate::yes);
    CHECK(is_finite_type(an));
  }
}

TEST_CASE("empty category") {
  CHECK_THROWS_AS(theta_one(make_spec("empty", {})), SpecError);
}
