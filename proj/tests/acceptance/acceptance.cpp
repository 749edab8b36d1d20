// Acceptance gate: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "grcat/filtration.hpp"
#include "grcat/generator.hpp"
#include "grcat/measure.hpp"
#include "grcat/render.hpp"
#include "grcat/simpleminded.hpp"
#include "grcat/theorems.hpp"
#include "oracles.hpp"

using namespace grcat;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

std::string bundled(const std::string& name) {
  return std::string(GRCAT_SOURCE_DIR) + "/fixtures/" + name;
}

Outcome golden_table() {
  Outcome o;
  const CategorySpec fe = load_spec(bundled("final-example.grcat.json"));
  const MeasureTable t = gr_table(fe);
  const std::vector<Length> lengths{1, 1, 1, 2, 2, 3};
  const std::vector<Chain> measures{{1}, {1}, {1}, {1, 2}, {1, 2}, {1, 2, 3}};
  o.require(fe.size() == 6, "expected 6 objects");
  for (Index i = 0; i < fe.size() && o.ok; ++i) {
    o.require(fe.theta(i) == lengths[i], "length of " + fe.id(i));
    o.require(t.measures[i] == measures[i], "measure of " + fe.id(i) + " is " + t.measures[i].str());
  }
  o.require(t.gr_chain == std::vector<Chain>{{1}, {1, 2}, {1, 2, 3}}, "GR chain");
  const std::string rendered = render_measure_table(fe, t, Format::table);
  o.require(rendered ==
                "object  length  GR measure\n"
                "P1m1    1       {1}\n"
                "S3      1       {1}\n"
                "S2      1       {1}\n"
                "I2m1    2       {1,2}\n"
                "P2      2       {1,2}\n"
                "S1m1    3       {1,2,3}\n"
                "GR chain: {1} < {1,2} < {1,2,3}\n",
            "rendered table differs:\n" + rendered);
  return o;
}

Outcome window_signature() {
  Outcome o;
  std::size_t previous = 0;
  std::ostringstream seen;
  for (int w = 1; w <= 3; ++w) {
    const CategorySpec db = load_spec(bundled("db-window-" + std::to_string(w) + ".grcat.json"));
    const BrickSet gens = theta_infinity(db);
    const FiltResult r = filt_closure(db, gens.members);
    Length max_l = 0;
    for (Index i = 0; i < db.size(); ++i) {
      const auto l = r.length(ObjectRef::single(i));
      o.require(l.has_value(), db.id(i) + " not reached in window " + std::to_string(w));
      if (l) max_l = std::max(max_l, *l);
    }
    o.require(max_l <= 3, "l_X = " + std::to_string(max_l) + " in window " + std::to_string(w));
    o.require(db.size() > previous, "object count did not grow at window " + std::to_string(w));
    previous = db.size();
    seen << (w > 1 ? ", " : "") << "w=" << w << ": " << db.size() << " objects, max l_X " << max_l;
  }
  if (o.ok) o.detail = seen.str();
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  std::size_t specs = 0;
  auto compare = [&](const CategorySpec& spec, std::size_t max_objects) {
    ++specs;
    const auto dp = gr_measures(spec);
    for (Index m = 0; m < spec.size() && o.ok; ++m) {
      o.require(dp[m] == gr_measure_bruteforce(spec, m, max_objects),
                spec.name + ": " + spec.id(m));
    }
  };
  compare(gen::fixture_final_example(), 20);
  for (int w = 1; w <= 3; ++w) compare(gen::fixture_db_window(w), 64);
  for (int n = 1; n <= 4; ++n) compare(gen::generate_an(n), 20);
  std::mt19937_64 rng(20240601);
  for (int k = 0; k < 250; ++k) compare(oracle::random_spec(rng, 10), 20);
  if (o.ok) o.detail = std::to_string(specs) + " specs";
  return o;
}

Outcome order_axioms() {
  Outcome o;
  const auto chains = oracle::all_chains(6, 4);
  for (const auto& x : chains) {
    for (const auto& y : chains) {
      const bool leq = chain_leq(x, y);
      o.require(leq == (oracle::dyadic(x) <= oracle::dyadic(y)), x.str() + " vs " + y.str());
      o.require(leq || chain_leq(y, x), "not total at " + x.str() + ", " + y.str());
      o.require(!(leq && chain_leq(y, x)) || x == y, "not antisymmetric at " + x.str());
      if (!leq) continue;
      for (const auto& z : chains) {
        if (chain_leq(y, z) && !chain_leq(x, z)) {
          o.require(false, "not transitive at " + x.str() + ", " + y.str() + ", " + z.str());
        }
      }
    }
  }
  if (o.ok) o.detail = std::to_string(chains.size()) + " chains";
  return o;
}

Outcome axiom_suites() {
  Outcome o;
  std::vector<CategorySpec> positives{gen::fixture_final_example()};
  for (int w = 1; w <= 3; ++w) positives.push_back(gen::fixture_db_window(w));
  for (int n = 1; n <= 4; ++n) positives.push_back(gen::generate_an(n));
  for (const auto& spec : positives) {
    const Report all = check_all(spec);
    for (const auto& c : all.checks) {
      o.require(c.status != CheckStatus::fail, spec.name + " " + c.id + ": " + c.witness);
    }
  }
  auto fails = [&](const Report& r, const std::string& id, const std::string& label) {
    const Check* c = r.find(id);
    o.require(c != nullptr && c->status == CheckStatus::fail && !c->witness.empty(),
              label + " did not fail with a witness");
  };
  const CategorySpec fe = gen::fixture_final_example();
  fails(check_gr_axioms(oracle::corrupted_gr_spec()), "GR2", "gr-axioms (corrupted spec)");
  fails(check_gr_axioms(fe, oracle::swapped_final_measures(fe)), "GR1", "gr-axioms (swapped table)");
  fails(check_main_property(oracle::main_property_control()), "measure-bound", "main-property");
  fails(check_ext_bound(oracle::ext_bound_control()), "ext-bound", "ext-bound");
  fails(check_small_lemmas(oracle::small_lemmas_control()), "unit-subobject-conflation",
        "small-lemmas");
  if (o.ok) o.detail = std::to_string(positives.size()) + " positive specs, 5 negative controls";
  return o;
}

Outcome generator_cross_check() {
  Outcome o;
  std::size_t pairs = 0;
  for (int n = 1; n <= 3; ++n) {
    const CategorySpec an = gen::generate_an(n);
    const auto ints = gen::intervals(n);
    for (Index c = 0; c < ints.size(); ++c) {
      for (Index a = 0; a < ints.size(); ++a) {
        ++pairs;
        const int counted =
            oracle::ext_dim_bruteforce(gen::interval_rep(n, ints[c]), gen::interval_rep(n, ints[a]));
        o.require((*an.ext)(c, a) == static_cast<Dim>(counted),
                  "Ext(" + ints[c].id() + ", " + ints[a].id() + ")");
      }
    }
  }
  const CategorySpec a3 = gen::generate_an(3);
  const CategorySpec fe = gen::fixture_final_example();
  const auto ma = gr_measures(a3);
  const auto mf = gr_measures(fe);
  for (const auto& [f, a] : oracle::final_example_renaming()) {
    o.require(mf[fe.require(f)] == ma[a3.require(a)], "measure of " + f + " vs " + a);
    o.require(fe.theta(fe.require(f)) == a3.theta(a3.require(a)), "length of " + f + " vs " + a);
  }
  o.require(gr_table(fe).gr_chain == gr_table(a3).gr_chain, "GR chains differ");
  if (o.ok) o.detail = std::to_string(pairs) + " Ext pairs";
  return o;
}

Outcome theta_tower() {
  Outcome o;
  const CategorySpec fe = load_spec(bundled("final-example.grcat.json"));
  const BrickSet inf = theta_infinity(fe);
  std::vector<std::string> ids;
  for (Index i : inf.members) ids.push_back(fe.id(i));
  o.require(ids == std::vector<std::string>{"P1m1", "S3", "S2"}, "Theta_inf members");
  o.require(inf.semibrick, "not a semibrick");
  o.require(inf.sms == Tristate::yes, "not a simple-minded system");
  const FiltResult r = filt_closure(fe, inf.members);
  for (Index i = 0; i < fe.size(); ++i) {
    o.require(r.length(ObjectRef::single(i)) == fe.theta(i), "l_X differs from theta at " + fe.id(i));
  }
  return o;
}

struct Criterion {
  int number;
  std::string name;
  double limit_seconds;  // 0: no limit
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "golden GR table of the final example", 0.1, golden_table},
      {2, "db-window: l_X <= 3 while the object count grows", 0.5, window_signature},
      {3, "DP measure equals brute force", 10.0, oracle_equivalence},
      {4, "chain order is total and matches the dyadic encoding", 0.0, order_axioms},
      {5, "axiom suites pass; negative controls fail with witnesses", 5.0, axiom_suites},
      {6, "Euler-form Ext equals counted extensions; A_3 table matches", 0.0, generator_cross_check},
      {7, "Theta tower of the final example", 0.0, theta_tower},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.ok = false;
      out.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (out.ok && c.limit_seconds > 0 && secs >= c.limit_seconds) {
      out.ok = false;
      out.detail = "too slow";
    }
    if (!out.ok) ++failures;
    std::cout << (out.ok ? "PASS" : "FAIL") << "  criterion " << c.number << ": " << c.name << "  ["
              << std::fixed << std::setprecision(3) << secs << " s";
    if (c.limit_seconds > 0) std::cout << " < " << c.limit_seconds << " s";
    std::cout << "]";
    if (!out.detail.empty()) std::cout << "  " << out.detail;
    std::cout << "\n";
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
