#include "grcat/theorems.hpp"

#include <algorithm>
#include <sstream>

#include "grcat/filtration.hpp"

namespace grcat {

namespace {

std::string describe(const CategorySpec& spec, Index i, const std::vector<Chain>& measures) {
  std::ostringstream os;
  os << spec.id(i) << " (theta " << spec.theta(i) << ", measure " << measures[i] << ")";
  return os.str();
}

std::string describe(const CategorySpec& spec, const Conflation& cf) {
  return "(" + render_object(spec, cf.a) + ", " + render_object(spec, cf.b) + ", " +
         render_object(spec, cf.c) + ")";
}


}  // namespace

Report check_gr_axioms(const CategorySpec& spec, const std::vector<Chain>& m) {
  if (m.size() != spec.size()) throw std::invalid_argument("measure table size mismatch");
  const SubobjectPoset poset = subobject_closure(spec);
  const std::size_t n = spec.size();

  CheckBuilder gr1("GR1");
  CheckBuilder gr2("GR2");
  CheckBuilder gr3("GR3");
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      if (x == y) continue;
      if (poset.lt(x, y)) {
        gr1.expect(chain_leq(m[x], m[y]), [&] {
          return describe(spec, x, m) + " <= " + describe(spec, y, m) +
                 " but measures are not ordered";
        });
      }
      if (x < y && m[x] == m[y]) {
        gr2.expect(spec.theta(x) == spec.theta(y), [&] {
          return describe(spec, x, m) + " and " + describe(spec, y, m) +
                 " share a measure but not a length";
        });
      }
      if (spec.theta(x) >= spec.theta(y)) {
        const bool hypothesis = std::all_of(poset.proper[x].begin(), poset.proper[x].end(),
                                            [&](Index sub) { return chain_less(m[sub], m[y]); });
        if (hypothesis) {
          gr3.expect(chain_leq(m[x], m[y]), [&] {
            return describe(spec, x, m) + " exceeds " + describe(spec, y, m) +
                   " although every proper subobject lies below it";
          });
        }
      }
    }
  }

  Report report;
  report.suite = "gr-axioms";
  report.checks.push_back(std::move(gr1).done());
  report.checks.push_back(std::move(gr2).done());
  report.checks.push_back(std::move(gr3).done());
  report.finalize();
  return report;
}

Report check_gr_axioms(const CategorySpec& spec) {
  return check_gr_axioms(spec, gr_measures(spec));
}

Report check_main_property(const CategorySpec& spec) {
  const std::vector<Chain> m = gr_measures(spec);
  CheckBuilder bound("measure-bound");
  CheckBuilder equality("equality-summand");
  for (const auto& inf : spec.inflations) {
    if (inf.target.is_zero()) continue;
    std::vector<Chain> target_measures;
    for (Index y : inf.target.summands()) target_measures.push_back(m[y]);
    const Chain top = chain_max(target_measures);
    const Index x = inf.sub;
    auto witness = [&] {
      return spec.id(x) + " >-> " + render_object(spec, inf.target) + ": measure " +
             m[x].str() + " vs largest target measure " + top.str();
    };
    bound.expect(chain_leq(m[x], top), witness);
    if (m[x] == top) {
      const bool found = std::any_of(inf.target.summands().begin(), inf.target.summands().end(),
                                     [&](Index y) { return y == x && m[y] == top; });
      equality.expect(found, [&] { return witness() + " (equal, but not a summand)"; });
    }
  }
  Report report;
  report.suite = "main-property";
  report.checks.push_back(std::move(bound).done());
  report.checks.push_back(std::move(equality).done());
  report.finalize();
  return report;
}

Report check_ext_bound(const CategorySpec& spec) {
  CheckBuilder check("ext-bound");
  if (!spec.ext) {
    check.skip("spec carries no ext matrix");
  } else {
    for (const auto& cf : spec.conflations) {
      const auto& s = cf.a.summands();
      for (std::size_t k = 0; k < s.size(); ++k) {
        if (k > 0 && s[k] == s[k - 1]) continue;
        const Index x = s[k];
        const std::size_t mult = cf.a.multiplicity(x);
        const Dim e = spec.ext_dim(cf.c, ObjectRef::single(x));
        if (e >= mult) continue;
        check.expect(cf.b.contains(x), [&] {
          std::ostringstream os;
          os << describe(spec, cf) << ": dim E(" << render_object(spec, cf.c) << ", "
             << spec.id(x) << ") = " << e << " < " << mult << " but " << spec.id(x)
             << " is not a summand of the middle term";
          return os.str();
        });
      }
    }
  }
  Report report;
  report.suite = "ext-bound";
  report.checks.push_back(std::move(check).done());
  report.finalize();
  return report;
}

Report check_small_lemmas(const CategorySpec& spec) {
  const std::vector<Chain> m = gr_measures(spec);
  const std::vector<Index> t1 = theta_one(spec);
  const BrickSet tinf = theta_infinity(spec);
  const Chain unit{1};
  const std::size_t n = spec.size();

  CheckBuilder unit_measure("unit-length-measure");
  CheckBuilder above_unit("above-unit-measure");
  for (Index x = 0; x < n; ++x) {
    if (spec.theta(x) == 1) {
      unit_measure.expect(m[x] == unit, [&] { return describe(spec, x, m); });
    } else if (spec.theta(x) > 1) {
      const bool hit = std::any_of(t1.begin(), t1.end(), [&](Index s) { return spec.hom(s, x) != 0; });
      if (hit) {
        above_unit.expect(chain_less(unit, m[x]), [&] {
          return describe(spec, x, m) + " receives a map from Theta_1 but its measure is not above {1}";
        });
      }
    }
  }

  CheckBuilder minimal("minimal-measure");
  CheckBuilder sub("unit-subobject-conflation");
  CheckBuilder quot("unit-quotient-conflation");
  const bool applicable = tinf.members == t1 && spec.metadata.complete;
  if (!applicable) {
    const std::string why = spec.metadata.complete ? "Theta_1 != Theta_inf"
                                                   : "conflation table not marked complete";
    minimal.skip(why);
    sub.skip(why);
    quot.skip(why);
  } else {
    const Chain least = *std::min_element(m.begin(), m.end(), ChainLess{});
    minimal.expect(least == unit, [&] { return "minimal measure is " + least.str(); });
    for (Index x = 0; x < n; ++x) {
      // X -> X -> 0 and 0 -> X -> X exist for every object.
      if (spec.theta(x) == 1) {
        sub.ok();
        quot.ok();
        continue;
      }
      const ObjectRef self = ObjectRef::single(x);
      bool has_sub = false;
      bool has_quot = false;
      for (const auto& cf : spec.conflations) {
        if (!cf.stable || cf.b != self) continue;
        if (theta_of(spec, cf.a) == 1) has_sub = true;
        if (theta_of(spec, cf.c) == 1) has_quot = true;
      }
      sub.expect(has_sub, [&] {
        return spec.id(x) + " is not the middle term of a stable conflation with first term of length 1";
      });
      quot.expect(has_quot, [&] {
        return spec.id(x) + " is not the middle term of a stable conflation with third term of length 1";
      });
    }
  }

  CheckBuilder monotone("length-strictly-monotone");
  const SubobjectPoset poset = subobject_closure(spec);
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      if (!poset.lt(x, y)) continue;
      monotone.expect(spec.theta(x) < spec.theta(y), [&] {
        return spec.id(x) + " < " + spec.id(y) + " but theta " + std::to_string(spec.theta(x)) +
               " >= " + std::to_string(spec.theta(y));
      });
    }
  }

  Report report;
  report.suite = "small-lemmas";
  for (auto* b : {&unit_measure, &above_unit, &minimal, &sub, &quot, &monotone}) {
    report.checks.push_back(std::move(*b).done());
  }
  report.finalize();
  return report;
}

Report check_all(const CategorySpec& spec) {
  Report all;
  all.suite = "all";
  all.merge(check_ext_bound(spec));
  all.merge(check_gr_axioms(spec));
  all.merge(check_main_property(spec));
  all.merge(check_small_lemmas(spec));
  all.finalize();
  return all;
}

BrauerThrallSummary brauer_thrall_report(const CategorySpec& spec) {
  BrauerThrallSummary out;
  out.indecomposables = spec.size();
  for (const auto& ind : spec.indecomposables) out.max_theta = std::max(out.max_theta, ind.theta);
  out.table = gr_table(spec);
  out.theta_inf = theta_infinity(spec);
  out.finite_type = out.theta_inf.members == theta_one(spec);
  out.models_infinite = spec.metadata.models_infinite;

  const FiltResult closure = filt_closure(spec, out.theta_inf.members);
  Length max_l = 0;
  bool all_reached = true;
  for (Index i = 0; i < spec.size(); ++i) {
    if (auto l = closure.length(ObjectRef::single(i))) {
      max_l = std::max(max_l, *l);
    } else {
      all_reached = false;
    }
  }
  if (all_reached) out.max_filtration_length = max_l;
  out.bounded_length_signature = out.models_infinite && all_reached;

  Report& report = out.report;
  report.suite = "brauer-thrall";
  report.header =
      "On a finite instance the three conditions (finitely many indecomposables, bounded "
      "length, bounded GR chain) always hold together, so this report lists the quantities and "
      "their finite consequences; it does not test the conjecture itself. Instances marked "
      "models_infinite are windows of an infinite-type category.";

  const auto& table = out.table;
  CheckBuilder constant("block-constant-length");
  CheckBuilder top("block-length-is-top");
  for (std::size_t k = 0; k < table.blocks.size(); ++k) {
    const auto& block = table.blocks[k];
    const Length t = spec.theta(block.front());
    constant.expect(std::all_of(block.begin(), block.end(), [&](Index i) { return spec.theta(i) == t; }),
                    [&] { return "block " + table.gr_chain[k].str() + " mixes lengths"; });
    top.expect(table.gr_chain[k].back() == t, [&] {
      return "block " + table.gr_chain[k].str() + " has length " + std::to_string(t);
    });
  }

  CheckBuilder first("first-block-minimal");
  if (!out.finite_type) {
    first.skip("Theta_1 != Theta_inf");
  } else {
    Length least = spec.theta(theta_one(spec).front());
    first.expect(table.gr_chain.front() == Chain{least}, [&] {
      return "first measure is " + table.gr_chain.front().str() + ", expected {" +
             std::to_string(least) + "}";
    });
  }

  CheckBuilder signature("window-signature");
  if (!out.models_infinite) {
    signature.skip("instance does not model an infinite-type category");
  } else {
    signature.expect(out.bounded_length_signature, [&] {
      return std::string("some indecomposable is outside Filt(Theta_inf) in this window");
    });
  }

  report.checks.push_back(std::move(constant).done());
  report.checks.push_back(std::move(top).done());
  report.checks.push_back(std::move(first).done());
  report.checks.push_back(std::move(signature).done());
  report.finalize();
  return out;
}

}  // namespace grcat
