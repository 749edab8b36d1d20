#include "grcat/filtration.hpp"

#include <algorithm>
#include <sstream>

#include "grcat/simpleminded.hpp"

namespace grcat {

std::optional<Length> FiltResult::length(const ObjectRef& m) const {
  auto it = reachable.find(m);
  if (it == reachable.end()) return std::nullopt;
  return it->second;
}

std::set<ObjectRef> default_universe(const CategorySpec& spec) {
  std::set<ObjectRef> universe{ObjectRef()};
  for (Index i = 0; i < spec.size(); ++i) universe.insert(ObjectRef::single(i));
  for (const auto& cf : spec.conflations) {
    universe.insert(cf.a);
    universe.insert(cf.b);
    universe.insert(cf.c);
  }
  return universe;
}

FiltResult filt_closure(const CategorySpec& spec, const std::vector<Index>& gens,
                        std::optional<std::set<ObjectRef>> universe, std::size_t max_universe) {
  FiltResult result;
  result.universe = universe ? std::move(*universe) : default_universe(spec);
  result.universe.insert(ObjectRef());
  if (result.universe.size() > max_universe) {
    throw SizeGuardError("filtration universe has " + std::to_string(result.universe.size()) +
                         " objects, limit " + std::to_string(max_universe));
  }
  auto is_gen = [&](Index i) { return std::find(gens.begin(), gens.end(), i) != gens.end(); };

  // Every filtration step has unit cost, so the least fixed point is a
  // breadth-first search from zero over the step relation a -> b.
  std::map<ObjectRef, std::vector<ObjectRef>> steps;
  for (const auto& cf : spec.conflations) {
    if (!cf.c.is_indecomposable() || !is_gen(cf.c.summands()[0])) continue;
    if (!result.universe.contains(cf.a) || !result.universe.contains(cf.b)) continue;
    steps[cf.a].push_back(cf.b);
  }
  for (const ObjectRef& b : result.universe) {
    const auto& s = b.summands();
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (k > 0 && s[k] == s[k - 1]) continue;
      if (!is_gen(s[k])) continue;
      ObjectRef a = b.without_one(s[k]);
      if (result.universe.contains(a)) steps[a].push_back(b);
    }
  }

  std::vector<ObjectRef> frontier{ObjectRef()};
  result.reachable[ObjectRef()] = 0;
  for (Length round = 1; !frontier.empty(); ++round) {
    std::vector<ObjectRef> next;
    for (const ObjectRef& a : frontier) {
      auto it = steps.find(a);
      if (it == steps.end()) continue;
      for (const ObjectRef& b : it->second) {
        if (result.reachable.emplace(b, round).second) next.push_back(b);
      }
    }
    if (!next.empty()) {
      std::ostringstream line;
      line << "round " << round << ":";
      for (const auto& b : next) line << " " << render_object(spec, b);
      result.frontier_log.push_back(line.str());
    }
    frontier = std::move(next);
  }
  return result;
}

XLength x_length(const FiltResult& closure, const ObjectRef& m) {
  XLength out;
  if (!closure.universe.contains(m)) {
    out.status = XLength::Status::outside_universe;
  } else if (auto l = closure.length(m)) {
    out.status = XLength::Status::in_filt;
    out.value = *l;
  }
  return out;
}

XLength x_length(const CategorySpec& spec, const std::vector<Index>& gens, const ObjectRef& m) {
  return x_length(filt_closure(spec, gens), m);
}

Report check_lx_is_length_function(const CategorySpec& spec, const std::vector<Index>& gens) {
  Report report;
  report.suite = "lx-length-function";

  CheckBuilder semibrick("generators-semibrick");
  semibrick.expect(is_semibrick(spec, gens), [] {
    return std::string("generators are not pairwise Hom-orthogonal bricks");
  });
  report.checks.push_back(std::move(semibrick).done());

  CheckBuilder complete("table-complete");
  if (spec.metadata.complete) {
    complete.ok();
  } else {
    complete.skip("conflation table not marked complete");
  }
  report.checks.push_back(std::move(complete).done());

  const FiltResult closure = filt_closure(spec, gens);

  CheckBuilder zero("zero-iff-zero");
  for (const auto& [m, l] : closure.reachable) {
    zero.expect((l == 0) == m.is_zero(), [&, &m = m, l = l] {
      return render_object(spec, m) + " has l = " + std::to_string(l);
    });
  }
  report.checks.push_back(std::move(zero).done());

  CheckBuilder subadditive("subadditive");
  for (const auto& cf : spec.conflations) {
    auto la = closure.length(cf.a);
    auto lb = closure.length(cf.b);
    auto lc = closure.length(cf.c);
    if (!la || !lb || !lc) continue;
    subadditive.expect(*lb <= *la + *lc, [&] {
      std::ostringstream os;
      os << "(" << render_object(spec, cf.a) << ", " << render_object(spec, cf.b) << ", "
         << render_object(spec, cf.c) << "): l(b) = " << *lb << " > " << *la << " + " << *lc;
      return os.str();
    });
  }
  report.checks.push_back(std::move(subadditive).done());

  CheckBuilder coverage("coverage");
  std::vector<std::string> missing;
  for (const auto& m : closure.universe) {
    if (closure.reachable.contains(m)) {
      coverage.ok();
    } else {
      missing.push_back(render_object(spec, m));
    }
  }
  if (!missing.empty()) {
    std::string list;
    for (std::size_t k = 0; k < missing.size() && k < 8; ++k) list += (k ? ", " : "") + missing[k];
    if (missing.size() > 8) list += ", ...";
    coverage.skip(std::to_string(missing.size()) + " universe objects not reached: " + list);
  }
  report.checks.push_back(std::move(coverage).done());

  report.finalize();
  return report;
}

}  // namespace grcat
