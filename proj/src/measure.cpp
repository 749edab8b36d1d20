#include "grcat/measure.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace grcat {

std::size_t MeasureTable::block_of(Index i) const {
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    if (std::find(blocks[k].begin(), blocks[k].end(), i) != blocks[k].end()) return k;
  }
  throw std::out_of_range("indecomposable not in any block");
}

namespace {

// Kahn's algorithm over the proper-subobject relation.
std::vector<Index> bottom_up_order(const SubobjectPoset& poset) {
  std::vector<std::size_t> pending(poset.n);
  std::vector<std::vector<Index>> above(poset.n);
  for (Index x = 0; x < poset.n; ++x) {
    pending[x] = poset.proper[x].size();
    for (Index sub : poset.proper[x]) above[sub].push_back(x);
  }
  std::vector<Index> order;
  order.reserve(poset.n);
  for (Index x = 0; x < poset.n; ++x) {
    if (pending[x] == 0) order.push_back(x);
  }
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (Index up : above[order[head]]) {
      if (--pending[up] == 0) order.push_back(up);
    }
  }
  if (order.size() != poset.n) throw SpecError("cyclic subobject relation");
  return order;
}

}  // namespace

std::vector<Chain> gr_measures(const CategorySpec& spec, const SubobjectPoset& poset) {
  std::vector<Chain> measure(spec.size());
  for (Index m : bottom_up_order(poset)) {
    const Chain::value_type t = spec.theta(m);
    std::vector<Chain> candidates{Chain::from_values({t})};
    for (Index sub : poset.proper[m]) candidates.push_back(measure[sub].with(t));
    measure[m] = chain_max(candidates);
  }
  return measure;
}

std::vector<Chain> gr_measures(const CategorySpec& spec) {
  return gr_measures(spec, subobject_closure(spec));
}

Chain gr_measure(const CategorySpec& spec, Index m) {
  if (m >= spec.size()) throw SpecError("undeclared indecomposable");
  return gr_measures(spec).at(m);
}

Chain gr_measure(const CategorySpec& spec, std::string_view id) {
  return gr_measure(spec, spec.require(id));
}

Chain gr_measure_bruteforce(const CategorySpec& spec, Index m, std::size_t max_objects) {
  if (spec.size() > max_objects) {
    throw SizeGuardError("brute-force measure limited to " + std::to_string(max_objects) +
                         " indecomposables, spec has " + std::to_string(spec.size()));
  }
  if (m >= spec.size()) throw SpecError("undeclared indecomposable");
  const SubobjectPoset poset = subobject_closure(spec);

  // A finite chain with maximum m is m > x1 > x2 > ... in the closed order;
  // extend downwards one element at a time.
  std::vector<Chain> images;
  std::vector<Index> path{m};
  auto walk = [&](auto&& self) -> void {
    std::vector<Chain::value_type> values;
    for (Index x : path) values.push_back(spec.theta(x));
    images.push_back(Chain::from_values(std::move(values)));
    for (Index below : poset.proper[path.back()]) {
      if (std::find(path.begin(), path.end(), below) != path.end()) {
        throw SpecError("cyclic subobject relation");
      }
      path.push_back(below);
      self(self);
      path.pop_back();
    }
  };
  walk(walk);
  return chain_max(images);
}

MeasureTable make_measure_table(std::vector<Chain> measures) {
  MeasureTable table;
  std::map<Chain, std::vector<Index>, ChainLess> groups;
  for (Index i = 0; i < measures.size(); ++i) groups[measures[i]].push_back(i);
  for (auto& [chain, members] : groups) {
    table.gr_chain.push_back(chain);
    table.blocks.push_back(std::move(members));
  }
  table.measures = std::move(measures);
  return table;
}

MeasureTable gr_table(const CategorySpec& spec) {
  return make_measure_table(gr_measures(spec));
}

}  // namespace grcat
