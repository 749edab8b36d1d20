#pragma once

// Gabriel-Roiter measures on the subobject poset of a CategorySpec.

#include <cstddef>
#include <string_view>
#include <vector>

#include "grcat/catspec.hpp"
#include "grcat/chain.hpp"

namespace grcat {

struct MeasureTable {
  /// measures[i] is the measure of indecomposable i.
  std::vector<Chain> measures;
  /// The distinct measures in strictly increasing order.
  std::vector<Chain> gr_chain;
  /// blocks[k] lists the indecomposables whose measure is gr_chain[k].
  std::vector<std::vector<Index>> blocks;

  std::size_t block_of(Index i) const;
};

/// Measures of every indecomposable, computed bottom-up over the poset:
/// measure(m) = max({theta(m)} and measure(m') + theta(m) for m' < m).
/// Throws SpecError when the subobject relation has a cycle.
std::vector<Chain> gr_measures(const CategorySpec& spec, const SubobjectPoset& poset);
std::vector<Chain> gr_measures(const CategorySpec& spec);

Chain gr_measure(const CategorySpec& spec, Index m);
Chain gr_measure(const CategorySpec& spec, std::string_view id);

/// Literal definition: enumerate every chain of the poset with maximum `m`,
/// map it through theta and take the maximum. Exponential; refuses specs
/// with more than `max_objects` indecomposables.
Chain gr_measure_bruteforce(const CategorySpec& spec, Index m, std::size_t max_objects = 20);

/// Groups precomputed measures into the GR chain and its blocks.
MeasureTable make_measure_table(std::vector<Chain> measures);

MeasureTable gr_table(const CategorySpec& spec);

}  // namespace grcat
