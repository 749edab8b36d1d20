#pragma once

// Filtration subcategories Filt(X) and the X-length l_X, computed as a least
// fixed point over the conflation table.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "grcat/catspec.hpp"
#include "grcat/report.hpp"

namespace grcat {

struct FiltResult {
  /// l_X of every universe object that admits an X-filtration.
  std::map<ObjectRef, Length> reachable;
  std::set<ObjectRef> universe;
  /// One line per round: the objects first reached in that round.
  std::vector<std::string> frontier_log;

  std::optional<Length> length(const ObjectRef& m) const;
};

/// Default universe: zero, every indecomposable and every term of every
/// conflation.
std::set<ObjectRef> default_universe(const CategorySpec& spec);

/// A filtration step is a conflation a -> b -> g with g a single generator.
/// Besides the table, the split conflations (b - g) -> b -> g are always
/// available for every summand g of b that is a generator; in particular
/// every generator has length 1.
FiltResult filt_closure(const CategorySpec& spec, const std::vector<Index>& gens,
                        std::optional<std::set<ObjectRef>> universe = std::nullopt,
                        std::size_t max_universe = 1'000'000);

struct XLength {
  enum class Status { in_filt, unreached, outside_universe };
  Status status = Status::unreached;
  Length value = 0;

  bool in_filt() const { return status == Status::in_filt; }
};

XLength x_length(const CategorySpec& spec, const std::vector<Index>& gens, const ObjectRef& m);
XLength x_length(const FiltResult& closure, const ObjectRef& m);

/// Checks that l_X behaves as a length function on the reachable universe.
/// Unreached objects are reported as incompleteness (skipped), not failure.
Report check_lx_is_length_function(const CategorySpec& spec, const std::vector<Index>& gens);

}  // namespace grcat
