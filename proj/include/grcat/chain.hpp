#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace grcat {

/// A finite strictly increasing sequence of positive integers, i.e. an
/// element of Ch(N). The empty chain is only meaningful as a comparison
/// sentinel; measures are never empty.
class Chain {
 public:
  using value_type = std::uint64_t;

  Chain() = default;
  /// Throws std::invalid_argument unless `elems` is strictly increasing and
  /// every element is at least 1.
  explicit Chain(std::vector<value_type> elems);
  Chain(std::initializer_list<value_type> elems);

  /// Builds a chain from arbitrary values by sorting and deduplicating.
  static Chain from_values(std::vector<value_type> values);

  const std::vector<value_type>& elems() const noexcept { return elems_; }
  bool empty() const noexcept { return elems_.empty(); }
  std::size_t size() const noexcept { return elems_.size(); }
  value_type front() const { return elems_.front(); }
  value_type back() const { return elems_.back(); }
  bool contains(value_type v) const;

  /// Returns this chain with `v` added (no-op if already present).
  Chain with(value_type v) const;

  /// `{1,2,3}`, no spaces.
  std::string str() const;

  friend bool operator==(const Chain&, const Chain&) = default;

 private:
  std::vector<value_type> elems_;
};

std::ostream& operator<<(std::ostream& os, const Chain& c);

/// x <= y iff min(y \ x) <= min(x \ y), with min of the empty set read as
/// +infinity. Total on Ch(N).
bool chain_leq(const Chain& x, const Chain& y);

inline bool chain_less(const Chain& x, const Chain& y) {
  return chain_leq(x, y) && !(x == y);
}

/// Strict-weak-ordering functor for sorted containers.
struct ChainLess {
  bool operator()(const Chain& x, const Chain& y) const { return chain_less(x, y); }
};

/// Maximum of a nonempty collection; throws std::invalid_argument on empty.
Chain chain_max(std::span<const Chain> chains);

}  // namespace grcat
