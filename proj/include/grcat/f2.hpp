#pragma once

// Linear algebra over the two-element field. Vectors of length <= 64 are
// bitmasks; bit i is coordinate i.

#include <cstdint>
#include <vector>

namespace grcat::f2 {

using Vec = std::uint64_t;

inline int top_bit(Vec v) { return 63 - __builtin_clzll(v); }

/// A linear map F2^cols -> F2^rows, stored by the images of basis vectors.
struct LinearMap {
  int rows = 0;
  int cols = 0;
  std::vector<Vec> columns;

  static LinearMap zero(int rows, int cols);
  static LinearMap identity(int n);

  Vec apply(Vec v) const;
  bool entry(int r, int c) const { return (columns[c] >> r) & 1u; }
  void set(int r, int c, bool value);
  /// this o other
  LinearMap after(const LinearMap& other) const;
  int rank() const;
};

/// A subspace kept as a basis with distinct leading (highest) bits.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(const std::vector<Vec>& spanning);

  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<Vec>& basis() const { return basis_; }
  Vec reduce(Vec v) const;
  bool contains(Vec v) const { return reduce(v) == 0; }
  /// Adds v; returns false if it was already contained.
  bool insert(Vec v);

 private:
  std::vector<Vec> basis_;  // sorted by leading bit, descending
};

int rank(const std::vector<Vec>& vectors);

/// Basis of the solution space of the homogeneous system whose equations
/// are `rows` (bitmasks over `unknowns` variables).
std::vector<Vec> kernel(std::vector<Vec> rows, int unknowns);

/// Every subspace of F2^d, each as a basis. Cached per d.
const std::vector<Subspace>& all_subspaces(int d);

}  // namespace grcat::f2
