#include "grcat/f2.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace grcat::f2 {

LinearMap LinearMap::zero(int rows, int cols) {
  return LinearMap{rows, cols, std::vector<Vec>(static_cast<std::size_t>(cols), 0)};
}

LinearMap LinearMap::identity(int n) {
  LinearMap m = zero(n, n);
  for (int i = 0; i < n; ++i) m.columns[i] = Vec{1} << i;
  return m;
}

Vec LinearMap::apply(Vec v) const {
  Vec out = 0;
  for (int c = 0; c < cols; ++c) {
    if ((v >> c) & 1u) out ^= columns[c];
  }
  return out;
}

void LinearMap::set(int r, int c, bool value) {
  const Vec bit = Vec{1} << r;
  columns[c] = value ? (columns[c] | bit) : (columns[c] & ~bit);
}

LinearMap LinearMap::after(const LinearMap& other) const {
  if (other.rows != cols) throw std::invalid_argument("LinearMap::after: shape mismatch");
  LinearMap out = zero(rows, other.cols);
  for (int c = 0; c < other.cols; ++c) out.columns[c] = apply(other.columns[c]);
  return out;
}

int LinearMap::rank() const { return f2::rank(columns); }

Subspace::Subspace(const std::vector<Vec>& spanning) {
  for (Vec v : spanning) insert(v);
}

Vec Subspace::reduce(Vec v) const {
  for (Vec b : basis_) {
    if ((v >> top_bit(b)) & 1u) v ^= b;
  }
  return v;
}

bool Subspace::insert(Vec v) {
  v = reduce(v);
  if (v == 0) return false;
  auto pos = std::find_if(basis_.begin(), basis_.end(),
                          [&](Vec b) { return top_bit(b) < top_bit(v); });
  basis_.insert(pos, v);
  return true;
}

int rank(const std::vector<Vec>& vectors) { return Subspace(vectors).dim(); }

std::vector<Vec> kernel(std::vector<Vec> rows, int unknowns) {
  if (unknowns > 64) throw std::invalid_argument("f2::kernel supports at most 64 unknowns");
  // Reduced row echelon form with pivots on the lowest set bit.
  std::vector<int> pivot_of_row;
  std::size_t rank = 0;
  for (int col = 0; col < unknowns && rank < rows.size(); ++col) {
    const Vec bit = Vec{1} << col;
    auto it = std::find_if(rows.begin() + static_cast<std::ptrdiff_t>(rank), rows.end(),
                           [&](Vec r) { return (r & bit) != 0; });
    if (it == rows.end()) continue;
    std::swap(*it, rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && (rows[r] & bit)) rows[r] ^= rows[rank];
    }
    pivot_of_row.push_back(col);
    ++rank;
  }
  Vec pivots = 0;
  for (int p : pivot_of_row) pivots |= Vec{1} << p;

  std::vector<Vec> basis;
  for (int free = 0; free < unknowns; ++free) {
    if ((pivots >> free) & 1u) continue;
    Vec v = Vec{1} << free;
    for (std::size_t r = 0; r < rank; ++r) {
      if ((rows[r] >> free) & 1u) v |= Vec{1} << pivot_of_row[r];
    }
    basis.push_back(v);
  }
  return basis;
}

namespace {

// Enumerates echelon bases: each basis vector has a distinct leading bit,
// and is zero on the leading bits of the others.
void enumerate(int d, int next_bit, std::vector<int>& leads, std::vector<Subspace>& out) {
  if (next_bit < 0) {
    // Fill the free entries of every row in all possible ways.
    std::vector<std::vector<int>> free_bits(leads.size());
    Vec lead_mask = 0;
    for (int l : leads) lead_mask |= Vec{1} << l;
    int total_free = 0;
    for (std::size_t r = 0; r < leads.size(); ++r) {
      for (int b = 0; b < leads[r]; ++b) {
        if (!((lead_mask >> b) & 1u)) free_bits[r].push_back(b);
      }
      total_free += static_cast<int>(free_bits[r].size());
    }
    for (Vec assignment = 0; assignment < (Vec{1} << total_free); ++assignment) {
      std::vector<Vec> rows;
      int used = 0;
      for (std::size_t r = 0; r < leads.size(); ++r) {
        Vec row = Vec{1} << leads[r];
        for (int b : free_bits[r]) {
          if ((assignment >> used++) & 1u) row |= Vec{1} << b;
        }
        rows.push_back(row);
      }
      out.emplace_back(rows);
    }
    return;
  }
  enumerate(d, next_bit - 1, leads, out);
  leads.push_back(next_bit);
  enumerate(d, next_bit - 1, leads, out);
  leads.pop_back();
}

}  // namespace

const std::vector<Subspace>& all_subspaces(int d) {
  static std::mutex mu;
  static std::map<int, std::vector<Subspace>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;
  if (d > 12) throw std::invalid_argument("all_subspaces: dimension too large");
  std::vector<Subspace> out;
  std::vector<int> leads;
  enumerate(d, d - 1, leads, out);
  return cache.emplace(d, std::move(out)).first->second;
}

}  // namespace grcat::f2
