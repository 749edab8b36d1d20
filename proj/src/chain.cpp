#include "grcat/chain.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace grcat {

Chain::Chain(std::vector<value_type> elems) : elems_(std::move(elems)) {
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (elems_[i] < 1) throw std::invalid_argument("chain elements must be positive");
    if (i > 0 && elems_[i - 1] >= elems_[i]) {
      throw std::invalid_argument("chain must be strictly increasing");
    }
  }
}

Chain::Chain(std::initializer_list<value_type> elems)
    : Chain(std::vector<value_type>(elems)) {}

Chain Chain::from_values(std::vector<value_type> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return Chain(std::move(values));
}

bool Chain::contains(value_type v) const {
  return std::binary_search(elems_.begin(), elems_.end(), v);
}

Chain Chain::with(value_type v) const {
  if (!elems_.empty() && v > elems_.back()) {
    Chain out = *this;
    out.elems_.push_back(v);
    return out;
  }
  std::vector<value_type> values = elems_;
  values.push_back(v);
  return from_values(std::move(values));
}

std::string Chain::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(elems_[i]);
  }
  return out + "}";
}

std::ostream& operator<<(std::ostream& os, const Chain& c) { return os << c.str(); }

bool chain_leq(const Chain& x, const Chain& y) {
  // Merge walk over the two sorted sequences: the first element that lies in
  // exactly one of them is the smaller of min(x\y) and min(y\x).
  const auto& a = x.elems();
  const auto& b = y.elems();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) {
      ++i;
      ++j;
    } else {
      // a[i] < b[j]: min(x\y) = a[i] is smaller, so min(y\x) > min(x\y).
      return b[j] < a[i];
    }
  }
  // One side is a prefix of the other (or both are equal). If y has extra
  // elements, min(y\x) is finite and min(x\y) is +infinity.
  return i == a.size();
}

Chain chain_max(std::span<const Chain> chains) {
  if (chains.empty()) throw std::invalid_argument("chain_max of an empty set");
  const Chain* best = &chains.front();
  for (const Chain& c : chains.subspan(1)) {
    if (chain_leq(*best, c)) best = &c;
  }
  return *best;
}

}  // namespace grcat
