#pragma once

// Finite instances of extriangulated length categories, stored as explicit
// dimension data: indecomposables with their lengths, Hom/Ext dimension
// matrices, declared inflations and a table of conflations.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace grcat {

using Index = std::size_t;
using Dim = std::uint32_t;
using Length = std::uint64_t;

/// Raised by the parser. `position()` is a byte offset into the input when
/// the failure can be localised, otherwise npos.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position = npos)
      : std::runtime_error(what), position_(position) {}
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// The data is inconsistent in a way that makes a computation meaningless
/// (cyclic subobject relation, undeclared summand, ...).
class SpecError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computation would exceed one of the configured size guards.
class SizeGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A formal finite direct sum of indecomposables, kept as a sorted multiset
/// of indices into CategorySpec::indecomposables. The empty sum is zero.
class ObjectRef {
 public:
  ObjectRef() = default;
  explicit ObjectRef(std::vector<Index> summands);
  ObjectRef(std::initializer_list<Index> summands);

  static ObjectRef single(Index i) { return ObjectRef({i}); }

  const std::vector<Index>& summands() const noexcept { return summands_; }
  bool is_zero() const noexcept { return summands_.empty(); }
  bool is_indecomposable() const noexcept { return summands_.size() == 1; }
  std::size_t size() const noexcept { return summands_.size(); }
  std::size_t multiplicity(Index i) const;
  bool contains(Index i) const { return multiplicity(i) > 0; }

  /// Removes one copy of `i`; precondition contains(i).
  ObjectRef without_one(Index i) const;
  ObjectRef plus(const ObjectRef& other) const;

  friend auto operator<=>(const ObjectRef&, const ObjectRef&) = default;

 private:
  std::vector<Index> summands_;
};

struct Indecomposable {
  std::string id;
  Length theta = 0;

  friend bool operator==(const Indecomposable&, const Indecomposable&) = default;
};

struct Inflation {
  Index sub = 0;
  ObjectRef target;
  std::string note;

  friend bool operator==(const Inflation&, const Inflation&) = default;
};

struct Conflation {
  ObjectRef a;
  ObjectRef b;
  ObjectRef c;
  bool stable = true;
  std::string note;

  friend bool operator==(const Conflation&, const Conflation&) = default;
};

/// Dense square matrix of dimensions indexed by indecomposable.
class DimMatrix {
 public:
  DimMatrix() = default;
  explicit DimMatrix(std::size_t n, Dim fill = 0) : n_(n), data_(n * n, fill) {}

  std::size_t size() const noexcept { return n_; }
  Dim operator()(Index row, Index col) const { return data_[row * n_ + col]; }
  Dim& operator()(Index row, Index col) { return data_[row * n_ + col]; }

  friend bool operator==(const DimMatrix&, const DimMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Dim> data_;
};

struct SpecMetadata {
  std::string description;
  /// The conflation table lists every conflation of the modelled universe.
  bool complete = false;
  /// The instance is a finite window of an infinite-type category.
  bool models_infinite = false;
  /// When set, completeness only holds for middle terms of at most this length.
  std::optional<Length> conflation_theta_bound;

  friend bool operator==(const SpecMetadata&, const SpecMetadata&) = default;
};

/// A full finite instance. `hom(X, Y)` is dim Hom(X, Y); `ext(C, A)` is
/// dim E(C, A), i.e. the row is the third term of a conflation and the
/// column its first term.
struct CategorySpec {
  std::string name;
  SpecMetadata metadata;
  std::vector<Indecomposable> indecomposables;
  DimMatrix hom;
  std::optional<DimMatrix> ext;
  std::vector<Inflation> inflations;
  std::vector<Conflation> conflations;
  /// Provenance annotations for individual Hom entries, keyed by (from, to).
  std::map<std::pair<Index, Index>, std::string> hom_notes;

  std::size_t size() const noexcept { return indecomposables.size(); }
  const std::string& id(Index i) const { return indecomposables.at(i).id; }
  Length theta(Index i) const { return indecomposables.at(i).theta; }
  std::optional<Index> index_of(std::string_view id) const;
  /// Like index_of but throws SpecError for unknown ids.
  Index require(std::string_view id) const;
  ObjectRef object(std::initializer_list<std::string_view> ids) const;

  /// Sum of Ext dimensions over the summands of both arguments. Zero when
  /// no Ext data is present.
  Dim ext_dim(const ObjectRef& third, const ObjectRef& first) const;

  friend bool operator==(const CategorySpec&, const CategorySpec&) = default;
};

/// Sorts inflations and conflations into canonical order.
void canonicalize(CategorySpec& spec);

/// Builds a spec with the given indecomposables, an identity-pattern Hom
/// matrix and no Ext data.
CategorySpec make_spec(std::string name, std::vector<Indecomposable> indecomposables);

Length theta_of(const CategorySpec& spec, const ObjectRef& m);

std::string render_object(const CategorySpec& spec, const ObjectRef& m);

// ---------------------------------------------------------------------------
// Validation

struct Violation {
  std::string rule;
  std::string message;
  std::string witness;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const noexcept { return violations.empty(); }
  bool has_rule(std::string_view rule) const;
};

ValidationReport validate_spec(const CategorySpec& spec);

// ---------------------------------------------------------------------------
// Subobject poset

/// Reflexive-transitive closure of the declared inflations between
/// indecomposables. Inflations into decomposable targets are ignored.
struct SubobjectPoset {
  std::size_t n = 0;
  /// leq[x][y] is true iff x <= y.
  std::vector<std::vector<bool>> leq;
  /// proper[x] lists every x' with x' < x, in index order.
  std::vector<std::vector<Index>> proper;

  bool le(Index x, Index y) const { return leq[x][y]; }
  bool lt(Index x, Index y) const { return x != y && leq[x][y]; }
};

/// Computes the closure without judging it.
SubobjectPoset subobject_closure(const CategorySpec& spec);

/// Computes the closure and throws SpecError if it is not antisymmetric or
/// if some x < y has theta(x) >= theta(y).
SubobjectPoset subobject_poset(const CategorySpec& spec);

// ---------------------------------------------------------------------------
// File format

struct ParseLimits {
  std::size_t max_conflations = 1'000'000;
};

CategorySpec parse_spec(std::string_view text, const ParseLimits& limits = {});
CategorySpec load_spec(const std::string& path, const ParseLimits& limits = {});

/// Canonical JSON rendering: fixed key order, sorted arrays, default Hom and
/// Ext entries omitted. parse_spec(render_spec(s)) == s.
std::string render_spec(const CategorySpec& spec);

}  // namespace grcat
