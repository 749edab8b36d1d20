#include "grcat/catspec.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace grcat {

ObjectRef::ObjectRef(std::vector<Index> summands) : summands_(std::move(summands)) {
  std::sort(summands_.begin(), summands_.end());
}

ObjectRef::ObjectRef(std::initializer_list<Index> summands)
    : ObjectRef(std::vector<Index>(summands)) {}

std::size_t ObjectRef::multiplicity(Index i) const {
  auto [lo, hi] = std::equal_range(summands_.begin(), summands_.end(), i);
  return static_cast<std::size_t>(hi - lo);
}

ObjectRef ObjectRef::without_one(Index i) const {
  std::vector<Index> out = summands_;
  auto it = std::lower_bound(out.begin(), out.end(), i);
  if (it == out.end() || *it != i) {
    throw std::logic_error("ObjectRef::without_one: summand not present");
  }
  out.erase(it);
  return ObjectRef(std::move(out));
}

ObjectRef ObjectRef::plus(const ObjectRef& other) const {
  std::vector<Index> out = summands_;
  out.insert(out.end(), other.summands_.begin(), other.summands_.end());
  return ObjectRef(std::move(out));
}

std::optional<Index> CategorySpec::index_of(std::string_view id) const {
  for (Index i = 0; i < indecomposables.size(); ++i) {
    if (indecomposables[i].id == id) return i;
  }
  return std::nullopt;
}

Index CategorySpec::require(std::string_view id) const {
  if (auto i = index_of(id)) return *i;
  throw SpecError("undeclared id \"" + std::string(id) + "\"");
}

ObjectRef CategorySpec::object(std::initializer_list<std::string_view> ids) const {
  std::vector<Index> out;
  out.reserve(ids.size());
  for (auto id : ids) out.push_back(require(id));
  return ObjectRef(std::move(out));
}

Dim CategorySpec::ext_dim(const ObjectRef& third, const ObjectRef& first) const {
  if (!ext) return 0;
  Dim total = 0;
  for (Index c : third.summands()) {
    for (Index a : first.summands()) total += (*ext)(c, a);
  }
  return total;
}

void canonicalize(CategorySpec& spec) {
  std::stable_sort(spec.inflations.begin(), spec.inflations.end(),
                   [](const Inflation& x, const Inflation& y) {
                     return std::tie(x.sub, x.target) < std::tie(y.sub, y.target);
                   });
  std::stable_sort(spec.conflations.begin(), spec.conflations.end(),
                   [](const Conflation& x, const Conflation& y) {
                     return std::tie(x.b, x.a, x.c, x.stable) <
                            std::tie(y.b, y.a, y.c, y.stable);
                   });
}

CategorySpec make_spec(std::string name, std::vector<Indecomposable> indecomposables) {
  CategorySpec spec;
  spec.name = std::move(name);
  spec.indecomposables = std::move(indecomposables);
  spec.hom = DimMatrix(spec.size());
  for (Index i = 0; i < spec.size(); ++i) spec.hom(i, i) = 1;
  return spec;
}

Length theta_of(const CategorySpec& spec, const ObjectRef& m) {
  Length total = 0;
  for (Index i : m.summands()) {
    if (i >= spec.size()) throw SpecError("undeclared summand in object");
    total += spec.indecomposables[i].theta;
  }
  return total;
}

std::string render_object(const CategorySpec& spec, const ObjectRef& m) {
  if (m.is_zero()) return "0";
  std::string out;
  for (Index i : m.summands()) {
    if (!out.empty()) out += "+";
    out += spec.id(i);
  }
  return out;
}

bool ValidationReport::has_rule(std::string_view rule) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.rule == rule; });
}

SubobjectPoset subobject_closure(const CategorySpec& spec) {
  const std::size_t n = spec.size();
  SubobjectPoset poset;
  poset.n = n;
  poset.leq.assign(n, std::vector<bool>(n, false));
  for (Index i = 0; i < n; ++i) poset.leq[i][i] = true;
  for (const auto& inf : spec.inflations) {
    if (inf.target.is_indecomposable()) poset.leq[inf.sub][inf.target.summands()[0]] = true;
  }
  // Warshall
  for (Index k = 0; k < n; ++k) {
    for (Index i = 0; i < n; ++i) {
      if (!poset.leq[i][k]) continue;
      for (Index j = 0; j < n; ++j) {
        if (poset.leq[k][j]) poset.leq[i][j] = true;
      }
    }
  }
  poset.proper.assign(n, {});
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      if (poset.lt(y, x)) poset.proper[x].push_back(y);
    }
  }
  return poset;
}

namespace {

struct PosetIssue {
  std::string rule;
  Index x;
  Index y;
};

std::vector<PosetIssue> poset_issues(const CategorySpec& spec, const SubobjectPoset& poset) {
  std::vector<PosetIssue> issues;
  for (Index x = 0; x < poset.n; ++x) {
    for (Index y = 0; y < poset.n; ++y) {
      if (!poset.lt(x, y)) continue;
      if (x < y && poset.leq[y][x]) issues.push_back({"antisymmetry", x, y});
      if (spec.theta(x) >= spec.theta(y)) issues.push_back({"theta-monotone", x, y});
    }
  }
  return issues;
}

std::string issue_message(const CategorySpec& spec, const PosetIssue& issue) {
  std::ostringstream os;
  if (issue.rule == "antisymmetry") {
    os << spec.id(issue.x) << " <= " << spec.id(issue.y) << " and " << spec.id(issue.y)
       << " <= " << spec.id(issue.x) << " for distinct objects";
  } else {
    os << spec.id(issue.x) << " < " << spec.id(issue.y) << " but theta " << spec.theta(issue.x)
       << " >= " << spec.theta(issue.y);
  }
  return os.str();
}

}  // namespace

SubobjectPoset subobject_poset(const CategorySpec& spec) {
  SubobjectPoset poset = subobject_closure(spec);
  auto issues = poset_issues(spec, poset);
  if (!issues.empty()) {
    throw SpecError("inconsistent subobject relation (" + issues.front().rule +
                    "): " + issue_message(spec, issues.front()));
  }
  return poset;
}

ValidationReport validate_spec(const CategorySpec& spec) {
  ValidationReport report;
  auto add = [&](std::string rule, std::string message, std::string witness) {
    report.violations.push_back({std::move(rule), std::move(message), std::move(witness)});
  };

  for (Index i = 0; i < spec.size(); ++i) {
    if (spec.theta(i) < 1) {
      add("theta-positive", "nonzero indecomposable has length 0", spec.id(i));
    }
    if (spec.hom(i, i) < 1) {
      add("hom-identity", "dim Hom(X,X) must be at least 1", spec.id(i));
    }
  }

  for (const auto& cf : spec.conflations) {
    const Length ta = theta_of(spec, cf.a);
    const Length tb = theta_of(spec, cf.b);
    const Length tc = theta_of(spec, cf.c);
    std::ostringstream witness;
    witness << "(" << render_object(spec, cf.a) << ", " << render_object(spec, cf.b) << ", "
            << render_object(spec, cf.c) << ")";
    std::ostringstream msg;
    if (cf.stable && tb != ta + tc) {
      msg << "stable conflation has theta(b) = " << tb << " != " << ta << " + " << tc;
      add("stability-arithmetic", msg.str(), witness.str());
    } else if (!cf.stable && tb > ta + tc) {
      msg << "conflation has theta(b) = " << tb << " > " << ta << " + " << tc;
      add("subadditivity", msg.str(), witness.str());
    }
  }

  for (const auto& inf : spec.inflations) {
    const Length tx = spec.theta(inf.sub);
    const Length ty = theta_of(spec, inf.target);
    const std::string witness = spec.id(inf.sub) + " >-> " + render_object(spec, inf.target);
    const bool identity = inf.target.is_indecomposable() && inf.target.summands()[0] == inf.sub;
    if (tx > ty || (tx == ty && !identity)) {
      std::ostringstream msg;
      msg << "inflation needs theta(X) <= theta(Y) with equality only for X >-> X; got " << tx
          << " vs " << ty;
      add("inflation-length", msg.str(), witness);
    }
    if (inf.target.is_indecomposable() && !inf.target.contains(inf.sub) && tx >= ty) {
      std::ostringstream msg;
      msg << "proper inflation between indecomposables must raise theta; got " << tx << " vs "
          << ty;
      add("inflation-proper", msg.str(), witness);
    }
  }

  const SubobjectPoset poset = subobject_closure(spec);
  for (const auto& issue : poset_issues(spec, poset)) {
    add(issue.rule, issue_message(spec, issue), spec.id(issue.x) + ", " + spec.id(issue.y));
  }
  return report;
}

}  // namespace grcat
