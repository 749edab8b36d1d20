#include "grcat/simpleminded.hpp"

#include <algorithm>

#include "grcat/filtration.hpp"

namespace grcat {

const char* to_string(Tristate t) {
  switch (t) {
    case Tristate::no:
      return "false";
    case Tristate::yes:
      return "true";
    case Tristate::unknown:
      return "unknown";
  }
  return "?";
}

bool is_semibrick(const CategorySpec& spec, const std::vector<Index>& members) {
  for (Index x : members) {
    if (spec.hom(x, x) != 1) return false;
    for (Index y : members) {
      if (x != y && spec.hom(x, y) != 0) return false;
    }
  }
  return true;
}

std::vector<Index> theta_one(const CategorySpec& spec) {
  if (spec.size() == 0) throw SpecError("theta_one of an empty category");
  Length least = 0;
  for (const auto& ind : spec.indecomposables) {
    if (ind.theta > 0 && (least == 0 || ind.theta < least)) least = ind.theta;
  }
  std::vector<Index> out;
  for (Index i = 0; i < spec.size(); ++i) {
    if (spec.theta(i) == least) out.push_back(i);
  }
  return out;
}

std::vector<Index> theta_n(const CategorySpec& spec, Length n) {
  if (n < 1) throw std::invalid_argument("theta_n needs n >= 1");
  std::vector<Index> current = theta_one(spec);
  for (Length k = 2; k <= n; ++k) {
    std::vector<Index> added;
    for (Index m = 0; m < spec.size(); ++m) {
      if (spec.theta(m) != k) continue;
      if (std::find(current.begin(), current.end(), m) != current.end()) continue;
      const bool orthogonal = std::all_of(current.begin(), current.end(), [&](Index s) {
        return spec.hom(s, m) == 0 && spec.hom(m, s) == 0;
      });
      if (orthogonal) added.push_back(m);
    }
    current.insert(current.end(), added.begin(), added.end());
    std::sort(current.begin(), current.end());
  }
  return current;
}

BrickSet theta_infinity(const CategorySpec& spec) {
  Length top = 1;
  for (const auto& ind : spec.indecomposables) top = std::max(top, ind.theta);

  BrickSet out;
  out.members = theta_n(spec, top);
  out.semibrick = is_semibrick(spec, out.members);
  if (!out.semibrick) {
    out.sms = Tristate::no;
  } else if (!spec.metadata.complete) {
    out.sms = Tristate::unknown;
  } else {
    const FiltResult closure = filt_closure(spec, out.members);
    bool covers = true;
    for (Index i = 0; i < spec.size(); ++i) {
      if (!closure.length(ObjectRef::single(i))) covers = false;
    }
    out.sms = covers ? Tristate::yes : Tristate::no;
  }
  return out;
}

bool is_finite_type(const CategorySpec& spec) {
  return theta_infinity(spec).members == theta_one(spec);
}

}  // namespace grcat
