#include <algorithm>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "grcat/catspec.hpp"
#include "json.hpp"

namespace grcat {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ParseError(path + ": " + what);
}

void reject_unknown_keys(const json& obj, const std::string& path,
                         std::initializer_list<std::string_view> allowed) {
  if (!obj.is_object()) fail(path, "expected an object");
  for (const auto& [key, value] : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      fail(path, "unknown key \"" + key + "\"");
    }
  }
}

const json& member(const json& obj, const std::string& path, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(path, std::string("missing key \"") + key + "\"");
  return *it;
}

std::string as_string(const json& v, const std::string& path) {
  if (!v.is_string()) fail(path, "expected a string");
  return v.get<std::string>();
}

bool as_bool(const json& v, const std::string& path) {
  if (!v.is_boolean()) fail(path, "expected a boolean");
  return v.get<bool>();
}

std::uint64_t as_count(const json& v, const std::string& path, std::uint64_t max) {
  if (v.is_number_integer() && v.get<std::int64_t>() < 0) {
    fail(path, "negative dimension " + v.dump());
  }
  if (v.is_number_float()) {
    if (v.get<double>() < 0) fail(path, "negative dimension " + v.dump());
    fail(path, "expected an integer, got " + v.dump());
  }
  if (!v.is_number_unsigned() && !v.is_number_integer()) fail(path, "expected an integer");
  const auto value = v.get<std::uint64_t>();
  if (value > max) fail(path, "value " + v.dump() + " exceeds 32-bit range");
  return value;
}

std::string optional_note(const json& obj, const std::string& path) {
  auto it = obj.find("note");
  return it == obj.end() ? std::string() : as_string(*it, path + "/note");
}

class Resolver {
 public:
  explicit Resolver(const CategorySpec& spec) : spec_(spec) {}

  Index index(const json& v, const std::string& path) const {
    const std::string id = as_string(v, path);
    if (auto i = spec_.index_of(id)) return *i;
    fail(path, "undeclared id \"" + id + "\"");
  }

  ObjectRef object(const json& v, const std::string& path) const {
    if (!v.is_array()) fail(path, "expected an array of ids");
    std::vector<Index> out;
    for (std::size_t k = 0; k < v.size(); ++k) {
      out.push_back(index(v[k], path + "/" + std::to_string(k)));
    }
    return ObjectRef(std::move(out));
  }

 private:
  const CategorySpec& spec_;
};

constexpr std::uint64_t kDimMax = std::numeric_limits<Dim>::max();

void parse_matrix(const json& arr, const std::string& path, const Resolver& resolve,
                  const char* row_key, const char* col_key, DimMatrix& out,
                  std::map<std::pair<Index, Index>, std::string>* notes) {
  if (!arr.is_array()) fail(path, "expected an array");
  std::set<std::pair<Index, Index>> seen;
  for (std::size_t k = 0; k < arr.size(); ++k) {
    const std::string p = path + "/" + std::to_string(k);
    reject_unknown_keys(arr[k], p, {row_key, col_key, "dim", "note"});
    const Index r = resolve.index(member(arr[k], p, row_key), p + "/" + row_key);
    const Index c = resolve.index(member(arr[k], p, col_key), p + "/" + col_key);
    if (!seen.insert({r, c}).second) fail(p, "duplicate entry");
    out(r, c) = static_cast<Dim>(as_count(member(arr[k], p, "dim"), p + "/dim", kDimMax));
    std::string note = optional_note(arr[k], p);
    if (!note.empty()) {
      if (notes == nullptr) fail(p, "notes are only supported on hom entries");
      (*notes)[{r, c}] = std::move(note);
    }
  }
}

}  // namespace

CategorySpec parse_spec(std::string_view text, const ParseLimits& limits) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("syntax error: ") + e.what(), e.byte);
  }

  reject_unknown_keys(doc, "", {"name", "metadata", "indecomposables", "hom", "ext",
                                "inflations", "conflations"});
  CategorySpec spec;
  if (auto it = doc.find("name"); it != doc.end()) spec.name = as_string(*it, "/name");

  if (auto it = doc.find("metadata"); it != doc.end()) {
    reject_unknown_keys(*it, "/metadata",
                        {"description", "complete", "models_infinite", "conflation_theta_bound"});
    const json& md = *it;
    if (auto d = md.find("description"); d != md.end()) {
      spec.metadata.description = as_string(*d, "/metadata/description");
    }
    if (auto d = md.find("complete"); d != md.end()) {
      spec.metadata.complete = as_bool(*d, "/metadata/complete");
    }
    if (auto d = md.find("models_infinite"); d != md.end()) {
      spec.metadata.models_infinite = as_bool(*d, "/metadata/models_infinite");
    }
    if (auto d = md.find("conflation_theta_bound"); d != md.end()) {
      spec.metadata.conflation_theta_bound =
          as_count(*d, "/metadata/conflation_theta_bound", kDimMax);
    }
  }

  const json& inds = member(doc, "", "indecomposables");
  if (!inds.is_array()) fail("/indecomposables", "expected an array");
  for (std::size_t k = 0; k < inds.size(); ++k) {
    const std::string p = "/indecomposables/" + std::to_string(k);
    reject_unknown_keys(inds[k], p, {"id", "theta"});
    Indecomposable ind;
    ind.id = as_string(member(inds[k], p, "id"), p + "/id");
    if (ind.id.empty()) fail(p + "/id", "empty id");
    ind.theta = as_count(member(inds[k], p, "theta"), p + "/theta", kDimMax);
    if (spec.index_of(ind.id)) fail(p + "/id", "duplicate id \"" + ind.id + "\"");
    spec.indecomposables.push_back(std::move(ind));
  }

  const std::size_t n = spec.size();
  spec.hom = DimMatrix(n);
  for (Index i = 0; i < n; ++i) spec.hom(i, i) = 1;
  const Resolver resolve(spec);

  if (auto it = doc.find("hom"); it != doc.end()) {
    parse_matrix(*it, "/hom", resolve, "from", "to", spec.hom, &spec.hom_notes);
  }
  if (auto it = doc.find("ext"); it != doc.end()) {
    spec.ext = DimMatrix(n);
    parse_matrix(*it, "/ext", resolve, "c", "a", *spec.ext, nullptr);
  }

  if (auto it = doc.find("inflations"); it != doc.end()) {
    if (!it->is_array()) fail("/inflations", "expected an array");
    for (std::size_t k = 0; k < it->size(); ++k) {
      const std::string p = "/inflations/" + std::to_string(k);
      const json& e = (*it)[k];
      reject_unknown_keys(e, p, {"sub", "target", "note"});
      Inflation inf;
      inf.sub = resolve.index(member(e, p, "sub"), p + "/sub");
      inf.target = resolve.object(member(e, p, "target"), p + "/target");
      inf.note = optional_note(e, p);
      spec.inflations.push_back(std::move(inf));
    }
  }

  if (auto it = doc.find("conflations"); it != doc.end()) {
    if (!it->is_array()) fail("/conflations", "expected an array");
    if (it->size() > limits.max_conflations) {
      fail("/conflations", "too many conflations (" + std::to_string(it->size()) + " > " +
                               std::to_string(limits.max_conflations) + ")");
    }
    for (std::size_t k = 0; k < it->size(); ++k) {
      const std::string p = "/conflations/" + std::to_string(k);
      const json& e = (*it)[k];
      reject_unknown_keys(e, p, {"a", "b", "c", "stable", "note"});
      Conflation cf;
      cf.a = resolve.object(member(e, p, "a"), p + "/a");
      cf.b = resolve.object(member(e, p, "b"), p + "/b");
      cf.c = resolve.object(member(e, p, "c"), p + "/c");
      cf.stable = as_bool(member(e, p, "stable"), p + "/stable");
      cf.note = optional_note(e, p);
      spec.conflations.push_back(std::move(cf));
    }
  }

  canonicalize(spec);
  return spec;
}

CategorySpec load_spec(const std::string& path, const ParseLimits& limits) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_spec(buf.str(), limits);
}

namespace {

ordered_json ids_of(const CategorySpec& spec, const ObjectRef& m) {
  ordered_json arr = ordered_json::array();
  for (Index i : m.summands()) arr.push_back(spec.id(i));
  return arr;
}

}  // namespace

std::string render_spec(const CategorySpec& spec) {
  CategorySpec canon = spec;
  canonicalize(canon);

  ordered_json doc;
  doc["name"] = canon.name;

  ordered_json md;
  if (!canon.metadata.description.empty()) md["description"] = canon.metadata.description;
  md["complete"] = canon.metadata.complete;
  md["models_infinite"] = canon.metadata.models_infinite;
  if (canon.metadata.conflation_theta_bound) {
    md["conflation_theta_bound"] = *canon.metadata.conflation_theta_bound;
  }
  doc["metadata"] = md;

  ordered_json inds = ordered_json::array();
  for (const auto& ind : canon.indecomposables) {
    inds.push_back(ordered_json{{"id", ind.id}, {"theta", ind.theta}});
  }
  doc["indecomposables"] = inds;

  const std::size_t n = canon.size();
  ordered_json hom = ordered_json::array();
  for (Index r = 0; r < n; ++r) {
    for (Index c = 0; c < n; ++c) {
      const Dim d = canon.hom(r, c);
      auto note = canon.hom_notes.find({r, c});
      if (d == (r == c ? 1u : 0u) && note == canon.hom_notes.end()) continue;
      ordered_json e{{"from", canon.id(r)}, {"to", canon.id(c)}, {"dim", d}};
      if (note != canon.hom_notes.end()) e["note"] = note->second;
      hom.push_back(std::move(e));
    }
  }
  doc["hom"] = hom;

  if (canon.ext) {
    ordered_json ext = ordered_json::array();
    for (Index r = 0; r < n; ++r) {
      for (Index c = 0; c < n; ++c) {
        const Dim d = (*canon.ext)(r, c);
        if (d == 0) continue;
        ext.push_back(ordered_json{{"c", canon.id(r)}, {"a", canon.id(c)}, {"dim", d}});
      }
    }
    doc["ext"] = ext;
  }

  ordered_json infs = ordered_json::array();
  for (const auto& inf : canon.inflations) {
    ordered_json e{{"sub", canon.id(inf.sub)}, {"target", ids_of(canon, inf.target)}};
    if (!inf.note.empty()) e["note"] = inf.note;
    infs.push_back(std::move(e));
  }
  doc["inflations"] = infs;

  ordered_json confs = ordered_json::array();
  for (const auto& cf : canon.conflations) {
    ordered_json e{{"a", ids_of(canon, cf.a)},
                   {"b", ids_of(canon, cf.b)},
                   {"c", ids_of(canon, cf.c)},
                   {"stable", cf.stable}};
    if (!cf.note.empty()) e["note"] = cf.note;
    confs.push_back(std::move(e));
  }
  doc["conflations"] = confs;

  return doc.dump(2) + "\n";
}

}  // namespace grcat
