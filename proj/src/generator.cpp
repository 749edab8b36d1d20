#include "grcat/generator.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

#include "grcat/filtration.hpp"

namespace grcat::gen {

using f2::LinearMap;
using f2::Subspace;
using f2::Vec;

std::string IntervalModule::id() const {
  return "[" + std::to_string(a) + "," + std::to_string(b) + "]";
}

int MatrixRep::total_dim() const {
  int total = 0;
  for (int d : dims) total += d;
  return total;
}

LinearMap MatrixRep::path(int i, int j) const {
  LinearMap out = LinearMap::identity(dims[i]);
  for (int k = i; k < j; ++k) out = arrows[k].after(out);
  return out;
}

std::vector<IntervalModule> intervals(int n) {
  std::vector<IntervalModule> out;
  for (int len = 1; len <= n; ++len) {
    for (int a = 1; a + len - 1 <= n; ++a) out.push_back({a, a + len - 1});
  }
  return out;
}

MatrixRep interval_rep(int n, const IntervalModule& m) {
  MatrixRep rep;
  for (int v = 1; v <= n; ++v) rep.dims.push_back(m.a <= v && v <= m.b ? 1 : 0);
  for (int v = 1; v < n; ++v) {
    LinearMap arrow = LinearMap::zero(rep.dims[v], rep.dims[v - 1]);
    if (rep.dims[v - 1] == 1 && rep.dims[v] == 1) arrow.columns[0] = 1;
    rep.arrows.push_back(arrow);
  }
  return rep;
}

MatrixRep direct_sum(const std::vector<MatrixRep>& parts) {
  if (parts.empty()) throw std::invalid_argument("direct_sum of nothing");
  const int n = parts.front().vertices();
  MatrixRep out;
  out.dims.assign(static_cast<std::size_t>(n), 0);
  for (const auto& p : parts) {
    for (int v = 0; v < n; ++v) out.dims[v] += p.dims[v];
  }
  if (out.total_dim() > 64) throw std::invalid_argument("direct_sum: more than 64 dimensions");
  for (int v = 0; v + 1 < n; ++v) {
    LinearMap arrow = LinearMap::zero(out.dims[v + 1], out.dims[v]);
    int row_off = 0;
    int col_off = 0;
    for (const auto& p : parts) {
      const LinearMap& a = p.arrows[v];
      for (int c = 0; c < a.cols; ++c) arrow.columns[col_off + c] = a.columns[c] << row_off;
      row_off += p.dims[v + 1];
      col_off += p.dims[v];
    }
    out.arrows.push_back(arrow);
  }
  return out;
}

namespace {

struct HomLayout {
  std::vector<int> offset;
  int unknowns = 0;

  HomLayout(const MatrixRep& v, const MatrixRep& w) {
    for (int i = 0; i < v.vertices(); ++i) {
      offset.push_back(unknowns);
      unknowns += v.dims[i] * w.dims[i];
    }
  }
  // Entry (r, c) of the vertex map f_i : V_i -> W_i.
  int var(const MatrixRep& w, int i, int r, int c) const { return offset[i] + c * w.dims[i] + r; }
};

std::vector<LinearMap> vertex_maps(const MatrixRep& v, const MatrixRep& w, const HomLayout& layout,
                                   Vec element) {
  std::vector<LinearMap> maps;
  for (int i = 0; i < v.vertices(); ++i) {
    LinearMap f = LinearMap::zero(w.dims[i], v.dims[i]);
    for (int c = 0; c < v.dims[i]; ++c) {
      for (int r = 0; r < w.dims[i]; ++r) {
        if ((element >> layout.var(w, i, r, c)) & 1u) f.set(r, c, true);
      }
    }
    maps.push_back(f);
  }
  return maps;
}

}  // namespace

std::vector<Vec> hom_basis(const MatrixRep& v, const MatrixRep& w) {
  if (v.vertices() != w.vertices()) throw std::invalid_argument("hom_basis: quiver mismatch");
  const HomLayout layout(v, w);
  if (layout.unknowns > 64) throw std::invalid_argument("hom_basis: system too large");
  // Commuting squares: W_arrow f_i = f_{i+1} V_arrow, entrywise.
  std::vector<Vec> equations;
  for (int i = 0; i + 1 < v.vertices(); ++i) {
    const LinearMap& va = v.arrows[i];
    const LinearMap& wa = w.arrows[i];
    for (int r = 0; r < w.dims[i + 1]; ++r) {
      for (int c = 0; c < v.dims[i]; ++c) {
        Vec eq = 0;
        for (int k = 0; k < w.dims[i]; ++k) {
          if (wa.entry(r, k)) eq ^= Vec{1} << layout.var(w, i, k, c);
        }
        for (int k = 0; k < v.dims[i + 1]; ++k) {
          if (va.entry(k, c)) eq ^= Vec{1} << layout.var(w, i + 1, r, k);
        }
        if (eq != 0) equations.push_back(eq);
      }
    }
  }
  return f2::kernel(std::move(equations), layout.unknowns);
}

int hom_dim(const MatrixRep& v, const MatrixRep& w) {
  return static_cast<int>(hom_basis(v, w).size());
}

bool has_injective_hom(const MatrixRep& v, const MatrixRep& w) {
  if (v.total_dim() == 0) return true;
  const std::vector<Vec> basis = hom_basis(v, w);
  if (basis.size() > 20) throw std::invalid_argument("has_injective_hom: Hom space too large");
  const HomLayout layout(v, w);
  for (Vec pick = 1; pick < (Vec{1} << basis.size()); ++pick) {
    Vec element = 0;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if ((pick >> k) & 1u) element ^= basis[k];
    }
    const auto maps = vertex_maps(v, w, layout, element);
    bool injective = true;
    for (int i = 0; i < v.vertices() && injective; ++i) injective = maps[i].rank() == v.dims[i];
    if (injective) return true;
  }
  return false;
}

int euler_form(const std::vector<int>& x, const std::vector<int>& y) {
  int total = 0;
  for (std::size_t i = 0; i < x.size(); ++i) total += x[i] * y[i];
  for (std::size_t i = 0; i + 1 < x.size(); ++i) total -= x[i] * y[i + 1];
  return total;
}

std::map<IntervalModule, int> interval_multiplicities(int n,
                                                     const std::function<int(int, int)>& rank) {
  auto r = [&](int i, int j) { return (i < 0 || j >= n) ? 0 : rank(i, j); };
  std::map<IntervalModule, int> out;
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      const int m = r(a, b) - r(a - 1, b) - r(a, b + 1) + r(a - 1, b + 1);
      if (m < 0) throw std::logic_error("negative interval multiplicity");
      if (m > 0) out[{a + 1, b + 1}] = m;
    }
  }
  return out;
}

void for_each_subrep(const MatrixRep& rep,
                     const std::function<void(const std::vector<Subspace>&)>& visit) {
  std::vector<Subspace> chosen;
  auto step = [&](auto&& self, int vertex) -> void {
    if (vertex == rep.vertices()) {
      visit(chosen);
      return;
    }
    for (const Subspace& u : f2::all_subspaces(rep.dims[vertex])) {
      if (vertex > 0) {
        const LinearMap& arrow = rep.arrows[vertex - 1];
        const bool closed = std::all_of(chosen.back().basis().begin(), chosen.back().basis().end(),
                                        [&](Vec x) { return u.contains(arrow.apply(x)); });
        if (!closed) continue;
      }
      chosen.push_back(u);
      self(self, vertex + 1);
      chosen.pop_back();
    }
  };
  step(step, 0);
}

namespace {

using Triple = std::tuple<ObjectRef, ObjectRef, ObjectRef>;

constexpr int kMaxVertices = 16;

// Allocation-free rank accumulator, one slot per leading bit.
struct XorBasis {
  Vec slot[64] = {};
  int dim = 0;

  void insert(Vec v) {
    while (v != 0) {
      const int t = f2::top_bit(v);
      if (slot[t] == 0) {
        slot[t] = v;
        ++dim;
        return;
      }
      v ^= slot[t];
    }
  }
};

ObjectRef to_object(const std::map<IntervalModule, int>& mult,
                    const std::map<IntervalModule, Index>& index) {
  std::vector<Index> out;
  for (const auto& [m, k] : mult) out.insert(out.end(), static_cast<std::size_t>(k), index.at(m));
  return ObjectRef(std::move(out));
}

void multisets(const std::vector<IntervalModule>& ints, std::size_t from, int budget,
               std::vector<Index>& current, const std::function<void(const std::vector<Index>&)>& visit) {
  if (!current.empty()) visit(current);
  for (std::size_t k = from; k < ints.size(); ++k) {
    if (ints[k].theta() > budget) continue;
    current.push_back(k);
    multisets(ints, k, budget - ints[k].theta(), current, visit);
    current.pop_back();
  }
}

}  // namespace

CategorySpec generate_an(int n, const AnOptions& options) {
  if (n < 1 || n > options.max_n || n > kMaxVertices) {
    throw SizeGuardError("generate_an: n = " + std::to_string(n) + " outside 1.." +
                         std::to_string(options.max_n));
  }
  const std::vector<IntervalModule> ints = intervals(n);
  std::vector<Indecomposable> inds;
  std::map<IntervalModule, Index> index;
  std::vector<MatrixRep> reps;
  for (const auto& m : ints) {
    index[m] = inds.size();
    inds.push_back({m.id(), static_cast<Length>(m.theta())});
    reps.push_back(interval_rep(n, m));
  }

  CategorySpec spec = make_spec("mod-kA" + std::to_string(n), std::move(inds));
  const std::size_t count = ints.size();
  spec.ext = DimMatrix(count);
  for (Index x = 0; x < count; ++x) {
    for (Index y = 0; y < count; ++y) {
      spec.hom(x, y) = static_cast<Dim>(hom_dim(reps[x], reps[y]));
    }
  }
  // Hereditary: dim Ext^1(C, A) = dim Hom(C, A) - <dim C, dim A>.
  for (Index c = 0; c < count; ++c) {
    for (Index a = 0; a < count; ++a) {
      const int e = static_cast<int>(spec.hom(c, a)) - euler_form(reps[c].dims, reps[a].dims);
      if (e < 0) throw std::logic_error("negative Ext dimension from Euler form");
      (*spec.ext)(c, a) = static_cast<Dim>(e);
    }
  }

  const int bound = n + 2;
  for (Index x = 0; x < count; ++x) {
    for (Index y = 0; y < count; ++y) {
      if (x != y && has_injective_hom(reps[x], reps[y])) {
        spec.inflations.push_back({x, ObjectRef::single(y), ""});
      }
    }
    for (Index y1 = 0; y1 < count; ++y1) {
      for (Index y2 = y1; y2 < count; ++y2) {
        if (ints[y1].theta() + ints[y2].theta() > bound) continue;
        if (has_injective_hom(reps[x], direct_sum({reps[y1], reps[y2]}))) {
          spec.inflations.push_back({x, ObjectRef({y1, y2}), ""});
        }
      }
    }
  }

  std::set<Triple> seen;
  std::vector<Index> current;
  multisets(ints, 0, bound, current, [&](const std::vector<Index>& summands) {
    std::vector<MatrixRep> parts;
    for (Index k : summands) parts.push_back(reps[k]);
    const MatrixRep b = direct_sum(parts);
    const ObjectRef middle(summands);
    std::vector<std::vector<LinearMap>> paths(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) paths[i].push_back(b.path(i, j));
    }
    for_each_subrep(b, [&](const std::vector<Subspace>& u) {
      int dim_u = 0;
      for (const auto& s : u) dim_u += s.dim();
      if (dim_u == 0 || dim_u == b.total_dim()) return;
      // Composite ranks of U and of B/U, tabulated once per subrepresentation.
      int sub_rank[kMaxVertices][kMaxVertices] = {};
      int quot_rank[kMaxVertices][kMaxVertices] = {};
      for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
          const LinearMap& p = paths[i][j - i];
          XorBasis image;
          for (Vec x : u[i].basis()) image.insert(p.apply(x));
          sub_rank[i][j] = image.dim;
          XorBasis span;
          for (Vec x : u[j].basis()) span.insert(x);
          for (Vec col : p.columns) span.insert(col);
          quot_rank[i][j] = span.dim - u[j].dim();
        }
      }
      Triple t{to_object(interval_multiplicities(n, [&](int i, int j) { return sub_rank[i][j]; }), index),
               middle,
               to_object(interval_multiplicities(n, [&](int i, int j) { return quot_rank[i][j]; }), index)};
      // A sequence with B isomorphic to A + C splits; those stay implicit.
      if (std::get<0>(t).plus(std::get<2>(t)) == middle) return;
      if (seen.insert(t).second) {
        spec.conflations.push_back({std::get<0>(t), std::get<1>(t), std::get<2>(t), true, ""});
      }
    });
  });

  spec.metadata.description =
      "Finite-dimensional representations over F2 of the linearly oriented quiver of type A_" +
      std::to_string(n) + " (arrows i -> i+1); theta is composition length. Conflations are all non-split short exact "
      "sequences whose middle term has length at most the recorded bound.";
  spec.metadata.complete = true;
  spec.metadata.conflation_theta_bound = static_cast<Length>(bound);
  canonicalize(spec);
  return spec;
}

// ---------------------------------------------------------------------------
// Transcribed fixtures

namespace {

struct GridBase {
  const char* name;
  GridPoint at;
};

// Positions of the mod kA_3 objects inside ZA_3 (columns grow to the right).
constexpr GridBase kGridBases[] = {
    {"S3", {6, 1}}, {"P2", {7, 2}}, {"P1", {8, 3}},
    {"S2", {8, 1}}, {"I2", {9, 2}}, {"S1", {10, 1}},
};

}  // namespace

GridPoint za3_shift(GridPoint x) { return {x.column + 4, 4 - x.row}; }

std::string za3_name(GridPoint p) {
  for (const auto& base : kGridBases) {
    const int diff = p.column - base.at.column;
    if (((diff % 4) + 4) % 4 != 0) continue;
    const int k = diff / 4;
    const int row = (k % 2 == 0) ? base.at.row : 4 - base.at.row;
    if (row != p.row) continue;
    std::string out = base.name;
    if (k < 0) out += "m" + std::to_string(-k);
    if (k > 0) out += "p" + std::to_string(k);
    return out;
  }
  throw std::invalid_argument("za3_name: not a vertex of ZA_3");
}

int za3_hom(GridPoint x, GridPoint y) {
  // Hom(x, -) is supported on the rectangle spanned by the sectional paths
  // leaving x: up-right for 3 - row steps, down-right for row - 1 steps.
  const int dc = y.column - x.column;
  const int dr = y.row - x.row;
  if ((dc + dr) % 2 != 0) return 0;
  const int up = (dc + dr) / 2;
  const int down = (dc - dr) / 2;
  return (up >= 0 && down >= 0 && up <= 3 - x.row && down <= x.row - 1) ? 1 : 0;
}

CategorySpec fixture_final_example() {
  CategorySpec spec = make_spec("final-example", {{"P1m1", 1},
                                                  {"S3", 1},
                                                  {"S2", 1},
                                                  {"I2m1", 2},
                                                  {"P2", 2},
                                                  {"S1m1", 3}});
  spec.metadata.description =
      "Filt(P1[-1], S3, S2) inside D^b(kA_3) for the quiver 1 -> 2 -> 3; Xm1 denotes X[-1]. "
      "Hom dimensions count paths in the AR quiver modulo its three meshes; "
      "theta is the length with respect to the generators.";
  spec.metadata.complete = true;

  struct HomEntry {
    const char* from;
    const char* to;
    Dim dim;
    const char* note;
  };
  const HomEntry hom[] = {
      {"P1m1", "I2m1", 1, "arrow P1m1 -> I2m1"},
      {"P1m1", "S1m1", 1, "path P1m1 -> I2m1 -> S1m1"},
      {"P1m1", "S3", 0, "P1m1 -> I2m1 -> S3 vanishes: mesh ending at S3"},
      {"S3", "P2", 1, "arrow S3 -> P2"},
      {"S3", "S2", 0, "S3 -> P2 -> S2 vanishes: mesh ending at S2"},
      {"I2m1", "S3", 1, "arrow I2m1 -> S3"},
      {"I2m1", "S1m1", 1, "arrow I2m1 -> S1m1"},
      {"I2m1", "P2", 1, "paths via S3 and via S1m1 agree up to sign: mesh ending at P2"},
      {"I2m1", "S2", 0, "both paths factor through S3 -> P2 -> S2 = 0"},
      {"P2", "S2", 1, "arrow P2 -> S2"},
      {"S1m1", "P2", 1, "arrow S1m1 -> P2"},
      {"S1m1", "S2", 1, "path S1m1 -> P2 -> S2"},
  };
  for (const auto& e : hom) {
    const Index f = spec.require(e.from);
    const Index t = spec.require(e.to);
    spec.hom(f, t) = e.dim;
    spec.hom_notes[{f, t}] = e.note;
  }

  // dim E(C, A) = dim Hom(C, A[1]); nonzero exactly for the non-split
  // conflations below.
  spec.ext = DimMatrix(spec.size());
  const std::pair<const char*, const char*> ext[] = {
      {"S3", "P1m1"}, {"S2", "S3"}, {"S2", "I2m1"}, {"P2", "I2m1"}, {"P2", "P1m1"}};
  for (const auto& [c, a] : ext) (*spec.ext)(spec.require(c), spec.require(a)) = 1;

  struct Row {
    std::initializer_list<std::string_view> a, b, c;
    const char* note;
  };
  const Row conflations[] = {
      {{"P1m1"}, {"I2m1"}, {"S3"}, "mesh ending at S3"},
      {{"S3"}, {"P2"}, {"S2"}, "mesh ending at S2"},
      {{"I2m1"}, {"S1m1", "S3"}, {"P2"}, "mesh ending at P2"},
      {{"P1m1"}, {"S1m1"}, {"P2"}, "composite P1m1 >-> I2m1 >-> S1m1"},
      {{"I2m1"}, {"S1m1"}, {"S2"}, "top step of the filtration of S1m1"},
  };
  for (const auto& row : conflations) {
    spec.conflations.push_back(
        {spec.object(row.a), spec.object(row.b), spec.object(row.c), true, row.note});
  }
  // A Theta-inflation is the first map of a stable conflation.
  for (const auto& cf : spec.conflations) {
    if (cf.a.is_indecomposable() && !cf.c.is_zero()) {
      spec.inflations.push_back({cf.a.summands()[0], cf.b, ""});
    }
  }
  canonicalize(spec);
  return spec;
}

CategorySpec fixture_db_window(int window, int max_window) {
  if (window < 1 || window > max_window) {
    throw SizeGuardError("db-window: window " + std::to_string(window) + " outside 1.." +
                         std::to_string(max_window));
  }
  // Bottom row from P1[-1] over `window` periods of the shift [2], plus
  // every middle and top vertex whose mod kA_3 triangle lies in the window.
  const int first = 4;
  const int last = first + 8 * window;
  std::vector<GridPoint> points;
  for (int c = first; c <= last; c += 2) points.push_back({c, 1});
  for (int c = first + 1; c <= last - 1; c += 2) points.push_back({c, 2});
  for (int c = first + 2; c <= last - 2; c += 2) points.push_back({c, 3});

  std::vector<Indecomposable> inds;
  std::map<GridPoint, Index> index;
  for (const auto& p : points) {
    index[p] = inds.size();
    inds.push_back({za3_name(p), 0});
  }
  CategorySpec spec = make_spec("db-window-" + std::to_string(window), std::move(inds));
  spec.ext = DimMatrix(spec.size());
  for (const auto& x : points) {
    for (const auto& y : points) {
      spec.hom(index[x], index[y]) = static_cast<Dim>(za3_hom(x, y));
      (*spec.ext)(index[x], index[y]) = static_cast<Dim>(za3_hom(x, za3_shift(y)));
    }
  }

  // Every three consecutive bottom-row objects generate a copy of the
  // final example, translated along the quiver.
  std::set<std::tuple<ObjectRef, ObjectRef, ObjectRef>> seen;
  auto add = [&](ObjectRef a, ObjectRef b, ObjectRef c) {
    if (seen.insert({a, b, c}).second) spec.conflations.push_back({a, b, c, true, ""});
  };
  for (int c = first; c + 4 <= last; c += 2) {
    const Index left = index[{c, 1}];
    const Index mid = index[{c + 2, 1}];
    const Index right = index[{c + 4, 1}];
    const Index mid_left = index[{c + 1, 2}];
    const Index mid_right = index[{c + 3, 2}];
    const Index top = index[{c + 2, 3}];
    add({left}, {mid_left}, {mid});
    add({mid}, {mid_right}, {right});
    add({mid_left}, {top, mid}, {mid_right});
    add({left}, {top}, {mid_right});
    add({mid_left}, {top}, {right});
  }
  for (const auto& cf : spec.conflations) {
    if (cf.a.is_indecomposable() && !cf.c.is_zero()) {
      spec.inflations.push_back({cf.a.summands()[0], cf.b, ""});
    }
  }

  std::vector<Index> generators;
  for (const auto& p : points) {
    if (p.row == 1) generators.push_back(index[p]);
  }
  const FiltResult closure = filt_closure(spec, generators);
  for (Index i = 0; i < spec.size(); ++i) {
    auto l = closure.length(ObjectRef::single(i));
    if (!l) throw std::logic_error("db-window: object outside the filtration closure");
    spec.indecomposables[i].theta = *l;
  }

  spec.metadata.description =
      "Window of D^b(kA_3) for the quiver 1 -> 2 -> 3 spanning " + std::to_string(window) +
      " period(s) of the shift [2] of its AR quiver; generators are the row through P1[-1], "
      "S3, S2, S1 (shifts by even degrees). Xmk / Xpk denote X[-k] / X[k]. Hom and Ext come "
      "from the hammocks of ZA_3; conflations are those of each translated copy of "
      "Filt(P1[-1], S3, S2); theta is the computed filtration length.";
  spec.metadata.complete = true;
  spec.metadata.models_infinite = true;
  canonicalize(spec);
  return spec;
}

CategorySpec fixture(std::string_view name, int window, int max_window) {
  if (name == "final-example") return fixture_final_example();
  if (name == "db-window") return fixture_db_window(window, max_window);
  throw std::invalid_argument("unknown fixture \"" + std::string(name) + "\"");
}

}  // namespace grcat::gen
