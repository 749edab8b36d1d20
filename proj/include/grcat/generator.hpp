#pragma once

// Ground-truth instances: module categories of the linearly oriented quiver
// 1 -> 2 -> ... -> n over F2, computed by brute-force linear algebra, and two
// transcribed derived-category examples of type A_3.

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "grcat/catspec.hpp"
#include "grcat/f2.hpp"

namespace grcat::gen {

/// The interval representation supported on vertices a..b (1-based).
struct IntervalModule {
  int a = 1;
  int b = 1;

  int theta() const { return b - a + 1; }
  std::string id() const;
  friend auto operator<=>(const IntervalModule&, const IntervalModule&) = default;
};

/// Representation of 1 -> 2 -> ... -> n: vertex spaces F2^dims[i] and
/// arrows[i] : vertex i -> vertex i+1 (0-based).
struct MatrixRep {
  std::vector<int> dims;
  std::vector<f2::LinearMap> arrows;

  int vertices() const { return static_cast<int>(dims.size()); }
  int total_dim() const;
  /// The composite map from vertex i to vertex j >= i.
  f2::LinearMap path(int i, int j) const;
};

/// Intervals of A_n ordered by length, then by left end.
std::vector<IntervalModule> intervals(int n);

MatrixRep interval_rep(int n, const IntervalModule& m);
MatrixRep direct_sum(const std::vector<MatrixRep>& parts);

/// Basis of Hom(v, w): each element is the concatenation of the vertex
/// maps, as a bitmask over the unknown matrix entries.
std::vector<f2::Vec> hom_basis(const MatrixRep& v, const MatrixRep& w);
int hom_dim(const MatrixRep& v, const MatrixRep& w);
/// Some injective homomorphism v -> w exists.
bool has_injective_hom(const MatrixRep& v, const MatrixRep& w);

/// <dim x, dim y> = sum x_i y_i - sum over arrows x_i y_{i+1}.
int euler_form(const std::vector<int>& x, const std::vector<int>& y);

/// Multiplicity of each interval of A_n as a summand of the representation
/// whose composite ranks are given by rank(i, j), 0-based, i <= j.
std::map<IntervalModule, int> interval_multiplicities(int n,
                                                     const std::function<int(int, int)>& rank);

/// Calls visit(sub) for every subrepresentation, given as one subspace per
/// vertex.
void for_each_subrep(const MatrixRep& rep,
                     const std::function<void(const std::vector<f2::Subspace>&)>& visit);

struct AnOptions {
  int max_n = 6;
};

/// The category mod kA_n over F2 with theta = composition length.
CategorySpec generate_an(int n, const AnOptions& options = {});

CategorySpec fixture_final_example();
CategorySpec fixture_db_window(int window, int max_window = 64);
/// "final-example" or "db-window" (window size taken from `window`).
CategorySpec fixture(std::string_view name, int window = 1, int max_window = 64);

/// Position of an indecomposable of D^b(kA_3) in the translation quiver
/// ZA_3: column, and row 1 (bottom) to 3 (top).
struct GridPoint {
  int column = 0;
  int row = 1;
  friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

/// Name such as "P1m1" for P_1[-1] or "S3p2" for S_3[2].
std::string za3_name(GridPoint p);
/// dim Hom(x, y) in D^b(kA_3); 0 or 1.
int za3_hom(GridPoint x, GridPoint y);
GridPoint za3_shift(GridPoint x);

}  // namespace grcat::gen
