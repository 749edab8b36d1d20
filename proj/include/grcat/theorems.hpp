#pragma once

// Checker suites. Each suite evaluates a family of statements about length
// categories on a finite instance and reports every statement as a Check.

#include <optional>
#include <string>
#include <vector>

#include "grcat/catspec.hpp"
#include "grcat/chain.hpp"
#include "grcat/measure.hpp"
#include "grcat/report.hpp"
#include "grcat/simpleminded.hpp"

namespace grcat {

/// GR1: x <= y implies measure(x) <= measure(y).
/// GR2: equal measures imply equal length.
/// GR3: theta(x) >= theta(y) and measure(x') < measure(y) for all x' < x
///      imply measure(x) <= measure(y).
Report check_gr_axioms(const CategorySpec& spec);
/// Same checks against caller-supplied measures (negative controls).
Report check_gr_axioms(const CategorySpec& spec, const std::vector<Chain>& measures);

/// For each declared inflation x >-> y_1 + ... + y_n: measure(x) is at most
/// the largest measure I among the y_i, and on equality x is one of the y_i
/// of measure I.
Report check_main_property(const CategorySpec& spec);

/// For each conflation (a, b, c) and each indecomposable x of multiplicity
/// n in a: dim E(c, x) < n forces x to be a summand of b. Skipped when the
/// spec carries no Ext data.
Report check_ext_bound(const CategorySpec& spec);

/// Unit-length measures, measures above Theta_1, the minimal measure and
/// simple sub/quotient conflations under Theta_1 = Theta_inf, and strict
/// growth of theta along the poset.
Report check_small_lemmas(const CategorySpec& spec);

/// Runs the four suites above in id order and merges them.
Report check_all(const CategorySpec& spec);

struct BrauerThrallSummary {
  std::size_t indecomposables = 0;
  Length max_theta = 0;
  MeasureTable table;
  BrickSet theta_inf;
  bool finite_type = false;
  bool models_infinite = false;
  /// Maximal l_X over indecomposables for X = Theta_inf, when every
  /// indecomposable lies in the closure.
  std::optional<Length> max_filtration_length;
  /// The instance is marked as a window of an infinite-type category and
  /// all of its many indecomposables have bounded l_X.
  bool bounded_length_signature = false;
  Report report;
};

/// The three quantities of the Brauer-Thrall equivalence (object count,
/// length bound, GR chain) plus the structural facts checkable on a finite
/// instance.
BrauerThrallSummary brauer_thrall_report(const CategorySpec& spec);

}  // namespace grcat
