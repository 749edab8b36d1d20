#pragma once

// The tower Theta_1 <= Theta_2 <= ... <= Theta_inf of Hom-orthogonal
// minimal-length objects, and semibrick / simple-minded-system status.

#include <vector>

#include "grcat/catspec.hpp"

namespace grcat {

enum class Tristate { no, yes, unknown };

const char* to_string(Tristate t);

struct BrickSet {
  std::vector<Index> members;
  bool semibrick = false;
  Tristate sms = Tristate::unknown;
};

/// Bricks are approximated by dim End = 1; a semibrick additionally needs
/// Hom(X, Y) = 0 for distinct members.
bool is_semibrick(const CategorySpec& spec, const std::vector<Index>& members);

/// Indecomposables of minimal positive length. Throws SpecError on an empty
/// category.
std::vector<Index> theta_one(const CategorySpec& spec);

/// Theta_n for n >= 1: Theta_{n-1} plus the length-n objects with no
/// nonzero Hom to or from any member of Theta_{n-1}.
std::vector<Index> theta_n(const CategorySpec& spec, Length n);

/// Theta_n for n up to the maximal length, where the tower has stabilised.
/// sms is decided by the filtration closure over the members and is
/// unknown when the conflation table is not marked complete.
BrickSet theta_infinity(const CategorySpec& spec);

/// Theta_inf == Theta_1 (finiteness of Theta_1 is automatic here).
bool is_finite_type(const CategorySpec& spec);

}  // namespace grcat
