#pragma once

// Text and JSON renderings shared by the CLI, the Python module and the
// golden-output tests.

#include <string>

#include "grcat/catspec.hpp"
#include "grcat/measure.hpp"
#include "grcat/theorems.hpp"

namespace grcat {

enum class Format { table, json };

/// Columns: object, length, GR measure; then the line "GR chain: ...".
std::string render_measure_table(const CategorySpec& spec, const MeasureTable& table, Format f);
std::string render_validation(const CategorySpec& spec, const ValidationReport& report, Format f);
std::string render_brauer_thrall(const CategorySpec& spec, const BrauerThrallSummary& s, Format f);
/// "6 indecomposables; max length 3; GR chain of length 3; finite type"
std::string brauer_thrall_headline(const BrauerThrallSummary& s);

}  // namespace grcat
