#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "fncalc/forms.hpp"

namespace fncalc {

// Compact one-line rendering shared by CLI output and reports:
//   scalar:  "(x) y^z + (-1) x^y"          (a 0-form is "(f)")
//   vector:  "(1) x^y (*) d/z"             ("(*) d/<name>" marks the output leg)
// Entries are ordered by index tuple, then output coordinate; zero is "0".
std::string to_string(const ScalarForm& omega);
std::string to_string(const VectorForm& K);

// Inverse of the compact rendering. Index names may come in any order (the
// permutation sign is applied). `degree` is required to type the form "0".
ScalarForm parse_scalar_form(const Chart& chart, std::string_view text, std::optional<int> degree = std::nullopt);
VectorForm parse_vector_form(const Chart& chart, std::string_view text, std::optional<int> degree = std::nullopt);

// Line-oriented entry list used in files:
//   degree: 2
//   indices: x^y, value: <polynomial>[, output: z]
std::string to_entry_list(const ScalarForm& omega);
std::string to_entry_list(const VectorForm& K);
ScalarForm parse_scalar_entry_list(const Chart& chart, std::string_view text);
VectorForm parse_vector_entry_list(const Chart& chart, std::string_view text);

}  // namespace fncalc
