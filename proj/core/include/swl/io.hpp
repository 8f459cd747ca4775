#pragma once

// File formats: parameter tensors as JSON, matrices as CSV or JSON, and
// small helpers shared by the command-line tool.

#include <string>
#include <vector>

#include "swl/matrix.hpp"
#include "swl/rational.hpp"
#include "swl/tensors.hpp"

namespace swl {

/// {"N":..,"letters":[1..n],"d":..,"entries":[{"row":i,"letter":s,"deg":k,"value":"a/b"}]}
/// Rows and degrees are 0-based, letters 1-based. Zero entries are omitted
/// on output and default to zero on input. Values may mention m.
std::string tensor_to_json(const ParameterTensor& p);
ParameterTensor tensor_from_json(const std::string& text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/// "1,2,5/2" -> rationals
std::vector<Rational> parse_rational_list(const std::string& text);

/// Chooses CSV or JSON from the extension (".json" means JSON).
QMatrix read_matrix_file(const std::string& path);

}  // namespace swl
