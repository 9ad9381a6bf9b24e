#pragma once

// State JSON: {"n_qubits": 2|3, "matrix": [[re, im], ...]} with 4^n_qubits
// row-major entries.

#include <string>
#include <string_view>

#include "json.hpp"
#include "steerscope/matcore.hpp"

namespace steerscope {

struct ParsedState {
    int n_qubits = 0;
    ComplexMatrix matrix;
};

// Throws ParseError on syntax errors, wrong lengths or non-finite numbers.
ParsedState parse_state_json(std::string_view text);
ParsedState read_state_file(const std::string& path);

nlohmann::json state_to_json(const ComplexMatrix& m);

// %.17g
std::string format_real(double x);

}  // namespace steerscope
