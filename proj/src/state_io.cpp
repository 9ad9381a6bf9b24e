#include "steerscope/state_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "steerscope/errors.hpp"

namespace steerscope {

ParsedState parse_state_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("state JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("state JSON: top level must be an object");
    if (!doc.contains("n_qubits") || !doc["n_qubits"].is_number_integer())
        throw ParseError("state JSON: missing integer field n_qubits");
    if (!doc.contains("matrix") || !doc["matrix"].is_array())
        throw ParseError("state JSON: missing array field matrix");

    const auto n_qubits = doc["n_qubits"].get<long long>();
    if (n_qubits != 2 && n_qubits != 3) throw ParseError("state JSON: n_qubits must be 2 or 3");
    const std::size_t dim = std::size_t{1} << n_qubits;
    const auto& entries = doc["matrix"];
    if (entries.size() != dim * dim)
        throw ParseError("state JSON: matrix must have 4^n_qubits entries");

    std::vector<Complex> values;
    values.reserve(dim * dim);
    for (const auto& pair : entries) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number())
            throw ParseError("state JSON: each entry must be a [re, im] pair of numbers");
        const double re = pair[0].get<double>();
        const double im = pair[1].get<double>();
        if (!std::isfinite(re) || !std::isfinite(im)) throw ParseError("state JSON: non-finite entry");
        values.emplace_back(re, im);
    }
    return {static_cast<int>(n_qubits), ComplexMatrix(dim, std::move(values))};
}

ParsedState read_state_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_state_json(buf.str());
}

nlohmann::json state_to_json(const ComplexMatrix& m) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& z : m.entries()) entries.push_back({z.real(), z.imag()});
    const int n_qubits = m.dim() == 4 ? 2 : m.dim() == 8 ? 3 : 0;
    return {{"n_qubits", n_qubits}, {"matrix", std::move(entries)}};
}

std::string format_real(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace steerscope
