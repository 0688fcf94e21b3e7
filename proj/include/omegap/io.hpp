// Matrix file format:
//   {"rows": n, "cols": n, "data": [[[re, im], ...], ...]}
// with data in row-major nested arrays and reals serialized at round-trip
// precision. Malformed files raise MatrixFormatError naming the offending
// field.
#pragma once

#include <json.hpp>

#include <fstream>
#include <stdexcept>
#include <string>

#include "omegap/matrix.hpp"

namespace omegap {

class MatrixFormatError : public std::runtime_error {
public:
    explicit MatrixFormatError(const std::string& what) : std::runtime_error(what) {}
};

inline ComplexMatrix matrix_from_json(const nlohmann::json& j) {
    auto fail = [](const std::string& field, const std::string& why) -> ComplexMatrix {
        throw MatrixFormatError("matrix file: field '" + field + "' " + why);
    };
    if (!j.is_object()) return fail("<root>", "must be a JSON object");
    if (!j.contains("rows") || !j["rows"].is_number_unsigned() || j["rows"].get<std::size_t>() == 0)
        return fail("rows", "must be a positive integer");
    if (!j.contains("cols") || !j["cols"].is_number_unsigned() || j["cols"].get<std::size_t>() == 0)
        return fail("cols", "must be a positive integer");
    const std::size_t rows = j["rows"].get<std::size_t>();
    const std::size_t cols = j["cols"].get<std::size_t>();
    if (!j.contains("data") || !j["data"].is_array() || j["data"].size() != rows)
        return fail("data", "must be an array of " + std::to_string(rows) + " rows");
    ComplexMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const auto& row = j["data"][i];
        const std::string rf = "data[" + std::to_string(i) + "]";
        if (!row.is_array() || row.size() != cols)
            return fail(rf, "must be an array of " + std::to_string(cols) + " entries");
        for (std::size_t k = 0; k < cols; ++k) {
            const auto& cell = row[k];
            const std::string cf = rf + "[" + std::to_string(k) + "]";
            if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number() || !cell[1].is_number())
                return fail(cf, "must be a [re, im] pair of numbers");
            const double re = cell[0].get<double>();
            const double im = cell[1].get<double>();
            if (!std::isfinite(re) || !std::isfinite(im))
                return fail(cf, "must be finite");
            m(i, k) = Complex(re, im);
        }
    }
    return m;
}

inline nlohmann::ordered_json matrix_to_json(const ComplexMatrix& m) {
    nlohmann::ordered_json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    nlohmann::ordered_json data = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (std::size_t k = 0; k < m.cols(); ++k)
            row.push_back({m(i, k).real(), m(i, k).imag()});
        data.push_back(std::move(row));
    }
    j["data"] = std::move(data);
    return j;
}

inline ComplexMatrix load_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MatrixFormatError("matrix file: cannot open '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw MatrixFormatError("matrix file '" + path + "': invalid JSON: " + e.what());
    }
    return matrix_from_json(j);
}

inline void save_matrix(const ComplexMatrix& m, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw MatrixFormatError("matrix file: cannot open '" + path + "' for writing");
    out << matrix_to_json(m).dump(2) << "\n";
}

}  // namespace omegap
