#include "toraut/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "toraut/error.hpp"

namespace toraut {

namespace {

Int parse_integer(const std::string& token, const std::string& context) {
    if (token.empty()) throw ParseError(context + ": empty integer");
    size_t start = token[0] == '-' || token[0] == '+' ? 1 : 0;
    if (start == token.size()) throw ParseError(context + ": bare sign '" + token + "'");
    for (size_t i = start; i < token.size(); ++i) {
        if (token[i] < '0' || token[i] > '9') {
            throw ParseError(context + ": '" + token + "' is not a decimal integer");
        }
    }
    return Int(token);
}

IntMatrix rows_to_matrix(const std::vector<std::vector<Int>>& rows) {
    if (rows.empty()) throw ParseError("matrix has no rows");
    size_t width = rows.front().size();
    if (width == 0) throw ParseError("matrix has an empty row");
    for (const auto& row : rows) {
        if (row.size() != width) throw ParseError("matrix rows have unequal lengths");
    }
    return IntMatrix::from_rows(rows);
}

Int json_entry_to_int(const nlohmann::json& value, const std::string& context) {
    if (value.is_string()) return parse_integer(value.get<std::string>(), context);
    if (value.is_number_integer()) {
        return Int(value.get<long long>());
    }
    throw ParseError(context + ": entries must be integer strings or integers");
}

}  // namespace

IntMatrix parse_matrix_text(const std::string& text) {
    std::vector<std::vector<Int>> rows;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        std::istringstream tokens(line);
        std::vector<Int> row;
        std::string token;
        while (tokens >> token) row.push_back(parse_integer(token, "matrix text"));
        if (!row.empty()) rows.push_back(std::move(row));
    }
    return rows_to_matrix(rows);
}

IntMatrix parse_matrix_json(const std::string& text) {
    nlohmann::json parsed;
    try {
        parsed = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("matrix JSON: ") + e.what());
    }
    if (!parsed.is_array()) throw ParseError("matrix JSON: expected an array of rows");
    std::vector<std::vector<Int>> rows;
    for (const auto& row : parsed) {
        if (!row.is_array()) throw ParseError("matrix JSON: each row must be an array");
        std::vector<Int> converted;
        for (const auto& entry : row) {
            converted.push_back(json_entry_to_int(entry, "matrix JSON"));
        }
        rows.push_back(std::move(converted));
    }
    return rows_to_matrix(rows);
}

IntMatrix parse_matrix(const std::string& text) {
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
        if (c == '[') return parse_matrix_json(text);
        break;
    }
    return parse_matrix_text(text);
}

IntMatrix load_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream content;
    content << in.rdbuf();
    return parse_matrix(content.str());
}

std::string matrix_to_text(const IntMatrix& m) {
    std::ostringstream out;
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (j > 0) out << ' ';
            out << m.at(i, j);
        }
        out << '\n';
    }
    return out.str();
}

IntPoly parse_poly_json(const std::string& text) {
    nlohmann::json parsed;
    try {
        parsed = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("polynomial JSON: ") + e.what());
    }
    if (!parsed.is_array()) throw ParseError("polynomial JSON: expected a coefficient array");
    std::vector<Int> coeffs;
    for (const auto& entry : parsed) {
        coeffs.push_back(json_entry_to_int(entry, "polynomial JSON"));
    }
    return IntPoly(std::move(coeffs));
}

std::string poly_to_json(const IntPoly& p) {
    nlohmann::json out = nlohmann::json::array();
    for (int i = 0; i <= p.degree(); ++i) out.push_back(p.coeff(i).str());
    return out.dump();
}

}  // namespace toraut
