#include "baric/algebra_io.hpp"

#include <array>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace baric {

namespace {

using nlohmann::json;

std::size_t line_of_byte(const std::string& text, std::size_t byte) {
    std::size_t line = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i)
        if (text[i] == '\n') ++line;
    return line;
}

FieldSpec field_from_json(const json& f) {
    if (f.is_string()) {
        if (f.get<std::string>() == "Q") return FieldSpec::rationals();
        throw Error("algebra file: field must be \"Q\" or {\"prime\": p}, got \"" +
                    f.get<std::string>() + "\"");
    }
    if (f.is_object() && f.contains("prime") && f["prime"].is_number_unsigned())
        return FieldSpec::prime_field(f["prime"].get<std::uint64_t>());
    throw Error("algebra file: field must be \"Q\" or {\"prime\": p}");
}

}  // namespace

Algebra algebra_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error("algebra file: syntax error at line " +
                    std::to_string(line_of_byte(text, e.byte)) + ": " + e.what());
    }
    if (!doc.is_object()) throw Error("algebra file: top level must be an object");
    for (const std::string key : {"field", "dim", "gamma"})
        if (!doc.contains(key)) throw Error("algebra file: missing \"" + key + "\"");

    FieldSpec spec = field_from_json(doc["field"]);

    if (!doc["dim"].is_number_unsigned() || doc["dim"].get<std::uint64_t>() == 0)
        throw Error("algebra file: \"dim\" must be a positive integer");
    const std::size_t n = doc["dim"].get<std::size_t>();
    if (n > 64) throw Error("algebra file: dimension too large (limit 64)");

    if (!doc["gamma"].is_array()) throw Error("algebra file: \"gamma\" must be an array");

    Algebra a(spec, n);
    std::set<std::array<std::size_t, 3>> seen;
    std::size_t entry = 0;
    for (const json& row : doc["gamma"]) {
        ++entry;
        const std::string where = "algebra file: gamma entry #" + std::to_string(entry);
        if (!row.is_array() || row.size() != 4)
            throw Error(where + ": expected [i, j, k, \"scalar\"]");
        std::size_t idx[3];
        for (int t = 0; t < 3; ++t) {
            if (!row[t].is_number_unsigned())
                throw Error(where + ": index " + std::to_string(t + 1) +
                            " must be a positive integer");
            idx[t] = row[t].get<std::size_t>();
            if (idx[t] < 1 || idx[t] > n)
                throw Error(where + ": index " + std::to_string(idx[t]) + " out of range 1.." +
                            std::to_string(n));
        }
        if (!row[3].is_string()) throw Error(where + ": scalar must be a string");
        if (!seen.insert({idx[0], idx[1], idx[2]}).second)
            throw Error(where + ": duplicate triple (" + std::to_string(idx[0]) + "," +
                        std::to_string(idx[1]) + "," + std::to_string(idx[2]) + ")");
        FieldValue v;
        try {
            v = parse_value(row[3].get<std::string>(), spec);
        } catch (const Error& e) {
            throw Error(where + ": " + e.what());
        }
        a.set_gamma(idx[0] - 1, idx[1] - 1, idx[2] - 1, std::move(v));
    }
    return a;
}

Algebra load_algebra_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return algebra_from_json(buf.str());
}

std::string algebra_to_json(const Algebra& a) {
    json doc;
    if (a.spec().is_rationals())
        doc["field"] = "Q";
    else
        doc["field"] = json{{"prime", a.spec().prime()}};
    doc["dim"] = a.dim();
    json gamma = json::array();
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            for (std::size_t k = 0; k < a.dim(); ++k) {
                const FieldValue& g = a.gamma(i, j, k);
                if (!g.is_zero()) gamma.push_back(json::array({i + 1, j + 1, k + 1, g.str()}));
            }
    doc["gamma"] = std::move(gamma);
    return doc.dump(2);
}

Matrix matrix_from_text(const std::string& text, const FieldSpec& spec) {
    std::vector<Vector> rows;
    std::istringstream lines(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(lines, line)) {
        ++lineno;
        std::istringstream words(line);
        std::vector<FieldValue> entries;
        std::string w;
        while (words >> w) {
            try {
                entries.push_back(parse_value(w, spec));
            } catch (const Error& e) {
                throw Error("matrix text, line " + std::to_string(lineno) + ": " + e.what());
            }
        }
        if (entries.empty()) continue;  // blank line
        rows.push_back(Vector(std::move(entries)));
        if (rows.back().size() != rows.front().size())
            throw Error("matrix text, line " + std::to_string(lineno) + ": ragged row");
    }
    if (rows.empty()) throw Error("matrix text: no rows");
    return Matrix::from_rows(rows);
}

Matrix load_matrix_file(const std::string& path, const FieldSpec& spec) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return matrix_from_text(buf.str(), spec);
}

Vector vector_from_csv(const std::string& text, const FieldSpec& spec) {
    std::vector<FieldValue> entries;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string part = text.substr(start, comma == std::string::npos ? comma : comma - start);
        entries.push_back(parse_value(part, spec));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return Vector(std::move(entries));
}

}  // namespace baric
