#include "bhk/serialize.hpp"

#include "bhk/errors.hpp"

#include <cctype>

namespace bhk {

Json json_of(const IntMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_i64(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json json_of(const IntVector& v) {
    Json out = Json::array();
    for (const Int& e : v) out.push_back(to_i64(e));
    return out;
}

Json json_of(const RatVector& v) {
    Json out = Json::array();
    for (const Rat& e : v) out.push_back(rat_to_string(e));
    return out;
}

Json json_of_columns(const RatMatrix& m) {
    Json cols = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(json_of(m.col(j)));
    return cols;
}

Json json_of(const DiagonalGroup& g) {
    Json divisors = Json::array();
    for (const Int& d : g.elementary_divisors()) divisors.push_back(to_i64(d));
    Json gens = Json::array();
    for (const RatVector& v : g.generators_mod1()) gens.push_back(json_of(v));
    return Json{{"ambient_rank", g.ambient_rank()},
                {"elementary_divisors", std::move(divisors)},
                {"generators", std::move(gens)},
                {"lattice_basis", json_of_columns(g.lattice_basis())},
                {"order", to_i64(g.order())}};
}

Json json_of(const KernelGroup& g) {
    Json divisors = Json::array();
    for (const Int& d : g.finite_divisors) divisors.push_back(to_i64(d));
    Json gens = Json::array();
    for (const RatVector& v : g.torsion_generators) gens.push_back(json_of(v));
    Json out{{"ambient_rank", g.ambient_rank},
             {"finite_divisors", std::move(divisors)},
             {"finite_order", to_i64(g.finite_order())},
             {"torus_rank", g.torus_rank}};
    if (g.is_finite()) out["generators"] = std::move(gens);
    return out;
}

Json json_of(const CharacterSum& s) {
    Json chars = Json::array();
    for (const IntVector& c : s.characters) chars.push_back(json_of(c));
    return Json{{"ambient", s.ambient},
                {"characters", std::move(chars)},
                {"torus", torus_tag_name(s.tag)}};
}

Json json_of(const WeightLattice& w) {
    Json basis = Json::array();
    for (std::size_t i = 0; i < w.basis_rows.rows(); ++i)
        basis.push_back(json_of(w.basis_rows.row(i)));
    Json out{{"ambient", w.ambient()}, {"basis", std::move(basis)}, {"rank", w.rank()}};
    return out;
}

Json json_of(const CyReport& r) {
    return Json{{"calabi_yau", r.calabi_yau()},
                {"det", to_i64(r.determinant)},
                {"invertible", r.invertible},
                {"sign_uniform", r.sign_uniform},
                {"square", r.square},
                {"sum_matches_det", r.sum_matches_det},
                {"weights_row", json_of(r.weights_row)}};
}

std::string dump_canonical(const Json& j) {
    return j.dump(2) + "\n";
}

namespace {

ModelFile model_from_json(const Json& j) {
    ModelFile f;
    if (!j.is_object()) throw parse_error("model file must be a JSON object");
    if (!j.contains("variables") || !j["variables"].is_array())
        throw parse_error("model file needs a 'variables' array");
    for (const auto& v : j["variables"]) {
        if (!v.is_string()) throw parse_error("'variables' entries must be strings");
        f.variables.push_back(v.get<std::string>());
    }
    if (!j.contains("polynomial") || !j["polynomial"].is_string())
        throw parse_error("model file needs a 'polynomial' string");
    f.polynomial = j["polynomial"].get<std::string>();
    if (j.contains("group")) {
        if (!j["group"].is_array()) throw parse_error("'group' must be an array of generators");
        for (const auto& gen : j["group"]) {
            if (!gen.is_array()) throw parse_error("group generators must be arrays");
            RatVector v;
            for (const auto& e : gen) {
                if (e.is_string())
                    v.push_back(rat_from_string(e.get<std::string>()));
                else if (e.is_number_integer())
                    v.push_back(Rat(e.get<long long>()));
                else
                    throw parse_error("group entries must be rational strings");
            }
            f.group_generators.push_back(std::move(v));
        }
    }
    return f;
}

// Minimal TOML reader for the model-file schema: string values and string
// arrays (one level of nesting for the group), '#' comments. A value must
// fit on one line.
class TomlReader {
public:
    explicit TomlReader(const std::string& text) : text_(text) {}

    ModelFile read() {
        ModelFile f;
        bool saw_poly = false;
        std::size_t line_no = 0;
        std::size_t pos = 0;
        while (pos <= text_.size()) {
            const std::size_t eol = text_.find('\n', pos);
            std::string line = text_.substr(pos, eol == std::string::npos ? eol : eol - pos);
            pos = eol == std::string::npos ? text_.size() + 1 : eol + 1;
            ++line_no;
            strip_comment(line);
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            const std::size_t eq = line.find('=');
            if (eq == std::string::npos)
                throw parse_error("TOML line " + std::to_string(line_no) + ": expected key = value");
            const std::string key = trim(line.substr(0, eq));
            const std::string value = trim(line.substr(eq + 1));
            if (key == "polynomial") {
                f.polynomial = parse_string(value, line_no);
                saw_poly = true;
            } else if (key == "variables") {
                for (const std::string& s : parse_string_array(value, line_no))
                    f.variables.push_back(s);
            } else if (key == "group") {
                for (const std::string& inner : parse_array_of_arrays(value, line_no)) {
                    RatVector v;
                    for (const std::string& s : parse_string_array(inner, line_no))
                        v.push_back(rat_from_string(s));
                    f.group_generators.push_back(std::move(v));
                }
            } else {
                throw parse_error("TOML line " + std::to_string(line_no) + ": unknown key '" + key + "'");
            }
        }
        if (f.variables.empty()) throw parse_error("model file needs a 'variables' array");
        if (!saw_poly) throw parse_error("model file needs a 'polynomial' string");
        return f;
    }

private:
    static void strip_comment(std::string& line) {
        bool in_string = false;
        for (std::size_t i = 0; i < line.size(); ++i) {
            if (line[i] == '"') in_string = !in_string;
            else if (line[i] == '#' && !in_string) {
                line.resize(i);
                return;
            }
        }
    }

    static std::string trim(const std::string& s) {
        const std::size_t b = s.find_first_not_of(" \t\r");
        if (b == std::string::npos) return "";
        const std::size_t e = s.find_last_not_of(" \t\r");
        return s.substr(b, e - b + 1);
    }

    static std::string parse_string(const std::string& v, std::size_t line_no) {
        if (v.size() < 2 || v.front() != '"' || v.back() != '"')
            throw parse_error("TOML line " + std::to_string(line_no) + ": expected a quoted string");
        return v.substr(1, v.size() - 2);
    }

    // splits a bracketed list at top-level commas
    static std::vector<std::string> split_list(const std::string& v, std::size_t line_no) {
        if (v.size() < 2 || v.front() != '[' || v.back() != ']')
            throw parse_error("TOML line " + std::to_string(line_no) + ": expected an array");
        std::vector<std::string> items;
        int depth = 0;
        bool in_string = false;
        std::string cur;
        for (std::size_t i = 1; i + 1 < v.size(); ++i) {
            const char c = v[i];
            if (c == '"') in_string = !in_string;
            if (!in_string) {
                if (c == '[') ++depth;
                if (c == ']') --depth;
                if (c == ',' && depth == 0) {
                    items.push_back(trim(cur));
                    cur.clear();
                    continue;
                }
            }
            cur += c;
        }
        if (!trim(cur).empty()) items.push_back(trim(cur));
        return items;
    }

    static std::vector<std::string> parse_string_array(const std::string& v, std::size_t line_no) {
        std::vector<std::string> out;
        for (const std::string& item : split_list(v, line_no))
            out.push_back(parse_string(item, line_no));
        return out;
    }

    static std::vector<std::string> parse_array_of_arrays(const std::string& v, std::size_t line_no) {
        return split_list(v, line_no);
    }

    const std::string& text_;
};

} // namespace

ModelFile parse_model_file(const std::string& text) {
    const std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw parse_error("empty model file");
    if (text[first] == '{') {
        Json j = Json::parse(text, nullptr, false);
        if (j.is_discarded()) throw parse_error("invalid JSON in model file");
        return model_from_json(j);
    }
    return TomlReader(text).read();
}

QuotientLGModel build_model(const ModelFile& file) {
    ExponentMatrix w = ExponentMatrix::parse(file.polynomial, file.variables);
    DiagonalGroup g = DiagonalGroup::from_generators(file.variables.size(), file.group_generators);
    return QuotientLGModel(std::move(w), std::move(g));
}

Json json_of(const QuotientLGModel& model) {
    Json warnings = Json::array();
    for (const std::string& name : model.exponents().unused_variables())
        warnings.push_back("variable '" + name + "' appears in no monomial");
    return Json{{"exponent_matrix", json_of(model.matrix())},
                {"group", json_of(model.group())},
                {"polynomial", model.exponents().polynomial_string()},
                {"variables", model.exponents().variables()},
                {"warnings", std::move(warnings)}};
}

} // namespace bhk
