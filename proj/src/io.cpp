#include "chx/io.hpp"

#include <json.hpp>

namespace chx {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string ring_tag(const Ring& r) { return r.is_z() ? "Z" : "Z/" + r.modulus()->get_str(); }

Ring parse_ring(const std::string& s) {
    if (s == "Z") return Ring::integers();
    if (s.rfind("Z/", 0) == 0) {
        Int m;
        try {
            m = Int(s.substr(2));
        } catch (const std::exception&) {
            throw std::invalid_argument("ring: bad modulus in \"" + s + "\"");
        }
        if (m < 2) throw std::invalid_argument("ring: modulus must be >= 2 in \"" + s + "\"");
        return Ring::zmod(m);
    }
    throw std::invalid_argument("ring: expected \"Z\" or \"Z/<m>\", got \"" + s + "\"");
}

ordered_json matrix_json(const IntMatrix& A) {
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < A.rows; ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < A.cols; ++j) row.push_back(A.at(i, j).get_str());
        rows.push_back(std::move(row));
    }
    return rows;
}

Int parse_int(const ordered_json& j, const std::string& where) {
    if (!j.is_string()) throw std::invalid_argument(where + ": integers must be decimal strings");
    try {
        return Int(j.get<std::string>());
    } catch (const std::exception&) {
        throw std::invalid_argument(where + ": bad integer \"" + j.get<std::string>() + "\"");
    }
}

IntMatrix parse_matrix(const ordered_json& j, int rows, int cols, const std::string& where) {
    if (!j.is_array() || static_cast<int>(j.size()) != rows)
        throw std::invalid_argument(where + ": expected " + std::to_string(rows) + " rows");
    IntMatrix A(rows, cols);
    for (int i = 0; i < rows; ++i) {
        const ordered_json& row = j[i];
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw std::invalid_argument(where + ": row " + std::to_string(i) + " must have " +
                                        std::to_string(cols) + " entries");
        for (int c = 0; c < cols; ++c)
            A.at(i, c) = parse_int(row[c], where + " (" + std::to_string(i) + ", " +
                                              std::to_string(c) + ")");
    }
    return A;
}

// variable row count, fixed column count (relation matrices)
IntMatrix parse_relations(const ordered_json& j, int cols, const std::string& where) {
    if (!j.is_array()) throw std::invalid_argument(where + ": expected an array of rows");
    return parse_matrix(j, static_cast<int>(j.size()), cols, where);
}

int parse_degree_key(const std::string& key, const std::string& where) {
    size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(key, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != key.size())
        throw std::invalid_argument(where + ": bad degree key \"" + key + "\"");
    return value;
}

}  // namespace

std::string write_complex_file(const ComplexFile& f) {
    const ChainComplex& X = f.complex;
    ordered_json out;
    out["format"] = 1;
    out["ring"] = ring_tag(X.ring);
    ordered_json comps = ordered_json::object(), bnds = ordered_json::object();
    if (!X.comps.empty()) {
        for (int m = X.min_deg; m <= X.max_deg; ++m) {
            ordered_json c;
            c["generators"] = X.gens(m);
            c["relations"] = matrix_json(X.at(m).relations);
            comps[std::to_string(m)] = std::move(c);
        }
        for (int m = X.min_deg + 1; m <= X.max_deg; ++m)
            bnds[std::to_string(m)] = matrix_json(X.boundary(m));
    }
    out["components"] = std::move(comps);
    out["boundaries"] = std::move(bnds);
    if (!f.elements.empty()) {
        ordered_json els = ordered_json::object();
        for (const auto& [name, e] : f.elements) {
            ordered_json ej;
            ej["degree"] = e.degree;
            ordered_json coords = ordered_json::array();
            for (const Int& v : e.coords) coords.push_back(v.get_str());
            ej["coords"] = std::move(coords);
            els[name] = std::move(ej);
        }
        out["elements"] = std::move(els);
    }
    return out.dump(2) + "\n";
}

ComplexFile read_complex_file(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("complex file: not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("complex file: top level must be an object");
    if (!j.contains("format") || !j["format"].is_number_integer() || j["format"].get<int>() != 1)
        throw std::invalid_argument("complex file: unsupported format version (expected 1)");
    if (!j.contains("ring") || !j["ring"].is_string())
        throw std::invalid_argument("complex file: missing ring tag");
    Ring ring = parse_ring(j["ring"].get<std::string>());

    if (!j.contains("components") || !j["components"].is_object())
        throw std::invalid_argument("complex file: missing components object");
    const ordered_json& comps = j["components"];

    ComplexFile out;
    if (comps.empty()) {
        out.complex = ChainComplex::empty(ring);
    } else {
        std::map<int, const ordered_json*> by_degree;
        for (auto it = comps.begin(); it != comps.end(); ++it)
            by_degree[parse_degree_key(it.key(), "components")] = &it.value();
        int lo = by_degree.begin()->first, hi = by_degree.rbegin()->first;
        if (static_cast<int>(by_degree.size()) != hi - lo + 1)
            throw std::invalid_argument("complex file: component degrees must be contiguous");

        std::vector<Presentation> parts;
        for (int m = lo; m <= hi; ++m) {
            const ordered_json& c = *by_degree.at(m);
            std::string where = "component at degree " + std::to_string(m);
            if (!c.is_object() || !c.contains("generators") ||
                !c["generators"].is_number_integer() || c["generators"].get<int>() < 0)
                throw std::invalid_argument(where + ": needs a nonnegative generator count");
            int g = c["generators"].get<int>();
            if (!c.contains("relations"))
                throw std::invalid_argument(where + ": missing relations");
            parts.emplace_back(ring, g, parse_relations(c["relations"], g, where));
        }

        const ordered_json bempty = ordered_json::object();
        const ordered_json& bnds =
            j.contains("boundaries") && j["boundaries"].is_object() ? j["boundaries"] : bempty;
        for (auto it = bnds.begin(); it != bnds.end(); ++it) {
            int m = parse_degree_key(it.key(), "boundaries");
            if (m <= lo || m > hi)
                throw std::invalid_argument("boundaries: degree " + std::to_string(m) +
                                            " is outside the window");
        }
        std::vector<IntMatrix> boundaries;
        for (int m = lo + 1; m <= hi; ++m) {
            std::string key = std::to_string(m);
            if (!bnds.contains(key))
                throw std::invalid_argument("boundaries: missing matrix at degree " + key);
            boundaries.push_back(parse_matrix(bnds[key], parts[m - 1 - lo].gens,
                                              parts[m - lo].gens, "boundary at degree " + key));
        }
        out.complex = make_complex(ring, lo, std::move(parts), std::move(boundaries));
    }

    ValidationReport rep = validate(out.complex);
    if (!rep.ok()) throw std::invalid_argument("complex file: " + rep.failures.front());

    if (j.contains("elements")) {
        if (!j["elements"].is_object())
            throw std::invalid_argument("elements: must be an object of named elements");
        for (auto it = j["elements"].begin(); it != j["elements"].end(); ++it) {
            const ordered_json& ej = it.value();
            std::string where = "element \"" + it.key() + "\"";
            if (!ej.is_object() || !ej.contains("degree") || !ej["degree"].is_number_integer() ||
                !ej.contains("coords") || !ej["coords"].is_array())
                throw std::invalid_argument(where + ": needs a degree and a coords array");
            Element e;
            e.degree = ej["degree"].get<int>();
            int g = out.complex.gens(e.degree);
            if (static_cast<int>(ej["coords"].size()) != g)
                throw std::invalid_argument(where + ": expected " + std::to_string(g) +
                                            " coordinates");
            for (int c = 0; c < g; ++c)
                e.coords.push_back(parse_int(ej["coords"][c], where));
            out.elements[it.key()] = std::move(e);
        }
    }
    return out;
}

}  // namespace chx
