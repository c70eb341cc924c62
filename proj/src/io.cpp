#include "eqfix/io.hpp"

#include "eqfix/error.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace eqfix {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorKind::Parse, what); }

const json& field(const json& obj, const char* key, const std::string& where) {
    if (!obj.is_object() || !obj.contains(key)) fail(where + ": missing \"" + key + "\"");
    return obj.at(key);
}

std::size_t count_from_json(const json& j, const std::string& where) {
    if (!j.is_number_integer() || j.get<long long>() < 0) fail(where + " must be a non-negative integer");
    return j.get<std::size_t>();
}

}  // namespace

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) {
        if (j.is_number_unsigned()) return Rational(Integer(std::to_string(j.get<unsigned long long>())));
        return Rational(Integer(std::to_string(j.get<long long>())));
    }
    if (j.is_string()) return parse_rational(j.get<std::string>());
    fail("expected an integer or a \"p/q\" string, got " + j.dump());
}

json to_json(const Rational& r) {
    if (is_integer(r) && r.get_num().fits_slong_p()) return r.get_num().get_si();
    return r.get_str();
}

json to_json(const UniPoly& p) {
    json out = json::array();
    for (const auto& c : p.coefficients()) out.push_back(to_json(c));
    return out;
}

UniPoly unipoly_from_json(const json& j) {
    if (!j.is_array()) fail("polynomial must be an array of coefficients");
    std::vector<Rational> coeffs;
    for (const auto& c : j) coeffs.push_back(rational_from_json(c));
    return UniPoly(std::move(coeffs));
}

json to_json(const CubeClass& c) {
    json out = json::array();
    for (const auto& [m, coeff] : c.terms()) {
        json term;
        term["a"] = m.support.elements();
        term["y"] = m.y_power;
        term["c"] = to_json(Rational(coeff));
        out.push_back(std::move(term));
    }
    return out;
}

CubeClass cubeclass_from_json(const json& j) {
    if (!j.is_array()) fail("class must be an array of terms");
    CubeClass out;
    for (const auto& term : j) {
        const auto& a = field(term, "a", "class term");
        if (!a.is_array()) fail("class term \"a\" must be an array");
        CubeClass t = CubeClass::unit();
        for (const auto& e : a) {
            if (!e.is_number_integer()) fail("generator index must be an integer");
            t *= CubeClass::a(e.get<int>());
        }
        t *= pow(CubeClass::y(), static_cast<unsigned>(count_from_json(field(term, "y", "class term"), "y power")));
        const Rational c = rational_from_json(field(term, "c", "class term"));
        if (!is_integer(c)) fail("class coefficients must be integers");
        out += t * Integer(c.get_num());
    }
    return out;
}

json to_json(const FixedPointData& data) {
    json out;
    out["n"] = data.n;
    out["points"] = json::array();
    for (const auto& p : data.points) {
        json jp;
        jp["id"] = p.id;
        jp["weights"] = p.weights;
        if (p.moment) jp["moment"] = to_json(*p.moment);
        out["points"].push_back(std::move(jp));
    }
    return out;
}

InputDocument parse_input(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) fail("document must be a JSON object");

    InputDocument out;
    try {
        out.data.n = count_from_json(field(doc, "n", "document"), "n");
        const auto& points = field(doc, "points", "document");
        if (!points.is_array()) fail("\"points\" must be an array");
        for (std::size_t i = 0; i < points.size(); ++i) {
            const auto& jp = points[i];
            const std::string where = "points[" + std::to_string(i) + "]";
            FixedPoint p;
            const auto& id = field(jp, "id", where);
            if (!id.is_string()) fail(where + ".id must be a string");
            p.id = id.get<std::string>();
            const auto& weights = field(jp, "weights", where);
            if (!weights.is_array()) fail(where + ".weights must be an array");
            for (const auto& w : weights) {
                if (!w.is_number_integer()) fail(where + ".weights must hold integers");
                p.weights.push_back(w.get<Weight>());
            }
            if (jp.contains("moment") && !jp.at("moment").is_null()) p.moment = rational_from_json(jp.at("moment"));
            out.data.points.push_back(std::move(p));
        }

        if (doc.contains("restrictions")) {
            const auto& r = doc.at("restrictions");
            if (!r.is_object()) fail("\"restrictions\" must map point ids to coefficient lists");
            RestrictionTable t = make_table(out.data);
            for (std::size_t p = 0; p < t.point_ids.size(); ++p) {
                const std::string& id = t.point_ids[p];
                if (!r.contains(id)) fail("\"restrictions\" has no entry for point '" + id + "'");
                const auto& row = r.at(id);
                if (!row.is_array() || row.size() != out.data.n)
                    fail("restrictions of '" + id + "' must list n coefficients");
                for (std::size_t j = 0; j < out.data.n; ++j)
                    t.entries[j][p] = UniPoly::monomial(rational_from_json(row[j]), 1);
            }
            if (r.size() != t.point_ids.size()) fail("\"restrictions\" names an unknown point");
            out.table = std::move(t);
        }

        for (const auto& [key, value] : doc.items()) {
            if (key != "n" && key != "points" && key != "restrictions") out.options[key] = value;
        }
    } catch (const json::exception& e) {
        fail(std::string("malformed document: ") + e.what());
    }
    return out;
}

InputDocument load_input(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) fail("cannot open '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_input(buffer.str());
}

}  // namespace eqfix
