#include "braidlab/io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "braidlab/errors.hpp"

namespace braidlab {

using json = nlohmann::json;

namespace {

json parse(const std::string& text)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InvalidInput(std::string("malformed JSON: ") + e.what());
    }
}

const json& field(const json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

std::string scalar_text(const json& v, const std::string& where)
{
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<int64_t>());
    throw InvalidInput(where + ": expected an exact string or an integer, got " + v.dump());
}

Rational rat(const json& v, const std::string& where) { return Rational::parse(scalar_text(v, where)); }

int64_t integer(const json& v, const std::string& where)
{
    Rational r = rat(v, where);
    if (!r.is_integer()) throw InvalidInput(where + ": expected an integer");
    return r.num();
}

RatMat rat_matrix(const json& j, const std::string& where)
{
    if (!j.is_array()) throw InvalidInput(where + ": expected a list of rows");
    RatMat m;
    for (size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_array()) throw InvalidInput(where + ": row " + std::to_string(i) + " is not a list");
        RatVec row;
        for (size_t k = 0; k < j[i].size(); ++k) row.push_back(rat(j[i][k], where));
        m.push_back(row);
    }
    return m;
}

Matrix cyc_matrix(const json& j, const std::string& where)
{
    if (!j.is_array()) throw InvalidInput(where + ": expected a list of rows");
    std::vector<std::vector<CycNum>> rows;
    for (const auto& r : j) {
        if (!r.is_array() || (!rows.empty() && r.size() != rows[0].size()))
            throw InvalidInput(where + ": rows must be lists of equal length");
        std::vector<CycNum> row;
        for (const auto& v : r) row.push_back(parse_cyc(scalar_text(v, where)));
        rows.push_back(row);
    }
    if (rows.empty()) return Matrix();
    return Matrix::from_rows(rows);
}

Degree degree_of(const GradingGroup& g, const json& j, const std::string& where)
{
    if (!j.is_array() || j.size() != g.ngens())
        throw InvalidInput(where + ": a degree needs " + std::to_string(g.ngens()) + " coordinates");
    RatVec f;
    std::vector<int64_t> t;
    for (size_t i = 0; i < j.size(); ++i) {
        if ((int)i < g.free_rank)
            f.push_back(rat(j[i], where));
        else
            t.push_back(integer(j[i], where));
    }
    return g.make(f, t);
}

json degree_json(const Degree& d)
{
    json a = json::array();
    for (const auto& r : d.free_part) a.push_back(r.str());
    for (auto t : d.torsion_part) a.push_back(t);
    return a;
}

json rat_matrix_json(const RatMat& m)
{
    json a = json::array();
    for (const auto& row : m) {
        json r = json::array();
        for (const auto& v : row) r.push_back(v.str());
        a.push_back(r);
    }
    return a;
}

json cyc_matrix_json(const Matrix& m)
{
    json a = json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        json r = json::array();
        for (size_t j = 0; j < m.cols(); ++j) r.push_back(m(i, j).str());
        a.push_back(r);
    }
    return a;
}

BraidedObject braided_from(const json& j)
{
    const json& g = field(j, "group");
    int free_rank = (int)integer(field(g, "free_rank"), "group.free_rank");
    std::vector<int64_t> torsion;
    if (g.contains("torsion"))
        for (const auto& t : g.at("torsion")) torsion.push_back(integer(t, "group.torsion"));
    GradingGroup grp(free_rank, torsion);
    Bicharacter b(grp, rat_matrix(field(j, "exponents"), "exponents"));
    BraidedObject x{b, {}};
    for (const auto& d : field(j, "degrees")) x.degrees.push_back(degree_of(grp, d, "degrees"));
    return x;
}

json braided_json(const BraidedObject& x)
{
    const auto& g = x.bichar.group();
    json degs = json::array();
    for (const auto& d : x.degrees) degs.push_back(degree_json(d));
    return {{"group", {{"free_rank", g.free_rank}, {"torsion", g.torsion_orders}}},
            {"exponents", rat_matrix_json(x.bichar.exponents())},
            {"degrees", degs}};
}

} // namespace

BraidedObject braided_object_from_json(const std::string& text) { return braided_from(parse(text)); }

std::string braided_object_to_json(const BraidedObject& x) { return braided_json(x).dump(); }

BraidMatrix braid_matrix_from_json(const std::string& text)
{
    json j = parse(text);
    if (j.is_object() && j.contains("q")) {
        Matrix m = cyc_matrix(j.at("q"), "q");
        if (m.rows() != m.cols()) throw InvalidInput("q must be square");
        BraidMatrix q(m.rows(), std::vector<CycNum>(m.cols()));
        for (size_t a = 0; a < m.rows(); ++a)
            for (size_t b = 0; b < m.cols(); ++b) q[a][b] = m(a, b);
        return q;
    }
    return braid_matrix(braided_from(j));
}

Lattice lattice_from_json(const std::string& text)
{
    json j = parse(text);
    return make_lattice(rat_matrix(field(j, "form"), "form"), rat_matrix(field(j, "basis"), "basis"));
}

std::string lattice_to_json(const Lattice& l)
{
    return json{{"form", rat_matrix_json(l.form)}, {"basis", rat_matrix_json(l.basis)}}.dump();
}

YDModule yd_module_from_json(const std::string& text)
{
    json j = parse(text);
    BraidedObject x = braided_from(field(j, "braiding"));
    std::vector<Degree> degs;
    for (const auto& d : field(j, "degrees")) degs.push_back(degree_of(x.bichar.group(), d, "degrees"));
    Matrix act = cyc_matrix(field(j, "action"), "action");
    Matrix d = cyc_matrix(field(j, "coaction"), "coaction");
    std::string name = j.contains("name") ? scalar_text(j.at("name"), "name") : "";
    return make_yd(x, degs, act, d, name);
}

std::string yd_module_to_json(const YDModule& m)
{
    json degs = json::array();
    for (const auto& d : m.degrees) degs.push_back(degree_json(d));
    json j = {{"braiding", braided_json(m.x)},
              {"degrees", degs},
              {"action", cyc_matrix_json(m.action)},
              {"coaction", cyc_matrix_json(m.delta.size() > 1 ? m.delta[1] : Matrix(m.dim(), m.dim()))},
              {"name", m.name}};
    return j.dump();
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace braidlab
