#include "torphi_cli/document.hpp"

#include "torphi/error.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace torphi::cli {

using nlohmann::json;

namespace {

class Reader {
public:
    [[noreturn]] static void shape(const std::string& path, const std::string& what) {
        throw InputError(path + ": " + what);
    }

    static const json& field(const json& obj, const std::string& path, const char* key) {
        if (!obj.is_object()) shape(path, "expected an object");
        auto it = obj.find(key);
        if (it == obj.end()) shape(path.empty() ? key : path + "." + key, "missing field");
        return *it;
    }

    static Integer integer(const json& v, const std::string& path) {
        if (v.is_number_integer()) return Integer(v.dump());
        if (!v.is_string()) shape(path, "expected a decimal integer string");
        try {
            return parseInteger(v.get<std::string>());
        } catch (const InputError&) {
            shape(path, "not a decimal integer: \"" + v.get<std::string>() + "\"");
        }
    }

    static IntMatrix matrix(const json& v, const std::string& path, std::size_t rows, std::size_t cols) {
        if (!v.is_array() || v.size() != rows) shape(path, "expected " + std::to_string(rows) + " rows");
        IntMatrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i) {
            const std::string rp = path + "[" + std::to_string(i) + "]";
            if (!v[i].is_array() || v[i].size() != cols) shape(rp, "expected " + std::to_string(cols) + " entries");
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = integer(v[i][j], rp + "[" + std::to_string(j) + "]");
        }
        return m;
    }
};

std::string locate(std::string_view text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

json matrixJson(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_str());
        rows.push_back(row);
    }
    return rows;
}

}  // namespace

LatticeDocument parseLatticeDocument(std::string_view text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError("JSON syntax error at " + locate(text, e.byte == 0 ? 0 : e.byte - 1));
    }
    LatticeDocument doc;
    const json& f = Reader::field(root, "", "field");
    doc.p = Reader::integer(Reader::field(f, "field", "p"), "field.p");
    doc.q = Reader::integer(Reader::field(f, "field", "q"), "field.q");
    doc.w = Reader::integer(Reader::field(f, "field", "w"), "field.w");
    if (doc.w < 1) throw ValidationError("field.w: torsion order must be >= 1");
    const Integer rank = Reader::integer(Reader::field(root, "", "rank"), "rank");
    if (rank < 1 || rank > 64) throw ValidationError("rank: must be between 1 and 64");
    doc.rank = rank.get_ui();
    const std::size_t g = doc.rank;

    const json& coords = Reader::field(root, "", "coords");
    if (!coords.is_array() || coords.size() != g) Reader::shape("coords", "expected " + std::to_string(g) + " rows");
    doc.coords = UnitMatrix(g, doc.w);
    for (std::size_t i = 0; i < g; ++i) {
        const std::string rp = "coords[" + std::to_string(i) + "]";
        if (!coords[i].is_array() || coords[i].size() != g) Reader::shape(rp, "expected " + std::to_string(g) + " entries");
        for (std::size_t j = 0; j < g; ++j) {
            const std::string ep = rp + "[" + std::to_string(j) + "]";
            const json& e = coords[i][j];
            Integer v = Reader::integer(Reader::field(e, ep, "v"), ep + ".v");
            Integer t = Reader::integer(Reader::field(e, ep, "t"), ep + ".t");
            if (t < 0 || t >= doc.w)
                throw ValidationError(ep + ".t: torsion exponent " + t.get_str() + " outside [0, w) with w = " +
                                      doc.w.get_str());
            GenericExponents gen;
            if (auto it = e.find("generic"); it != e.end()) {
                if (!it->is_object()) Reader::shape(ep + ".generic", "expected an object");
                for (const auto& [name, val] : it->items()) {
                    if (name.empty()) Reader::shape(ep + ".generic", "empty unit name");
                    Integer x = Reader::integer(val, ep + ".generic." + name);
                    if (x != 0) gen[name] = x;
                }
            }
            doc.coords(i, j) = CoarseUnit(v, t, doc.w, gen);
        }
    }
    doc.H = Reader::matrix(Reader::field(root, "", "H"), "H", g, g);

    if (auto it = root.find("endomorphisms"); it != root.end()) {
        if (!it->is_array()) Reader::shape("endomorphisms", "expected an array of matrices");
        for (std::size_t k = 0; k < it->size(); ++k)
            doc.endomorphisms.push_back(
                Reader::matrix((*it)[k], "endomorphisms[" + std::to_string(k) + "]", g, g));
    }
    if (auto it = root.find("pairing"); it != root.end()) {
        if (doc.endomorphisms.empty()) Reader::shape("pairing", "a pairing needs endomorphisms");
        doc.pairing = Reader::matrix(*it, "pairing", doc.endomorphisms.size(), g);
    }
    return doc;
}

LatticeDocument readLatticeDocument(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return parseLatticeDocument(ss.str());
    } catch (const InputError& e) {
        throw InputError(path + ": " + e.what());
    } catch (const ValidationError& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

PolarizedLattice LatticeDocument::lattice() const {
    LocalFieldModel field(p, q, w);
    return PolarizedLattice(MultiplicativeLattice(field, coords), RiemannForm{H});
}

std::string serializeLatticeDocument(const LatticeDocument& doc) {
    json root;
    root["field"] = {{"p", doc.p.get_str()}, {"q", doc.q.get_str()}, {"w", doc.w.get_str()}};
    root["rank"] = std::to_string(doc.rank);
    json coords = json::array();
    for (std::size_t i = 0; i < doc.rank; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < doc.rank; ++j) {
            const CoarseUnit& u = doc.coords(i, j);
            json e = {{"v", u.valuation().get_str()}, {"t", u.torsion().get_str()}};
            if (!u.generic().empty()) {
                json gen = json::object();
                for (const auto& [name, x] : u.generic()) gen[name] = x.get_str();
                e["generic"] = gen;
            }
            row.push_back(e);
        }
        coords.push_back(row);
    }
    root["coords"] = coords;
    root["H"] = matrixJson(doc.H);
    if (!doc.endomorphisms.empty()) {
        json ts = json::array();
        for (const auto& t : doc.endomorphisms) ts.push_back(matrixJson(t));
        root["endomorphisms"] = ts;
    }
    if (doc.pairing) root["pairing"] = matrixJson(*doc.pairing);
    return root.dump(2) + "\n";
}

LatticeDocument documentFromLattice(const PolarizedLattice& p) {
    LatticeDocument doc;
    doc.p = p.field().residueChar();
    doc.q = p.field().residueSize();
    doc.w = p.field().torsionOrder();
    doc.rank = p.rank();
    doc.coords = p.lattice().coords();
    doc.H = p.form().H;
    return doc;
}

}  // namespace torphi::cli
