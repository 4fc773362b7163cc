#include "contig/io.hpp"

#include <fstream>
#include <sstream>

namespace contig {

namespace {

std::string strip(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

Complex parse_complex_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    std::vector<std::vector<std::string>> facets;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line = line.substr(0, h);
        line = strip(line);
        if (line.empty()) continue;
        std::vector<std::string> facet;
        std::istringstream ls(line);
        std::string tok;
        while (std::getline(ls, tok, ',')) {
            tok = strip(tok);
            if (tok.empty()) throw ParseError(lineno, "empty vertex label on line " + std::to_string(lineno));
            facet.push_back(tok);
        }
        if (facet.empty()) throw ParseError(lineno, "empty facet on line " + std::to_string(lineno));
        facets.push_back(std::move(facet));
    }
    if (facets.empty()) throw Error(ErrorCode::EmptyComplex, "no facets in input");
    return Complex::from_label_facets(facets);
}

Complex parse_complex_file(const std::string& path) { return parse_complex_text(read_file(path)); }

std::string emit_complex_text(const Complex& k) {
    std::string out;
    for (Mask f : k.facets()) {
        auto vs = mask_vertices(f);
        for (size_t i = 0; i < vs.size(); ++i) {
            if (i) out += ",";
            out += k.label(vs[i]);
        }
        out += "\n";
    }
    return out;
}

SimplicialMap parse_map_text(const std::string& text, const Complex& domain, const Complex& codomain) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    std::map<std::string, std::string> table;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line = line.substr(0, h);
        line = strip(line);
        if (line.empty()) continue;
        auto arrow = line.find("->");
        if (arrow == std::string::npos)
            throw ParseError(lineno, "expected 'label -> label' on line " + std::to_string(lineno));
        std::string from = strip(line.substr(0, arrow));
        std::string to = strip(line.substr(arrow + 2));
        if (from.empty() || to.empty())
            throw ParseError(lineno, "expected 'label -> label' on line " + std::to_string(lineno));
        if (table.count(from))
            throw ParseError(lineno, "duplicate assignment for '" + from + "' on line " +
                                         std::to_string(lineno));
        table[from] = to;
    }
    return SimplicialMap::build_from_labels(domain, codomain, table);
}

SimplicialMap parse_map_file(const std::string& path, const Complex& domain, const Complex& codomain) {
    return parse_map_text(read_file(path), domain, codomain);
}

std::string emit_map_text(const SimplicialMap& m) {
    std::string out;
    for (int v = 0; v < m.domain().vertex_count(); ++v)
        out += m.domain().label(v) + " -> " + m.codomain().label(m.apply(v)) + "\n";
    return out;
}

nlohmann::json map_table_json(const SimplicialMap& m) {
    nlohmann::json t = nlohmann::json::object();
    for (int v = 0; v < m.domain().vertex_count(); ++v)
        t[m.domain().label(v)] = m.codomain().label(m.apply(v));
    return t;
}

nlohmann::json chain_json(const std::vector<SimplicialMap>& chain) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& m : chain) a.push_back(map_table_json(m));
    return a;
}

nlohmann::json subcomplex_json(const Subcomplex& s) {
    nlohmann::json piece = nlohmann::json::array();
    for (Mask f : s.facets) {
        nlohmann::json facet = nlohmann::json::array();
        for (int v : mask_vertices(f)) facet.push_back(s.parent.label(v));
        piece.push_back(facet);
    }
    return piece;
}

nlohmann::json class_decision_json(const ClassDecision& d) {
    nlohmann::json j;
    j["verdict"] = d.verdict == Tri::Equivalent      ? "equivalent"
                   : d.verdict == Tri::NotEquivalent ? "not_equivalent"
                                                     : "unknown";
    j["explored"] = d.explored;
    if (d.verdict == Tri::Equivalent) j["chain"] = chain_json(d.chain);
    return j;
}

nlohmann::json distance_report_json(const DistanceReport& r) {
    nlohmann::json j;
    switch (r.kind) {
        case DistanceReport::Kind::Value: j["value"] = r.value; break;
        case DistanceReport::Kind::Infinite: j["value"] = "infinite"; break;
        case DistanceReport::Kind::Unknown: {
            nlohmann::json b;
            b["lower"] = r.lower;
            if (r.upper) b["upper"] = *r.upper;
            j["bounds"] = b;
            break;
        }
    }
    j["mode"] = r.mode == CoverMode::all ? "all" : "induced";
    if (r.solution) {
        nlohmann::json pieces = nlohmann::json::array();
        for (const auto& p : r.solution->pieces) pieces.push_back(subcomplex_json(p));
        j["pieces"] = pieces;
        nlohmann::json certs = nlohmann::json::array();
        for (const auto& c : r.solution->certificates) {
            nlohmann::json chains = nlohmann::json::array();
            for (const auto& chain : c.chains) chains.push_back(chain_json(chain));
            certs.push_back(chains);
        }
        j["certificates"] = certs;
    }
    if (r.uncovered_face) j["uncovered_face"] = *r.uncovered_face;
    if (r.farber_verified) j["farber_verified"] = *r.farber_verified;
    nlohmann::json stats;
    stats["states_probed"] = r.stats.states_probed;
    stats["class_checks"] = r.stats.class_checks;
    stats["maps_visited"] = r.stats.maps_visited;
    stats["cover_nodes"] = r.stats.cover_nodes;
    stats["maximal_pieces"] = r.stats.maximal_pieces;
    stats["budget_hit"] = r.stats.budget_hit;
    j["stats"] = stats;
    return j;
}

nlohmann::json error_json(const Error& e) {
    nlohmann::json j;
    j["error"] = error_name(e.code);
    j["message"] = e.what();
    if (auto* ns = dynamic_cast<const NotSimplicialError*>(&e)) j["witness"] = ns->witness;
    if (auto* pe = dynamic_cast<const ParseError*>(&e)) j["line"] = pe->line;
    return j;
}

}  // namespace contig
