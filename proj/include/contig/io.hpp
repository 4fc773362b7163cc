// Text formats and JSON report builders.
//
// Complex files: one facet per line, comma-separated vertex labels, '#'
// comments, blank lines ignored.  Map files: one 'label -> label' line per
// domain vertex.  Emission is canonical, so emit(parse(f)) is byte-identical
// for canonical-form files.

#ifndef CONTIG_IO_HPP
#define CONTIG_IO_HPP

#include <string>

#include <json.hpp>

#include "contig/complex.hpp"
#include "contig/contiguity.hpp"
#include "contig/distance.hpp"
#include "contig/map.hpp"

namespace contig {

Complex parse_complex_text(const std::string& text);
Complex parse_complex_file(const std::string& path);
std::string emit_complex_text(const Complex& k);

SimplicialMap parse_map_text(const std::string& text, const Complex& domain, const Complex& codomain);
SimplicialMap parse_map_file(const std::string& path, const Complex& domain, const Complex& codomain);
std::string emit_map_text(const SimplicialMap& m);

nlohmann::json map_table_json(const SimplicialMap& m);
nlohmann::json chain_json(const std::vector<SimplicialMap>& chain);
nlohmann::json subcomplex_json(const Subcomplex& s);
nlohmann::json class_decision_json(const ClassDecision& d);
nlohmann::json distance_report_json(const DistanceReport& r);
nlohmann::json error_json(const Error& e);

}  // namespace contig

#endif
