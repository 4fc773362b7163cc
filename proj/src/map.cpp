#include "contig/map.hpp"

#include <algorithm>

namespace contig {

Mask first_non_simplicial_facet(const Complex& domain, const Complex& codomain,
                                const std::vector<std::uint8_t>& assignment) {
    for (Mask f : domain.facets()) {
        Mask img = 0;
        for (int v : mask_vertices(f)) img |= vertex_bit(assignment[v]);
        if (!codomain.is_face(img)) return f;
    }
    return 0;
}

SimplicialMap SimplicialMap::unchecked(Complex domain, Complex codomain,
                                       std::vector<std::uint8_t> assignment) {
    SimplicialMap m;
    m.domain_ = std::move(domain);
    m.codomain_ = std::move(codomain);
    m.map_ = std::move(assignment);
    return m;
}

SimplicialMap SimplicialMap::build(Complex domain, Complex codomain,
                                   std::vector<std::uint8_t> assignment) {
    if (static_cast<int>(assignment.size()) != domain.vertex_count())
        throw Error(ErrorCode::MissingVertex, "assignment is not total on the domain vertices");
    for (std::uint8_t w : assignment)
        if (w >= codomain.vertex_count())
            throw Error(ErrorCode::UnknownVertex, "assignment hits a vertex outside the codomain");
    if (Mask bad = first_non_simplicial_facet(domain, codomain, assignment)) {
        std::vector<std::string> witness;
        for (int v : mask_vertices(bad)) witness.push_back(domain.label(v));
        std::string what = "image of face {";
        for (size_t i = 0; i < witness.size(); ++i) what += (i ? "," : "") + witness[i];
        what += "} is not a face of the codomain";
        throw NotSimplicialError(std::move(witness), what);
    }
    return unchecked(std::move(domain), std::move(codomain), std::move(assignment));
}

SimplicialMap SimplicialMap::build_from_labels(const Complex& domain, const Complex& codomain,
                                               const std::map<std::string, std::string>& table) {
    std::vector<std::uint8_t> assignment(domain.vertex_count());
    for (int v = 0; v < domain.vertex_count(); ++v) {
        auto it = table.find(domain.label(v));
        if (it == table.end())
            throw Error(ErrorCode::MissingVertex,
                        "no image given for vertex '" + domain.label(v) + "'");
        auto w = codomain.index_of(it->second);
        if (!w)
            throw Error(ErrorCode::UnknownVertex,
                        "image vertex '" + it->second + "' is not in the codomain");
        assignment[v] = static_cast<std::uint8_t>(*w);
    }
    for (const auto& [from, to] : table)
        if (!domain.index_of(from))
            throw Error(ErrorCode::UnknownVertex, "vertex '" + from + "' is not in the domain");
    return build(domain, codomain, std::move(assignment));
}

SimplicialMap SimplicialMap::identity(const Complex& k) {
    std::vector<std::uint8_t> a(k.vertex_count());
    for (int v = 0; v < k.vertex_count(); ++v) a[v] = static_cast<std::uint8_t>(v);
    return unchecked(k, k, std::move(a));
}

SimplicialMap SimplicialMap::constant(const Complex& domain, const Complex& codomain, int v0) {
    if (v0 < 0 || v0 >= codomain.vertex_count())
        throw Error(ErrorCode::UnknownVertex, "constant basepoint outside the codomain");
    std::vector<std::uint8_t> a(domain.vertex_count(), static_cast<std::uint8_t>(v0));
    return unchecked(domain, codomain, std::move(a));
}

bool SimplicialMap::is_identity() const {
    if (!(domain_ == codomain_)) return false;
    for (int v = 0; v < domain_.vertex_count(); ++v)
        if (map_[v] != v) return false;
    return true;
}

SimplicialMap restrict_map(const SimplicialMap& phi, const PieceComplex& piece) {
    std::vector<std::uint8_t> a(piece.complex.vertex_count());
    for (int v = 0; v < piece.complex.vertex_count(); ++v)
        a[v] = static_cast<std::uint8_t>(phi.apply(piece.to_parent[v]));
    return SimplicialMap::unchecked(piece.complex, phi.codomain(), std::move(a));
}

SimplicialMap restrict_map(const SimplicialMap& phi, const Subcomplex& omega) {
    if (!(omega.parent == phi.domain()))
        throw Error(ErrorCode::NotASubcomplex, "subcomplex parent is not the map's domain");
    for (Mask f : omega.facets)
        if (!phi.domain().is_face(f))
            throw Error(ErrorCode::NotASubcomplex, "facet is not a face of the parent complex");
    return restrict_map(phi, piece_complex(omega));
}

SimplicialMap compose(const SimplicialMap& psi, const SimplicialMap& phi) {
    if (!(phi.codomain() == psi.domain()))
        throw Error(ErrorCode::DomainMismatch, "codomain of inner map differs from domain of outer map");
    std::vector<std::uint8_t> a(phi.domain().vertex_count());
    for (int v = 0; v < phi.domain().vertex_count(); ++v)
        a[v] = static_cast<std::uint8_t>(psi.apply(phi.apply(v)));
    return SimplicialMap::unchecked(phi.domain(), psi.codomain(), std::move(a));
}

Subcomplex preimage_subcomplex(const SimplicialMap& phi, const Subcomplex& omega) {
    if (!(omega.parent == phi.codomain()))
        throw Error(ErrorCode::NotASubcomplex, "subcomplex parent is not the map's codomain");
    std::vector<Mask> inside;
    for (Mask f : phi.domain().faces())
        if (omega.contains_face(phi.image_of(f))) inside.push_back(f);
    return Subcomplex{phi.domain(), antichain_reduce(std::move(inside))};
}

}  // namespace contig
