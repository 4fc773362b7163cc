#include "contig/subdivision.hpp"

#include <algorithm>
#include <functional>

namespace contig {

int SubdividedComplex::vertex_of_face(Mask face) const {
    auto it = std::lower_bound(vertex_faces.begin(), vertex_faces.end(), face, face_less);
    if (it != vertex_faces.end() && *it == face) return static_cast<int>(it - vertex_faces.begin());
    return -1;
}

SubdividedComplex barycentric_subdivision(const Complex& k) {
    const auto& faces = k.faces();
    if (faces.size() > kMaxVertices)
        throw Error(ErrorCode::VertexBudgetExceeded,
                    "subdivision would have " + std::to_string(faces.size()) + " vertices (cap " +
                        std::to_string(kMaxVertices) + ")");

    SubdividedComplex sd;
    sd.base = k;
    sd.vertex_faces = faces;  // canonical face order doubles as vertex order

    std::vector<std::string> labels(faces.size());
    for (size_t i = 0; i < faces.size(); ++i) {
        std::string s = "{";
        auto vs = mask_vertices(faces[i]);
        for (size_t j = 0; j < vs.size(); ++j) s += (j ? "," : "") + k.label(vs[j]);
        s += "}";
        labels[i] = std::move(s);
    }

    // facets of sd K are the maximal chains: one per (facet, vertex order)
    std::vector<Mask> facet_masks;
    for (Mask top : k.facets()) {
        std::vector<int> vs = mask_vertices(top);
        std::sort(vs.begin(), vs.end());
        do {
            Mask chain = 0;
            Mask partial = 0;
            bool ok = true;
            for (int v : vs) {
                partial |= vertex_bit(v);
                int id = sd.vertex_of_face(partial);
                if (id < 0) { ok = false; break; }
                chain |= vertex_bit(id);
            }
            if (ok) facet_masks.push_back(chain);
        } while (std::next_permutation(vs.begin(), vs.end()));
    }

    sd.complex = Complex::from_masks(std::move(labels), std::move(facet_masks));
    return sd;
}

SimplicialMap subdivide_map(const SimplicialMap& phi, const SubdividedComplex& sd_dom,
                            const SubdividedComplex& sd_cod) {
    if (!(sd_dom.base == phi.domain()) || !(sd_cod.base == phi.codomain()))
        throw Error(ErrorCode::DomainMismatch, "subdivisions do not match the map's complexes");
    std::vector<std::uint8_t> assignment(sd_dom.complex.vertex_count());
    for (int v = 0; v < sd_dom.complex.vertex_count(); ++v) {
        Mask image = phi.image_of(sd_dom.vertex_faces[v]);
        int w = sd_cod.vertex_of_face(image);
        if (w < 0)
            throw Error(ErrorCode::NotASubcomplex, "image face missing from the codomain subdivision");
        assignment[v] = static_cast<std::uint8_t>(w);
    }
    return SimplicialMap::unchecked(sd_dom.complex, sd_cod.complex, std::move(assignment));
}

}  // namespace contig
