// Barycentric subdivision: sd K has one vertex per face of K, and its
// simplices are the chains of faces under inclusion.  Only the first
// subdivision is provided; iterate by calling again on the result.

#ifndef CONTIG_SUBDIVISION_HPP
#define CONTIG_SUBDIVISION_HPP

#include <vector>

#include "contig/complex.hpp"
#include "contig/map.hpp"

namespace contig {

struct SubdividedComplex {
    Complex base;
    Complex complex;                 // vertices labeled "{a,b,...}" by the face they represent
    std::vector<Mask> vertex_faces;  // sd vertex -> face of base (canonical face order)

    int vertex_of_face(Mask face) const;  // -1 if not a face of base
};

// Requires face_count(base) <= 64 so the subdivision fits the vertex cap.
SubdividedComplex barycentric_subdivision(const Complex& k);

// sd phi : sd K -> sd K', sending the vertex at face sigma to the vertex at
// phi(sigma).
SimplicialMap subdivide_map(const SimplicialMap& phi, const SubdividedComplex& sd_dom,
                            const SubdividedComplex& sd_cod);

}  // namespace contig

#endif
