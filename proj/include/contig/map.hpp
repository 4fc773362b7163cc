// Simplicial maps between complexes: validated vertex assignments together
// with restriction, composition and preimages.

#ifndef CONTIG_MAP_HPP
#define CONTIG_MAP_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "contig/complex.hpp"
#include "contig/types.hpp"

namespace contig {

class SimplicialMap {
  public:
    SimplicialMap() = default;

    // build_map with validation; throws NotSimplicialError with the first
    // failing facet (canonical order) as witness.
    static SimplicialMap build(Complex domain, Complex codomain, std::vector<std::uint8_t> assignment);
    static SimplicialMap build_from_labels(const Complex& domain, const Complex& codomain,
                                           const std::map<std::string, std::string>& table);
    // Unvalidated constructor for internally derived maps that are simplicial
    // by construction (compositions, restrictions of valid maps, ...).
    static SimplicialMap unchecked(Complex domain, Complex codomain,
                                   std::vector<std::uint8_t> assignment);

    static SimplicialMap identity(const Complex& k);
    static SimplicialMap constant(const Complex& domain, const Complex& codomain, int v0);

    const Complex& domain() const { return domain_; }
    const Complex& codomain() const { return codomain_; }
    const std::vector<std::uint8_t>& assignment() const { return map_; }
    int apply(int v) const { return map_[v]; }

    Mask image_of(Mask face) const {
        Mask m = 0;
        for (int v : mask_vertices(face)) m |= vertex_bit(map_[v]);
        return m;
    }

    bool is_identity() const;

    friend bool operator==(const SimplicialMap& a, const SimplicialMap& b) {
        return a.map_ == b.map_ && a.domain_ == b.domain_ && a.codomain_ == b.codomain_;
    }

  private:
    Complex domain_, codomain_;
    std::vector<std::uint8_t> map_;
};

// Validity of an assignment: every facet image is a face (faces follow by
// downward closure).  Returns the first failing facet or 0.
Mask first_non_simplicial_facet(const Complex& domain, const Complex& codomain,
                                const std::vector<std::uint8_t>& assignment);

// phi restricted to a subcomplex of its domain.  The result's domain is the
// piece complex of omega.
SimplicialMap restrict_map(const SimplicialMap& phi, const Subcomplex& omega);
SimplicialMap restrict_map(const SimplicialMap& phi, const PieceComplex& piece);

// psi o phi; requires codomain(phi) == domain(psi).
SimplicialMap compose(const SimplicialMap& psi, const SimplicialMap& phi);

// Faces of the domain whose image lies in a subcomplex of the codomain.
Subcomplex preimage_subcomplex(const SimplicialMap& phi, const Subcomplex& omega);

}  // namespace contig

#endif
