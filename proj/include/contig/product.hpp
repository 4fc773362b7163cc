// Categorical products of complexes, powers K^n, and the projection,
// diagonal and inclusion map families.
//
// In the categorical product a vertex set is a face exactly when every
// coordinate projection is a face of its factor, so the maximal faces are
// exactly the products of factor facets.

#ifndef CONTIG_PRODUCT_HPP
#define CONTIG_PRODUCT_HPP

#include <vector>

#include "contig/complex.hpp"
#include "contig/map.hpp"

namespace contig {

struct ProductComplex {
    std::vector<Complex> factors;
    Complex complex;  // tuple-labeled; vertex index in mixed radix, first factor most significant
    std::vector<int> strides;

    int arity() const { return static_cast<int>(factors.size()); }
    int coordinate(int vertex, int axis) const {
        return (vertex / strides[axis]) % factors[axis].vertex_count();
    }
    int tuple_vertex(const std::vector<int>& coords) const {
        int v = 0;
        for (int a = 0; a < arity(); ++a) v += coords[a] * strides[a];
        return v;
    }
    // Projection of a face of the product onto one axis.
    Mask project(Mask face, int axis) const {
        Mask m = 0;
        for (int v : mask_vertices(face)) m |= vertex_bit(coordinate(v, axis));
        return m;
    }
    bool face_by_projections(Mask candidate) const {
        if (candidate == 0) return false;
        for (int a = 0; a < arity(); ++a)
            if (!factors[a].is_face(project(candidate, a))) return false;
        return true;
    }
};

ProductComplex categorical_product(const std::vector<Complex>& factors);
ProductComplex categorical_power(const Complex& k, int n);

// p_i : K^n -> K_i (axis is 1-based, as in the usual notation).
SimplicialMap projection(const ProductComplex& kn, int axis);

// Delta : K -> K^n, v -> (v, ..., v); requires a power.
SimplicialMap diagonal(const Complex& k, const ProductComplex& kn);

// The axis inclusion K -> K^n placing the argument in slot j and v0
// elsewhere.
SimplicialMap axis_inclusion(const Complex& k, const ProductComplex& kn, int j, int v0);

// The slab inclusion K^{n-1} -> K^n inserting v0 at slot j.
SimplicialMap slab_inclusion(const ProductComplex& kn_minus_1, const ProductComplex& kn, int j,
                             int v0);

}  // namespace contig

#endif
