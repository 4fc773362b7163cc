#include "contig/product.hpp"

#include <functional>
#include <string>

namespace contig {

ProductComplex categorical_product(const std::vector<Complex>& factors) {
    if (factors.empty()) throw Error(ErrorCode::EmptyComplex, "product of no factors");
    const int n = static_cast<int>(factors.size());

    double vertices = 1;
    for (const auto& f : factors) vertices *= f.vertex_count();
    if (vertices > kMaxVertices)
        throw Error(ErrorCode::VertexBudgetExceeded,
                    "product would have " + std::to_string(static_cast<long long>(vertices)) +
                        " vertices (cap " + std::to_string(kMaxVertices) + ")");

    ProductComplex p;
    p.factors = factors;
    p.strides.assign(n, 1);
    for (int a = n - 2; a >= 0; --a) p.strides[a] = p.strides[a + 1] * factors[a + 1].vertex_count();
    const int total = p.strides[0] * factors[0].vertex_count();

    std::vector<std::string> labels(total);
    for (int v = 0; v < total; ++v) {
        std::string s = "(";
        for (int a = 0; a < n; ++a) {
            if (a) s += ",";
            s += factors[a].label((v / p.strides[a]) % factors[a].vertex_count());
        }
        s += ")";
        labels[v] = std::move(s);
    }

    // facets are products of factor facets
    std::vector<Mask> facet_masks;
    std::vector<int> pick(n, 0);
    while (true) {
        Mask m = 0;
        std::vector<int> coords(n);
        std::function<void(int)> fill = [&](int a) {
            if (a == n) {
                int v = 0;
                for (int i = 0; i < n; ++i) v += coords[i] * p.strides[i];
                m |= vertex_bit(v);
                return;
            }
            for (int c : mask_vertices(p.factors[a].facets()[pick[a]])) {
                coords[a] = c;
                fill(a + 1);
            }
        };
        fill(0);
        facet_masks.push_back(m);
        int a = n - 1;
        while (a >= 0 && pick[a] + 1 == p.factors[a].facet_count()) pick[a--] = 0;
        if (a < 0) break;
        ++pick[a];
    }
    p.complex = Complex::from_masks(std::move(labels), std::move(facet_masks));
    return p;
}

ProductComplex categorical_power(const Complex& k, int n) {
    if (n < 1) throw Error(ErrorCode::IndexOutOfRange, "power exponent must be at least 1");
    return categorical_product(std::vector<Complex>(static_cast<size_t>(n), k));
}

SimplicialMap projection(const ProductComplex& kn, int axis) {
    if (axis < 1 || axis > kn.arity())
        throw Error(ErrorCode::IndexOutOfRange, "projection axis out of range");
    const int a = axis - 1;
    std::vector<std::uint8_t> assignment(kn.complex.vertex_count());
    for (int v = 0; v < kn.complex.vertex_count(); ++v)
        assignment[v] = static_cast<std::uint8_t>(kn.coordinate(v, a));
    return SimplicialMap::unchecked(kn.complex, kn.factors[a], std::move(assignment));
}

SimplicialMap diagonal(const Complex& k, const ProductComplex& kn) {
    for (const auto& f : kn.factors)
        if (!(f == k)) throw Error(ErrorCode::DomainMismatch, "power is not a power of the given complex");
    std::vector<std::uint8_t> assignment(k.vertex_count());
    for (int v = 0; v < k.vertex_count(); ++v) {
        std::vector<int> coords(kn.arity(), v);
        assignment[v] = static_cast<std::uint8_t>(kn.tuple_vertex(coords));
    }
    return SimplicialMap::unchecked(k, kn.complex, std::move(assignment));
}

SimplicialMap axis_inclusion(const Complex& k, const ProductComplex& kn, int j, int v0) {
    if (j < 1 || j > kn.arity()) throw Error(ErrorCode::IndexOutOfRange, "axis index out of range");
    if (v0 < 0 || v0 >= k.vertex_count())
        throw Error(ErrorCode::UnknownVertex, "basepoint outside the complex");
    for (const auto& f : kn.factors)
        if (!(f == k)) throw Error(ErrorCode::DomainMismatch, "power is not a power of the given complex");
    std::vector<std::uint8_t> assignment(k.vertex_count());
    for (int v = 0; v < k.vertex_count(); ++v) {
        std::vector<int> coords(kn.arity(), v0);
        coords[j - 1] = v;
        assignment[v] = static_cast<std::uint8_t>(kn.tuple_vertex(coords));
    }
    return SimplicialMap::unchecked(k, kn.complex, std::move(assignment));
}

SimplicialMap slab_inclusion(const ProductComplex& kn_minus_1, const ProductComplex& kn, int j,
                             int v0) {
    const int n = kn.arity();
    if (kn_minus_1.arity() != n - 1)
        throw Error(ErrorCode::DomainMismatch, "domain power must have arity one less");
    if (j < 1 || j > n) throw Error(ErrorCode::IndexOutOfRange, "slab index out of range");
    const Complex& k = kn.factors[0];
    if (v0 < 0 || v0 >= k.vertex_count())
        throw Error(ErrorCode::UnknownVertex, "basepoint outside the complex");
    for (const auto& f : kn_minus_1.factors)
        if (!(f == k)) throw Error(ErrorCode::DomainMismatch, "powers have different base complexes");

    std::vector<std::uint8_t> assignment(kn_minus_1.complex.vertex_count());
    for (int v = 0; v < kn_minus_1.complex.vertex_count(); ++v) {
        std::vector<int> coords(n);
        for (int a = 0, b = 0; a < n; ++a)
            coords[a] = (a == j - 1) ? v0 : kn_minus_1.coordinate(v, b++);
        assignment[v] = static_cast<std::uint8_t>(kn.tuple_vertex(coords));
    }
    return SimplicialMap::unchecked(kn_minus_1.complex, kn.complex, std::move(assignment));
}

}  // namespace contig
