#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "contig/product.hpp"
#include "contig/verify.hpp"

using namespace contig;

namespace {

Complex triangle_boundary() { return Complex::from_facets({{0, 1}, {0, 2}, {1, 2}}); }

}  // namespace

TEST_CASE("categorical_power basics") {
    Complex k = triangle_boundary();

    ProductComplex k1 = categorical_power(k, 1);
    CHECK(k1.complex.vertex_count() == 3);
    CHECK(k1.complex.facets() == k.facets());

    ProductComplex k2 = categorical_power(k, 2);
    CHECK(k2.complex.vertex_count() == 9);
    CHECK(k2.complex.label(0) == "(0,0)");

    // {(0,0),(1,1)} is a face: both projections are the edge {0,1}
    Mask diag_edge = vertex_bit(k2.tuple_vertex({0, 0})) | vertex_bit(k2.tuple_vertex({1, 1}));
    CHECK(k2.complex.is_face(diag_edge));

    // {(0,0),(1,1),(2,2)} is not: the projection {0,1,2} is not a face
    Mask diag_tri = diag_edge | vertex_bit(k2.tuple_vertex({2, 2}));
    CHECK_FALSE(k2.complex.is_face(diag_tri));

    CHECK_THROWS_AS(categorical_power(k, 4), Error);  // 81 vertices exceeds the cap
    CHECK_THROWS_AS(categorical_power(k, 0), Error);
}

TEST_CASE("vertex counts are exact powers") {
    for (int n = 1; n <= 3; ++n) {
        ProductComplex p = categorical_power(triangle_boundary(), n);
        int expect = 1;
        for (int i = 0; i < n; ++i) expect *= 3;
        CHECK(p.complex.vertex_count() == expect);
    }
    Complex edge = Complex::from_facets({{0, 1}});
    CHECK(categorical_power(edge, 5).complex.vertex_count() == 32);
}

TEST_CASE("membership by projections matches the materialized face set") {
    std::mt19937 rng(23);
    for (const Complex& k : {triangle_boundary(), Complex::from_facets({{0, 1}, {1, 2}}),
                             Complex::from_facets({{0, 1, 2}})}) {
        for (int n = 2; n <= 3; ++n) {
            ProductComplex p = categorical_power(k, n);
            std::uniform_int_distribution<int> size(1, 4);
            std::uniform_int_distribution<int> vert(0, p.complex.vertex_count() - 1);
            for (int t = 0; t < 300; ++t) {
                Mask candidate = 0;
                for (int i = size(rng); i > 0; --i) candidate |= vertex_bit(vert(rng));
                CHECK(p.face_by_projections(candidate) == p.complex.is_face(candidate));
            }
        }
    }
}

TEST_CASE("projections, diagonal and inclusions compose as expected") {
    Complex k = triangle_boundary();
    ProductComplex k2 = categorical_power(k, 2);
    ProductComplex k3 = categorical_power(k, 3);

    auto p1 = projection(k2, 1);
    auto p2 = projection(k2, 2);
    CHECK(p1.apply(k2.tuple_vertex({0, 2})) == 0);
    CHECK(p2.apply(k2.tuple_vertex({0, 2})) == 2);
    CHECK_THROWS_AS(projection(k2, 3), Error);

    auto delta = diagonal(k, k2);
    CHECK(compose(p1, delta).is_identity());
    CHECK(compose(p2, delta).is_identity());
    // Delta maps the edge {0,1} onto the face {(0,0),(1,1)}
    CHECK(k2.complex.is_face(delta.image_of(mask_of({0, 1}))));

    for (int j = 1; j <= 2; ++j) {
        auto axis = axis_inclusion(k, k2, j, 0);
        CHECK(compose(projection(k2, j), axis).is_identity());
        auto other = compose(projection(k2, 3 - j), axis);
        CHECK(other == SimplicialMap::constant(k, k, 0));
    }
    CHECK(axis_inclusion(k, k2, 1, 0).apply(1) == k2.tuple_vertex({1, 0}));

    // slab inclusions at n = 2 coincide with axis inclusions
    ProductComplex k1 = categorical_power(k, 1);
    auto slab1 = slab_inclusion(k1, k2, 1, 0);
    auto slab2 = slab_inclusion(k1, k2, 2, 0);
    CHECK(slab1.assignment() == axis_inclusion(k, k2, 2, 0).assignment());
    CHECK(slab2.assignment() == axis_inclusion(k, k2, 1, 0).assignment());

    // n = 3, j = 2: (1,2) -> (1,0,2)
    auto slab = slab_inclusion(k2, k3, 2, 0);
    CHECK(slab.apply(k2.tuple_vertex({1, 2})) == k3.tuple_vertex({1, 0, 2}));
    // composing with the inserted projection gives the constant
    CHECK(compose(projection(k3, 2), slab) ==
          SimplicialMap::constant(k2.complex, k, 0));
}

TEST_CASE("all map families validate as simplicial") {
    std::mt19937 rng(41);
    for (const Complex& k : builtin_corpus()) {
        if (k.vertex_count() > 8) continue;
        for (int n = 1; n <= 2; ++n) {
            if (static_cast<double>(1 << (n * 3)) > kMaxVertices && k.vertex_count() > 4) continue;
            double verts = 1;
            for (int i = 0; i < n; ++i) verts *= k.vertex_count();
            if (verts > kMaxVertices) continue;
            ProductComplex kn = categorical_power(k, n);
            for (int i = 1; i <= n; ++i) {
                auto p = projection(kn, i);
                CHECK(first_non_simplicial_facet(p.domain(), p.codomain(), p.assignment()) == 0);
            }
            auto d = diagonal(k, kn);
            CHECK(first_non_simplicial_facet(d.domain(), d.codomain(), d.assignment()) == 0);
            for (int j = 1; j <= n; ++j)
                for (int v0 = 0; v0 < k.vertex_count(); ++v0) {
                    auto a = axis_inclusion(k, kn, j, v0);
                    CHECK(first_non_simplicial_facet(a.domain(), a.codomain(), a.assignment()) == 0);
                }
        }
    }
}

TEST_CASE("powers preserve edge-path connectivity") {
    for (const Complex& k : builtin_corpus()) {
        double verts = static_cast<double>(k.vertex_count()) * k.vertex_count();
        if (verts > kMaxVertices) continue;
        ProductComplex k2 = categorical_power(k, 2);
        if (k.edge_path_connected()) CHECK(k2.complex.edge_path_connected());
    }
}
