#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "contig/complex.hpp"
#include "support/oracles.hpp"

using namespace contig;

namespace {

Complex fig31() {
    return Complex::from_facets(
        {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 2}, {2, 4}, {1, 4}, {1, 3}, {0, 3}});
}

Complex triangle_boundary() { return Complex::from_facets({{0, 1}, {0, 2}, {1, 2}}); }

}  // namespace

TEST_CASE("build_complex on the worked examples") {
    Complex k = triangle_boundary();
    CHECK(k.vertex_count() == 3);
    CHECK(k.face_count() == 6);

    Complex point = Complex::from_label_facets({{"a"}});
    CHECK(point.vertex_count() == 1);
    CHECK(point.face_count() == 1);

    Complex pentagon = fig31();
    CHECK(pentagon.vertex_count() == 5);
    CHECK(pentagon.face_count() == 15);
}

TEST_CASE("build_complex canonicalizes and rejects bad input") {
    // redundant faces absorbed
    Complex k = Complex::from_facets({{0, 1}, {1}, {0}});
    CHECK(k.facet_count() == 1);
    CHECK(k.face_count() == 3);

    // vertex indexing follows label sort order
    Complex l = Complex::from_label_facets({{"b", "c"}, {"a", "c"}});
    CHECK(l.label(0) == "a");
    CHECK(l.label(1) == "b");
    CHECK(l.label(2) == "c");

    CHECK_THROWS_WITH_AS(Complex::from_label_facets({}), "complex has no facets", Error);
    CHECK_THROWS_AS(Complex::from_label_facets({{"a"}, {}}), Error);
}

TEST_CASE("downward closure and facet antichain invariants") {
    for (const Complex& k : {fig31(), triangle_boundary(),
                             Complex::from_facets({{0, 1, 2}, {2, 3}, {3, 4, 5}})}) {
        for (Mask f : k.faces())
            for (Mask s = f; s != 0; s = (s - 1) & f) CHECK(k.is_face(s));
        const auto& facets = k.facets();
        for (size_t i = 0; i < facets.size(); ++i)
            for (size_t j = 0; j < facets.size(); ++j)
                if (i != j) CHECK_FALSE(subset(facets[i], facets[j]));
        // every vertex appears in some facet
        Mask all = 0;
        for (Mask f : facets) all |= f;
        CHECK(all == k.vertex_mask());
    }
}

TEST_CASE("edge path connectivity") {
    CHECK(triangle_boundary().edge_path_connected());
    CHECK(fig31().edge_path_connected());
    CHECK_FALSE(Complex::from_facets({{0}, {1}}).edge_path_connected());
    CHECK_FALSE(Complex::from_facets({{0, 1}, {2, 3}}).edge_path_connected());
    CHECK(Complex::from_label_facets({{"a"}}).edge_path_connected());
}

TEST_CASE("restrict_complex gives the induced subcomplex") {
    Complex k = triangle_boundary();

    Subcomplex u1 = restrict_complex(k, mask_of({1, 2}));
    CHECK(u1.facets == std::vector<Mask>{mask_of({1, 2})});
    CHECK(u1.all_faces().size() == 3);

    Subcomplex full = restrict_complex(k, k.vertex_mask());
    CHECK(full.facets == k.facets());

    Complex pentagon = fig31();
    Subcomplex edge = restrict_complex(pentagon, mask_of({0, 1}));
    CHECK(edge.facets == std::vector<Mask>{mask_of({0, 1})});

    CHECK_THROWS_AS(restrict_complex(k, vertex_bit(5)), Error);

    // restriction is exactly { faces contained in S }
    for (Mask s : std::vector<Mask>{mask_of({0, 1}), mask_of({0, 2}), mask_of({0, 1, 2})}) {
        Subcomplex r = restrict_complex(k, s);
        for (Mask f : k.faces()) CHECK(r.contains_face(f) == subset(f, s));
    }
}

TEST_CASE("enumerate_subcomplexes induced mode") {
    Complex k = triangle_boundary();
    int count = 0;
    enumerate_subcomplexes(k, SubcomplexMode::induced, 1000,
                           [&](const Subcomplex&) { ++count; });
    CHECK(count == 7);
}

TEST_CASE("enumerate_subcomplexes all mode lists the antichains") {
    Complex edge = Complex::from_facets({{0, 1}});
    std::vector<std::vector<Mask>> seen;
    enumerate_subcomplexes(edge, SubcomplexMode::all, 1000,
                           [&](const Subcomplex& s) { seen.push_back(s.facets); });
    REQUIRE(seen.size() == 4);
    auto has = [&](std::vector<Mask> antichain) {
        return std::find(seen.begin(), seen.end(), antichain) != seen.end();
    };
    CHECK(has({mask_of({0})}));
    CHECK(has({mask_of({1})}));
    CHECK(has({mask_of({0}), mask_of({1})}));
    CHECK(has({mask_of({0, 1})}));
}

TEST_CASE("all-mode stream size equals the antichain count") {
    for (const Complex& k :
         {triangle_boundary(), Complex::from_facets({{0, 1, 2}}),
          Complex::from_facets({{0, 1}, {1, 2}}), Complex::from_facets({{0, 1, 2}, {2, 3}})}) {
        REQUIRE(k.face_count() <= 12);
        std::uint64_t fast = 0;
        enumerate_subcomplexes(k, SubcomplexMode::all, 1u << 20,
                               [&](const Subcomplex&) { ++fast; });
        CHECK(fast == oracle::count_nonempty_antichains(k));
    }
}

TEST_CASE("the stream stops with a budget error") {
    Complex k = fig31();
    int seen = 0;
    CHECK_THROWS_AS(
        enumerate_subcomplexes(k, SubcomplexMode::all, 10, [&](const Subcomplex&) { ++seen; }),
        Error);
    CHECK(seen == 10);
}

TEST_CASE("figure 3.2's U0 appears in all mode but not induced mode") {
    Complex k = triangle_boundary();
    std::vector<Mask> u0{mask_of({0, 1}), mask_of({0, 2})};
    bool in_all = false, in_induced = false;
    enumerate_subcomplexes(k, SubcomplexMode::all, 1000, [&](const Subcomplex& s) {
        if (s.facets == u0) in_all = true;
    });
    enumerate_subcomplexes(k, SubcomplexMode::induced, 1000, [&](const Subcomplex& s) {
        if (s.facets == u0) in_induced = true;
    });
    CHECK(in_all);
    CHECK_FALSE(in_induced);
}
