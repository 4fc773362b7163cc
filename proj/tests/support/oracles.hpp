// Independent brute-force oracles used by the tests and the acceptance
// suite.  These deliberately avoid the library's search machinery: subсomplex
// counts come from raw subset enumeration, class components from exhaustive
// map-space union-find, and scat / TC_n from their definitions (categorical
// and Farber pieces), with their own cover search.

#ifndef CONTIG_TEST_ORACLES_HPP
#define CONTIG_TEST_ORACLES_HPP

#include <chrono>
#include <cstdint>
#include <vector>

#include "contig/complex.hpp"
#include "contig/contiguity.hpp"
#include "contig/map.hpp"

namespace oracle {

// Every valid simplicial map dom -> cod, in lexicographic assignment order.
std::vector<contig::SimplicialMap> all_simplicial_maps(const contig::Complex& dom,
                                                       const contig::Complex& cod);

// Connected components of the contiguity graph on the given maps, computed
// by pairwise contiguity tests and union-find.  Component ids follow first
// occurrence.
std::vector<int> contiguity_components(const std::vector<contig::SimplicialMap>& maps);

// Number of nonempty antichains of the face poset, by raw subset filtering.
// Only sensible for complexes with at most ~20 faces.
std::uint64_t count_nonempty_antichains(const contig::Complex& k);

// Number of nonempty chains of the face poset (= faces of the subdivision).
std::uint64_t count_nonempty_chains(const contig::Complex& k);

struct Value {
    bool infinite = false;
    int v = -1;
    friend bool operator==(const Value&, const Value&) = default;
};

// scat from its definition: least k with k+1 categorical pieces covering K,
// a piece being categorical when its inclusion is class-equivalent to some
// constant map.  Pieces range over unions of closed facets, which is enough
// because categorical pieces shrink to such unions.
Value scat_from_definition(const contig::Complex& k, std::uint64_t max_visits = 1'000'000);

// TC_n from its definition: least k with k+1 Farber pieces covering K^n,
// a piece being Farber when some simplicial map sigma : piece -> K has
// diagonal o sigma class-equivalent to the piece's inclusion.
Value tc_from_definition(const contig::Complex& k, int n, std::uint64_t max_visits = 1'000'000);

// Explores every dominated-vertex removal order and reports whether all
// terminal cores agree with the given collapsibility verdict.
bool collapse_order_independent(const contig::Complex& k, bool expected_collapsible);

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

}  // namespace oracle

#endif
