// Higher contiguity distance SD, simplicial LS-category and discrete
// topological complexity, by exact cover search.
//
// A piece is good when all restricted maps fall into one contiguity class.
// Goodness is inherited by subcomplexes (certificates restrict), and any
// cover by good subcomplexes can be shrunk piecewise to unions of closed
// facets without changing its size, so the search ranges over facet subsets
// (mode=all) or induced vertex subsets (mode=induced):
//   1. enumerate the maximal good states by monotone descent from the top,
//   2. exact minimum set cover over the facets by branch and bound.
// A facet whose own closure is bad lies in no good subcomplex at all, which
// proves the distance infinite.  Budget exhaustion degrades the result to
// Unknown with bracketing bounds, never to a wrong integer.

#ifndef CONTIG_DISTANCE_HPP
#define CONTIG_DISTANCE_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "contig/complex.hpp"
#include "contig/contiguity.hpp"
#include "contig/map.hpp"
#include "contig/product.hpp"

namespace contig {

enum class CoverMode { all, induced };

struct SearchBudget {
    std::uint64_t max_visits = 1'000'000;       // maps visited per class decision
    std::uint64_t max_states = 1u << 22;        // descent states probed
    std::uint64_t max_pieces = 200'000;         // recorded maximal good states
    std::uint64_t max_cover_nodes = 10'000'000; // set-cover branch and bound nodes
    int threads = 1;
};

// Certificate chains for one good piece: chains[i] links maps[i] and
// maps[i+1], both restricted to the piece (maps on the piece complex).
struct PieceCertificates {
    std::vector<std::vector<SimplicialMap>> chains;
};

struct GoodnessResult {
    Tri verdict = Tri::Unknown;
    PieceCertificates certificates;  // populated when Equivalent
    std::uint64_t maps_visited = 0;
};

// Decides whether all restricted maps are in one contiguity class on omega.
// want_certificates=false skips chain assembly (used while enumerating).
GoodnessResult is_good_piece(const Subcomplex& omega, const std::vector<SimplicialMap>& maps,
                             const SearchBudget& budget = {}, bool want_certificates = true);

struct CoverSolution {
    std::vector<Subcomplex> pieces;
    std::vector<PieceCertificates> certificates;  // parallel to pieces
    int value = 0;                                // |pieces| - 1
};

struct DistanceStats {
    std::uint64_t states_probed = 0;
    std::uint64_t class_checks = 0;
    std::uint64_t maps_visited = 0;
    std::uint64_t cover_nodes = 0;
    std::uint64_t maximal_pieces = 0;
    bool budget_hit = false;
};

struct DistanceReport {
    enum class Kind { Value, Infinite, Unknown };
    Kind kind = Kind::Unknown;
    int value = -1;                    // when kind == Value
    int lower = 0;                     // bracketing bounds when Unknown
    std::optional<int> upper;          // best cover found, if any
    std::optional<CoverSolution> solution;
    CoverMode mode = CoverMode::all;
    DistanceStats stats;
    std::optional<std::vector<std::string>> uncovered_face;  // witness for Infinite
    std::optional<bool> farber_verified;                     // set by discrete_tc

    bool definite() const { return kind != Kind::Unknown; }
};

// SD(maps[0], ..., maps[n-1]); requires n >= 2 maps with shared domain and
// codomain.
DistanceReport contiguity_distance(const std::vector<SimplicialMap>& maps,
                                   CoverMode mode = CoverMode::all, const SearchBudget& budget = {});

// Simplicial LS-category.  On an edge-path-connected complex this is
// SD(id, c_v0) with the canonical basepoint; otherwise pieces are checked
// against a basepoint in their own component, per the definition.
DistanceReport scat(const Complex& k, CoverMode mode = CoverMode::all, const SearchBudget& budget = {});

// TC_n via SD(p_1, ..., p_n) on K^n.  When a witness cover is produced the
// pieces are re-verified against both characterizations of Farber
// subcomplexes: pairwise equivalence of the restricted projections, and one
// projection being a section of the diagonal up to contiguity.
DistanceReport discrete_tc(const Complex& k, int n, CoverMode mode = CoverMode::all,
                           const SearchBudget& budget = {});

// Replays every certificate of a solution against the maps it claims to
// link; used by tests and the acceptance suite.
bool verify_cover_solution(const CoverSolution& sol, const std::vector<SimplicialMap>& maps);

// Internal engine shared by the three entry points, exposed for the custom
// goodness predicates (disconnected scat, oracles in tests).
using GoodnessFn = std::function<GoodnessResult(const Subcomplex&, bool want_certificates)>;
DistanceReport cover_search(const Complex& domain, const GoodnessFn& good, CoverMode mode,
                            const SearchBudget& budget);

}  // namespace contig

#endif
