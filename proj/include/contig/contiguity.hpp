// Contiguity of simplicial maps and contiguity-class decisions.
//
// Two maps are contiguous when every facet's joint image is a face; class
// membership is decided by breadth-first search over the contiguity graph on
// the space of simplicial maps, which yields minimum-length certificate
// chains.  NotEquivalent is only reported after the start map's connected
// component has been exhausted; budget exhaustion reports Unknown.
//
// An optional strong-collapse reduction replaces domain and codomain by
// their cores before searching.  The reduction is an equivalence (cores are
// strong deformation retracts, so phi ~ psi iff the reduced maps are), and
// certificates found on the cores are lifted back through the explicit fold
// chains, so returned chains are always valid in the original map space.

#ifndef CONTIG_CONTIGUITY_HPP
#define CONTIG_CONTIGUITY_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "contig/collapse.hpp"
#include "contig/complex.hpp"
#include "contig/map.hpp"

namespace contig {

bool is_contiguous(const SimplicialMap& f, const SimplicialMap& g);

// First facet (canonical order) whose joint image is not a face; 0 if the
// maps are contiguous.
Mask contiguity_witness(const SimplicialMap& f, const SimplicialMap& g);

// All simplicial maps contiguous to f, in canonical order (vertex images
// enumerated per-vertex ascending with backtracking).  Includes f itself.
std::vector<SimplicialMap> contiguous_neighbors(const SimplicialMap& f,
                                                std::uint64_t max_neighbors = 1'000'000);

void for_each_contiguous_neighbor(const SimplicialMap& f,
                                  const std::function<void(const std::vector<std::uint8_t>&)>& fn);

enum class Tri { Equivalent, NotEquivalent, Unknown };

struct ClassBudget {
    std::uint64_t max_visits = 1'000'000;  // maps visited by the search
    std::uint64_t max_chain = UINT64_MAX;  // maximum certificate length (maps)
    bool core_reduction = false;           // decide on cores, lift certificates
    bool want_chain = true;                // skip certificate assembly when false
};

struct ClassDecision {
    Tri verdict = Tri::Unknown;
    std::vector<SimplicialMap> chain;  // certificate when Equivalent
    std::uint64_t explored = 0;        // maps visited
    ClassBudget budget;
};

ClassDecision same_contiguity_class(const SimplicialMap& f, const SimplicialMap& g,
                                    const ClassBudget& budget = {});

// Soundness check used by tests and by the acceptance suite: endpoints match
// and every consecutive pair is contiguous.
bool replay_certificate(const std::vector<SimplicialMap>& chain, const SimplicialMap& f,
                        const SimplicialMap& g);

}  // namespace contig

#endif
