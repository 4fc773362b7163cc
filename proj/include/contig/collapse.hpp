// Strong-collapse machinery: dominated vertices, cores and the fold maps
// they induce.
//
// Deleting a vertex v dominated by d is an elementary strong collapse; the
// fold v -> d is simplicial and one contiguity step away from the identity.
// Chaining the folds yields an explicit certificate id ~ inclusion o
// retraction, which the contiguity and distance modules use to shrink
// decision problems to cores without losing certificates.

#ifndef CONTIG_COLLAPSE_HPP
#define CONTIG_COLLAPSE_HPP

#include <memory>
#include <utility>
#include <vector>

#include "contig/complex.hpp"
#include "contig/map.hpp"

namespace contig {

// All pairs (v, d), v != d, such that every facet containing v contains d.
// Canonical order: by v, then by d.
std::vector<std::pair<int, int>> dominated_vertices(const Complex& k);

struct CollapseTrace {
    std::vector<std::pair<std::string, std::string>> steps;  // (removed, dominator) labels
    Complex result;                                          // the core
    SimplicialMap retraction;  // k -> result (dominator chains, then reindexed)
    SimplicialMap inclusion;   // result -> k

    // id_k = f_0 ~c f_1 ~c ... ~c f_m = inclusion o retraction, as maps k -> k.
    // Consecutive maps differ by one fold and are contiguous by domination.
    std::vector<SimplicialMap> fold_chain;

    bool collapsed_to_point() const { return result.vertex_count() == 1; }
};

// Iteratively removes the least dominated vertex (smallest index, smallest
// dominator) until none remains.  with_fold_chain=false skips building the
// certificate chain (retraction and inclusion are always present).
CollapseTrace core(const Complex& k, bool with_fold_chain = true);

// Memoized core for complexes that recur as decision codomains; keyed by
// representation identity, bounded, thread-safe.
std::shared_ptr<const CollapseTrace> core_cached(const Complex& k);

bool is_strongly_collapsible(const Complex& k);

}  // namespace contig

#endif
