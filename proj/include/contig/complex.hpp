// Finite abstract simplicial complexes over a labeled vertex set.
//
// A Complex stores its inclusion-maximal faces (facets) as the source of
// truth; the full face list is materialized lazily.  Complexes are immutable
// after construction and cheap to copy (shared representation), so all
// operations are pure and safe to call from concurrent workers.

#ifndef CONTIG_COMPLEX_HPP
#define CONTIG_COMPLEX_HPP

#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "contig/types.hpp"

namespace contig {

class Complex {
  public:
    Complex() = default;

    // build_complex: facets given as sets of labels.  Non-maximal entries are
    // absorbed; vertex indices are assigned by sorting labels.
    static Complex from_label_facets(const std::vector<std::vector<std::string>>& facets);

    // Integer-labeled convenience (labels are zero-padded so that the
    // label sort order matches the numeric order).
    static Complex from_facets(const std::vector<std::vector<int>>& facets);

    // Construction with a fixed vertex table and facet masks over it.
    // Used by products and subdivisions, where the vertex order is the
    // structural one rather than label sort order.
    static Complex from_masks(std::vector<std::string> labels, std::vector<Mask> facet_masks);

    bool valid() const { return rep_ != nullptr; }
    int vertex_count() const { return static_cast<int>(rep_->labels.size()); }
    Mask vertex_mask() const { return rep_->all_vertices; }
    const std::string& label(int v) const { return rep_->labels[v]; }
    const std::vector<std::string>& labels() const { return rep_->labels; }
    std::optional<int> index_of(const std::string& label) const;

    const std::vector<Mask>& facets() const { return rep_->facets; }
    int facet_count() const { return static_cast<int>(rep_->facets.size()); }

    // A set of vertices is a face iff it is nonempty and contained in a facet.
    bool is_face(Mask m) const {
        if (m == 0) return false;
        for (Mask f : rep_->facets)
            if (subset(m, f)) return true;
        return false;
    }

    // All faces in canonical order (by dimension, then lexicographically).
    // Materialized on first use; facet lists remain the source of truth.
    const std::vector<Mask>& faces() const;
    std::size_t face_count() const { return faces().size(); }
    // Index of a face in faces(), or -1.
    int face_id(Mask m) const;

    bool edge_path_connected() const;
    // Connected component id per vertex (by 1-skeleton), labeled 0..c-1 in
    // order of least vertex.
    std::vector<int> vertex_components() const;

    // Identity of the shared representation; stable for the lifetime of any
    // copy, used as a cache key.
    const void* rep_key() const { return rep_.get(); }

    // Structural equality: same labels and same facet masks.
    friend bool operator==(const Complex& a, const Complex& b) {
        if (a.rep_ == b.rep_) return true;
        if (!a.rep_ || !b.rep_) return false;
        return a.rep_->labels == b.rep_->labels && a.rep_->facets == b.rep_->facets;
    }

  private:
    struct Rep {
        std::vector<std::string> labels;
        std::vector<Mask> facets;  // antichain, sorted by (popcount, mask)
        Mask all_vertices = 0;
        mutable std::once_flag faces_once;
        mutable std::vector<Mask> faces;
        mutable std::unordered_set<Mask> face_set;
    };
    std::shared_ptr<const Rep> rep_;

    static Complex make(std::vector<std::string> labels, std::vector<Mask> facet_masks);
};

// Canonical face order used everywhere: dimension first, then mask value
// (which is lexicographic order on sorted vertex lists).
inline bool face_less(Mask a, Mask b) {
    int pa = popcount(a), pb = popcount(b);
    if (pa != pb) return pa < pb;
    return a < b;
}

// Reduce a family of faces to its inclusion-maximal members, canonically sorted.
std::vector<Mask> antichain_reduce(std::vector<Mask> faces);

// A subcomplex of a parent complex, stored as the antichain of its facets
// (masks in the parent's vertex indexing).  The parent handle is a cheap
// shared reference, so subcomplexes may outlive the complex they came from.
struct Subcomplex {
    Complex parent;
    std::vector<Mask> facets;  // antichain, canonical order

    Mask vertex_set() const {
        Mask m = 0;
        for (Mask f : facets) m |= f;
        return m;
    }
    bool contains_face(Mask m) const {
        if (m == 0) return false;
        for (Mask f : facets)
            if (subset(m, f)) return true;
        return false;
    }
    std::vector<Mask> all_faces() const;

    friend bool operator==(const Subcomplex& a, const Subcomplex& b) {
        return a.facets == b.facets && a.parent == b.parent;
    }
};

// The subcomplex as a complex in its own right, with the dense vertex
// reindexing needed to treat it as a map domain.
struct PieceComplex {
    Complex complex;
    std::vector<int> to_parent;    // piece vertex -> parent vertex
    std::vector<int> from_parent;  // parent vertex -> piece vertex or -1

    Mask to_parent_mask(Mask piece_face) const {
        Mask m = 0;
        for (int v : mask_vertices(piece_face)) m |= vertex_bit(to_parent[v]);
        return m;
    }
    Mask from_parent_mask(Mask parent_face) const {
        Mask m = 0;
        for (int v : mask_vertices(parent_face)) m |= vertex_bit(from_parent[v]);
        return m;
    }
};

PieceComplex piece_complex(const Subcomplex& s);

// Induced subcomplex on a nonempty vertex subset.
Subcomplex restrict_complex(const Complex& k, Mask vertices);
Subcomplex full_subcomplex(const Complex& k);

enum class SubcomplexMode { induced, all };

// Streams every nonempty subcomplex of k.  mode=induced yields one
// subcomplex per nonempty vertex subset; mode=all yields every
// downward-closed family, i.e. every nonempty antichain of the face poset.
// Throws EnumerationBudgetExceeded after max_count items.
void enumerate_subcomplexes(const Complex& k, SubcomplexMode mode, std::uint64_t max_count,
                            const std::function<void(const Subcomplex&)>& yield);

}  // namespace contig

#endif
