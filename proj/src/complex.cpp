#include "contig/complex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace contig {

std::vector<Mask> antichain_reduce(std::vector<Mask> faces) {
    std::sort(faces.begin(), faces.end(), face_less);
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    std::vector<Mask> out;
    // larger faces come later in canonical order, so scan backwards
    for (auto it = faces.rbegin(); it != faces.rend(); ++it) {
        bool covered = false;
        for (Mask kept : out)
            if (subset(*it, kept) && *it != kept) { covered = true; break; }
        if (!covered) out.push_back(*it);
    }
    std::sort(out.begin(), out.end(), face_less);
    return out;
}

Complex Complex::make(std::vector<std::string> labels, std::vector<Mask> facet_masks) {
    auto rep = std::make_shared<Rep>();
    rep->labels = std::move(labels);
    rep->facets = antichain_reduce(std::move(facet_masks));
    for (Mask f : rep->facets) rep->all_vertices |= f;
    Complex c;
    c.rep_ = std::move(rep);
    return c;
}

Complex Complex::from_label_facets(const std::vector<std::vector<std::string>>& facets) {
    if (facets.empty()) throw Error(ErrorCode::EmptyComplex, "complex has no facets");
    std::set<std::string> label_set;
    for (const auto& f : facets) {
        if (f.empty()) throw Error(ErrorCode::EmptyFacet, "facet with no vertices");
        label_set.insert(f.begin(), f.end());
    }
    if (label_set.size() > kMaxVertices)
        throw Error(ErrorCode::VertexBudgetExceeded,
                    "complex has " + std::to_string(label_set.size()) + " vertices (cap " +
                        std::to_string(kMaxVertices) + ")");
    std::vector<std::string> labels(label_set.begin(), label_set.end());
    std::map<std::string, int> index;
    for (int i = 0; i < static_cast<int>(labels.size()); ++i) index[labels[i]] = i;
    std::vector<Mask> masks;
    masks.reserve(facets.size());
    for (const auto& f : facets) {
        Mask m = 0;
        for (const auto& l : f) m |= vertex_bit(index[l]);
        masks.push_back(m);
    }
    return make(std::move(labels), std::move(masks));
}

Complex Complex::from_facets(const std::vector<std::vector<int>>& facets) {
    int max_v = 0;
    for (const auto& f : facets)
        for (int v : f) max_v = std::max(max_v, v);
    size_t width = std::to_string(max_v).size();
    std::vector<std::vector<std::string>> lf;
    lf.reserve(facets.size());
    for (const auto& f : facets) {
        std::vector<std::string> g;
        for (int v : f) {
            std::string s = std::to_string(v);
            g.push_back(std::string(width - s.size(), '0') + s);
        }
        lf.push_back(std::move(g));
    }
    return from_label_facets(lf);
}

Complex Complex::from_masks(std::vector<std::string> labels, std::vector<Mask> facet_masks) {
    if (facet_masks.empty()) throw Error(ErrorCode::EmptyComplex, "complex has no facets");
    if (labels.size() > kMaxVertices)
        throw Error(ErrorCode::VertexBudgetExceeded, "vertex cap exceeded");
    for (Mask f : facet_masks)
        if (f == 0) throw Error(ErrorCode::EmptyFacet, "facet with no vertices");
    return make(std::move(labels), std::move(facet_masks));
}

std::optional<int> Complex::index_of(const std::string& label) const {
    for (int i = 0; i < vertex_count(); ++i)
        if (rep_->labels[i] == label) return i;
    return std::nullopt;
}

const std::vector<Mask>& Complex::faces() const {
    std::call_once(rep_->faces_once, [this] {
        std::unordered_set<Mask> seen;
        for (Mask f : rep_->facets) {
            // enumerate nonempty subsets of f
            for (Mask s = f; s != 0; s = (s - 1) & f) seen.insert(s);
        }
        rep_->faces.assign(seen.begin(), seen.end());
        std::sort(rep_->faces.begin(), rep_->faces.end(), face_less);
        rep_->face_set = std::move(seen);
    });
    return rep_->faces;
}

int Complex::face_id(Mask m) const {
    const auto& fs = faces();
    auto it = std::lower_bound(fs.begin(), fs.end(), m, face_less);
    if (it != fs.end() && *it == m) return static_cast<int>(it - fs.begin());
    return -1;
}

std::vector<int> Complex::vertex_components() const {
    int n = vertex_count();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (Mask f : rep_->facets) {
        auto vs = mask_vertices(f);
        for (size_t i = 1; i < vs.size(); ++i) {
            int a = find(vs[0]), b = find(vs[i]);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    }
    std::vector<int> comp(n, -1);
    int next = 0;
    for (int v = 0; v < n; ++v) {
        int r = find(v);
        if (comp[r] < 0) comp[r] = next++;
        comp[v] = comp[r];
    }
    return comp;
}

bool Complex::edge_path_connected() const {
    auto comp = vertex_components();
    for (int c : comp)
        if (c != 0) return false;
    return true;
}

std::vector<Mask> Subcomplex::all_faces() const {
    std::unordered_set<Mask> seen;
    for (Mask f : facets)
        for (Mask s = f; s != 0; s = (s - 1) & f) seen.insert(s);
    std::vector<Mask> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), face_less);
    return out;
}

PieceComplex piece_complex(const Subcomplex& s) {
    PieceComplex pc;
    Mask verts = s.vertex_set();
    pc.to_parent = mask_vertices(verts);
    pc.from_parent.assign(s.parent.vertex_count(), -1);
    std::vector<std::string> labels;
    for (int i = 0; i < static_cast<int>(pc.to_parent.size()); ++i) {
        pc.from_parent[pc.to_parent[i]] = i;
        labels.push_back(s.parent.label(pc.to_parent[i]));
    }
    std::vector<Mask> facet_masks;
    facet_masks.reserve(s.facets.size());
    for (Mask f : s.facets) facet_masks.push_back(pc.from_parent_mask(f));
    pc.complex = Complex::from_masks(std::move(labels), std::move(facet_masks));
    return pc;
}

Subcomplex restrict_complex(const Complex& k, Mask vertices) {
    if (vertices == 0) throw Error(ErrorCode::EmptyComplex, "empty vertex set");
    if (!subset(vertices, k.vertex_mask()))
        throw Error(ErrorCode::UnknownVertex, "vertex set not contained in the complex");
    std::vector<Mask> within;
    for (Mask f : k.facets()) {
        Mask g = f & vertices;
        if (g != 0) within.push_back(g);
    }
    return Subcomplex{k, antichain_reduce(std::move(within))};
}

Subcomplex full_subcomplex(const Complex& k) { return Subcomplex{k, k.facets()}; }

namespace {

// Recursively extend an antichain over faces[from..): every face is either
// skipped or added when incomparable with the current antichain.
void antichains_rec(const Complex& k, const std::vector<Mask>& faces, size_t from,
                    std::vector<Mask>& current, std::uint64_t max_count, std::uint64_t& produced,
                    const std::function<void(const Subcomplex&)>& yield) {
    if (!current.empty()) {
        if (produced >= max_count)
            throw Error(ErrorCode::EnumerationBudgetExceeded,
                        "subcomplex stream exceeded " + std::to_string(max_count) + " items");
        ++produced;
        yield(Subcomplex{k, antichain_reduce(current)});
    }
    for (size_t i = from; i < faces.size(); ++i) {
        bool ok = true;
        for (Mask m : current)
            if (subset(m, faces[i]) || subset(faces[i], m)) { ok = false; break; }
        if (!ok) continue;
        current.push_back(faces[i]);
        antichains_rec(k, faces, i + 1, current, max_count, produced, yield);
        current.pop_back();
    }
}

}  // namespace

void enumerate_subcomplexes(const Complex& k, SubcomplexMode mode, std::uint64_t max_count,
                            const std::function<void(const Subcomplex&)>& yield) {
    std::uint64_t produced = 0;
    if (mode == SubcomplexMode::induced) {
        Mask all = k.vertex_mask();
        // nonempty vertex subsets in ascending mask order
        for (Mask s = (all - 1) & all;; s = (s - 1) & all) {
            Mask subset_mask = all & ~s;  // complement walk yields ascending order
            if (produced >= max_count)
                throw Error(ErrorCode::EnumerationBudgetExceeded,
                            "subcomplex stream exceeded " + std::to_string(max_count) + " items");
            ++produced;
            yield(restrict_complex(k, subset_mask));
            if (s == 0) break;
        }
        return;
    }
    std::vector<Mask> current;
    antichains_rec(k, k.faces(), 0, current, max_count, produced, yield);
}

}  // namespace contig
