#include "contig/collapse.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace contig {

namespace {

// First dominated vertex of the family, smallest vertex then smallest
// dominator; {-1,-1} if none.
std::pair<int, int> first_dominated(const std::vector<Mask>& facets, Mask alive) {
    for (int v : mask_vertices(alive)) {
        Mask common = ~Mask{0};
        bool in_any = false;
        for (Mask f : facets)
            if (f & vertex_bit(v)) {
                common &= f;
                in_any = true;
            }
        if (!in_any) continue;
        common &= ~vertex_bit(v);
        if (common) return {v, lowest_vertex(common)};
    }
    return {-1, -1};
}

std::vector<Mask> delete_vertex(const std::vector<Mask>& facets, int v) {
    std::vector<Mask> next;
    next.reserve(facets.size());
    for (Mask f : facets) next.push_back(f & ~vertex_bit(v));
    return antichain_reduce(std::move(next));
}

}  // namespace

std::vector<std::pair<int, int>> dominated_vertices(const Complex& k) {
    std::vector<std::pair<int, int>> out;
    for (int v = 0; v < k.vertex_count(); ++v) {
        Mask common = ~Mask{0};
        bool in_any = false;
        for (Mask f : k.facets())
            if (f & vertex_bit(v)) {
                common &= f;
                in_any = true;
            }
        if (!in_any) continue;
        common &= ~vertex_bit(v);
        for (int d : mask_vertices(common)) out.emplace_back(v, d);
    }
    return out;
}

CollapseTrace core(const Complex& k, bool with_fold_chain) {
    int n = k.vertex_count();
    std::vector<Mask> facets = k.facets();
    Mask alive = k.vertex_mask();

    CollapseTrace trace;
    // fold accumulated so far, in the original vertex indexing
    std::vector<std::uint8_t> fold(n);
    for (int v = 0; v < n; ++v) fold[v] = static_cast<std::uint8_t>(v);
    if (with_fold_chain) trace.fold_chain.push_back(SimplicialMap::identity(k));

    while (true) {
        auto [v, d] = first_dominated(facets, alive);
        if (v < 0) break;
        trace.steps.emplace_back(k.label(v), k.label(d));
        alive &= ~vertex_bit(v);
        facets = delete_vertex(facets, v);
        // rewrite everything currently landing on v to land on d
        for (int u = 0; u < n; ++u)
            if (fold[u] == v) fold[u] = static_cast<std::uint8_t>(d);
        if (with_fold_chain) trace.fold_chain.push_back(SimplicialMap::unchecked(k, k, fold));
    }

    // dense reindexing of the surviving vertices
    std::vector<int> to_core(n, -1);
    std::vector<std::string> labels;
    for (int v : mask_vertices(alive)) {
        to_core[v] = static_cast<int>(labels.size());
        labels.push_back(k.label(v));
    }
    std::vector<Mask> core_facets;
    core_facets.reserve(facets.size());
    for (Mask f : facets) {
        Mask g = 0;
        for (int v : mask_vertices(f)) g |= vertex_bit(to_core[v]);
        core_facets.push_back(g);
    }
    trace.result = Complex::from_masks(std::move(labels), std::move(core_facets));

    std::vector<std::uint8_t> retraction(n);
    for (int v = 0; v < n; ++v) retraction[v] = static_cast<std::uint8_t>(to_core[fold[v]]);
    trace.retraction = SimplicialMap::unchecked(k, trace.result, std::move(retraction));

    std::vector<std::uint8_t> incl(trace.result.vertex_count());
    {
        auto alive_list = mask_vertices(alive);
        for (size_t i = 0; i < alive_list.size(); ++i) incl[i] = static_cast<std::uint8_t>(alive_list[i]);
    }
    trace.inclusion = SimplicialMap::unchecked(trace.result, k, std::move(incl));
    return trace;
}

bool is_strongly_collapsible(const Complex& k) {
    return core(k, /*with_fold_chain=*/false).collapsed_to_point();
}

std::shared_ptr<const CollapseTrace> core_cached(const Complex& k) {
    struct Entry {
        Complex keep_alive;
        std::shared_ptr<const CollapseTrace> trace;
    };
    static std::mutex mutex;
    static std::map<const void*, Entry> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(k.rep_key());
    if (it != cache.end()) return it->second.trace;
    if (cache.size() >= 64) cache.clear();
    auto trace = std::make_shared<CollapseTrace>(core(k));
    cache.emplace(k.rep_key(), Entry{k, trace});
    return trace;
}

}  // namespace contig
