#include "contig/contiguity.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace contig {

namespace {

void require_parallel(const SimplicialMap& f, const SimplicialMap& g) {
    if (!(f.domain() == g.domain()) || !(f.codomain() == g.codomain()))
        throw Error(ErrorCode::DomainMismatch, "maps do not share domain and codomain");
}

std::string key_of(const std::vector<std::uint8_t>& a) {
    return std::string(reinterpret_cast<const char*>(a.data()), a.size());
}

}  // namespace

Mask contiguity_witness(const SimplicialMap& f, const SimplicialMap& g) {
    require_parallel(f, g);
    for (Mask facet : f.domain().facets()) {
        Mask joint = f.image_of(facet) | g.image_of(facet);
        if (!f.codomain().is_face(joint)) return facet;
    }
    return 0;
}

bool is_contiguous(const SimplicialMap& f, const SimplicialMap& g) {
    return contiguity_witness(f, g) == 0;
}

void for_each_contiguous_neighbor(const SimplicialMap& f,
                                  const std::function<void(const std::vector<std::uint8_t>&)>& fn) {
    const Complex& dom = f.domain();
    const Complex& cod = f.codomain();
    const int n = dom.vertex_count();
    const int m = cod.vertex_count();
    const auto& facets = dom.facets();
    const int nf = static_cast<int>(facets.size());

    // facets containing each vertex
    std::vector<std::vector<int>> at(n);
    for (int i = 0; i < nf; ++i)
        for (int v : mask_vertices(facets[i])) at[v].push_back(i);

    // joint image accumulated per facet; starts at f's image and only grows,
    // and a growing set stays a face only if it already is one, so partial
    // unions prune exactly
    std::vector<Mask> joint(nf);
    for (int i = 0; i < nf; ++i) joint[i] = f.image_of(facets[i]);

    std::vector<std::uint8_t> psi(n);
    std::vector<Mask> saved(static_cast<size_t>(n) * nf);

    std::function<void(int)> rec = [&](int v) {
        if (v == n) {
            fn(psi);
            return;
        }
        for (int w = 0; w < m; ++w) {
            bool ok = true;
            for (int i : at[v]) {
                if (!cod.is_face(joint[i] | vertex_bit(w))) { ok = false; break; }
            }
            if (!ok) continue;
            for (int i : at[v]) {
                saved[static_cast<size_t>(v) * nf + i] = joint[i];
                joint[i] |= vertex_bit(w);
            }
            psi[v] = static_cast<std::uint8_t>(w);
            rec(v + 1);
            for (int i : at[v]) joint[i] = saved[static_cast<size_t>(v) * nf + i];
        }
    };
    rec(0);
}

std::vector<SimplicialMap> contiguous_neighbors(const SimplicialMap& f, std::uint64_t max_neighbors) {
    std::vector<SimplicialMap> out;
    for_each_contiguous_neighbor(f, [&](const std::vector<std::uint8_t>& a) {
        if (out.size() >= max_neighbors)
            throw Error(ErrorCode::NeighborBudgetExceeded,
                        "more than " + std::to_string(max_neighbors) + " contiguous neighbors");
        out.push_back(SimplicialMap::unchecked(f.domain(), f.codomain(), a));
    });
    return out;
}

namespace {

// Plain BFS over the contiguity graph from f towards g.
ClassDecision bfs_decide(const SimplicialMap& f, const SimplicialMap& g, const ClassBudget& budget) {
    ClassDecision d;
    d.budget = budget;
    if (f.assignment() == g.assignment()) {
        d.verdict = budget.max_chain >= 1 ? Tri::Equivalent : Tri::Unknown;
        if (d.verdict == Tri::Equivalent) d.chain = {f};
        d.explored = 1;
        return d;
    }

    const std::string start = key_of(f.assignment());
    const std::string goal = key_of(g.assignment());

    std::unordered_set<std::string> visited{start};
    std::unordered_map<std::string, std::string> parent;
    std::deque<std::pair<std::string, std::uint64_t>> queue{{start, 1}};  // (key, chain length)
    bool truncated = false;

    auto build_chain = [&](const std::string& last) {
        std::vector<SimplicialMap> chain;
        std::string cur = last;
        while (true) {
            std::vector<std::uint8_t> a(cur.begin(), cur.end());
            chain.push_back(SimplicialMap::unchecked(f.domain(), f.codomain(), std::move(a)));
            auto it = parent.find(cur);
            if (it == parent.end()) break;
            cur = it->second;
        }
        std::reverse(chain.begin(), chain.end());
        return chain;
    };

    while (!queue.empty()) {
        auto [cur, len] = queue.front();
        queue.pop_front();
        if (len >= budget.max_chain) {
            truncated = true;
            continue;
        }
        std::vector<std::uint8_t> a(cur.begin(), cur.end());
        SimplicialMap m = SimplicialMap::unchecked(f.domain(), f.codomain(), std::move(a));
        bool out_of_budget = false;
        bool found = false;
        for_each_contiguous_neighbor(m, [&](const std::vector<std::uint8_t>& nb) {
            if (found || out_of_budget) return;
            std::string k = key_of(nb);
            if (visited.contains(k)) return;
            if (visited.size() >= budget.max_visits) {
                out_of_budget = true;
                return;
            }
            visited.insert(k);
            parent[k] = cur;
            if (k == goal) {
                found = true;
                return;
            }
            queue.emplace_back(std::move(k), len + 1);
        });
        if (found) {
            d.verdict = Tri::Equivalent;
            d.chain = build_chain(goal);
            d.explored = visited.size();
            return d;
        }
        if (out_of_budget) {
            d.verdict = Tri::Unknown;
            d.explored = visited.size();
            return d;
        }
    }
    d.verdict = truncated ? Tri::Unknown : Tri::NotEquivalent;
    d.explored = visited.size();
    return d;
}

bool zero_dimensional(const Complex& k) {
    for (Mask f : k.facets())
        if (popcount(f) > 1) return false;
    return true;
}

// Class decision when the domain is a disjoint set of points: maps are
// tuples of codomain vertices, one contiguity step moves each coordinate
// within a face, so f ~ g iff coordinates agree componentwise.  The
// certificate walks one coordinate at a time along shortest edge paths.
ClassDecision discrete_decide(const SimplicialMap& f, const SimplicialMap& g, bool want_chain) {
    ClassDecision d;
    const Complex& cod = f.codomain();
    auto comp = cod.vertex_components();
    const int n = f.domain().vertex_count();

    for (int v = 0; v < n; ++v)
        if (comp[f.apply(v)] != comp[g.apply(v)]) {
            d.verdict = Tri::NotEquivalent;
            d.explored = static_cast<std::uint64_t>(n);
            return d;
        }
    if (!want_chain) {
        d.verdict = Tri::Equivalent;
        d.explored = static_cast<std::uint64_t>(n);
        return d;
    }

    // shortest path in the 1-skeleton from a to b
    auto path = [&](int a, int b) {
        std::vector<int> prev(cod.vertex_count(), -1);
        std::deque<int> q{a};
        prev[a] = a;
        while (!q.empty()) {
            int x = q.front();
            q.pop_front();
            if (x == b) break;
            for (Mask facet : cod.facets())
                if (facet & vertex_bit(x))
                    for (int y : mask_vertices(facet))
                        if (prev[y] < 0) {
                            prev[y] = x;
                            q.push_back(y);
                        }
        }
        std::vector<int> p;
        for (int x = b; x != a; x = prev[x]) p.push_back(x);
        std::reverse(p.begin(), p.end());
        return p;  // excludes a
    };

    std::vector<std::uint8_t> cur = f.assignment();
    d.chain.push_back(f);
    for (int v = 0; v < n; ++v) {
        for (int step : path(f.apply(v), g.apply(v))) {
            cur[v] = static_cast<std::uint8_t>(step);
            d.chain.push_back(SimplicialMap::unchecked(f.domain(), f.codomain(), cur));
        }
    }
    d.verdict = Tri::Equivalent;
    d.explored = d.chain.size();
    return d;
}

void append_dedup(std::vector<SimplicialMap>& chain, const SimplicialMap& m) {
    if (!chain.empty() && chain.back().assignment() == m.assignment()) return;
    chain.push_back(m);
}

// Chains restrict to connected components of the domain and componentwise
// chains recombine by moving one component at a time while the others stay
// put (facets never span components), so the decision factors.
ClassDecision componentwise_decide(const SimplicialMap& f, const SimplicialMap& g,
                                   const ClassBudget& budget) {
    const Complex& dom = f.domain();
    auto comp = dom.vertex_components();
    int ncomp = 0;
    for (int c : comp) ncomp = std::max(ncomp, c + 1);

    ClassDecision out;
    out.budget = budget;

    if (ncomp == 1) {
        return zero_dimensional(dom) ? discrete_decide(f, g, budget.want_chain)
                                     : bfs_decide(f, g, budget);
    }

    std::vector<std::uint8_t> current = f.assignment();
    std::vector<SimplicialMap> chain;
    if (budget.want_chain) chain.push_back(f);

    for (int c = 0; c < ncomp; ++c) {
        Mask verts = 0;
        for (int v = 0; v < dom.vertex_count(); ++v)
            if (comp[v] == c) verts |= vertex_bit(v);
        PieceComplex piece = piece_complex(restrict_complex(dom, verts));
        auto restrict_assignment = [&](const std::vector<std::uint8_t>& a) {
            std::vector<std::uint8_t> r(piece.complex.vertex_count());
            for (int v = 0; v < piece.complex.vertex_count(); ++v) r[v] = a[piece.to_parent[v]];
            return r;
        };
        SimplicialMap fc = SimplicialMap::unchecked(piece.complex, f.codomain(),
                                                    restrict_assignment(f.assignment()));
        SimplicialMap gc = SimplicialMap::unchecked(piece.complex, f.codomain(),
                                                    restrict_assignment(g.assignment()));
        ClassDecision dc = zero_dimensional(piece.complex)
                               ? discrete_decide(fc, gc, budget.want_chain)
                               : bfs_decide(fc, gc, budget);
        out.explored += dc.explored;
        if (dc.verdict == Tri::NotEquivalent) {
            out.verdict = Tri::NotEquivalent;
            return out;
        }
        if (dc.verdict == Tri::Unknown) {
            out.verdict = Tri::Unknown;
            return out;
        }
        if (budget.want_chain) {
            for (size_t j = 1; j < dc.chain.size(); ++j) {
                for (int v = 0; v < piece.complex.vertex_count(); ++v)
                    current[piece.to_parent[v]] = dc.chain[j].apply(v);
                chain.push_back(SimplicialMap::unchecked(dom, f.codomain(), current));
            }
        }
    }
    out.verdict = Tri::Equivalent;
    if (budget.want_chain) out.chain = std::move(chain);
    return out;
}

}  // namespace

ClassDecision same_contiguity_class(const SimplicialMap& f, const SimplicialMap& g,
                                    const ClassBudget& budget) {
    require_parallel(f, g);
    if (!budget.core_reduction) return bfs_decide(f, g, budget);

    CollapseTrace dom_core = core(f.domain(), /*with_fold_chain=*/budget.want_chain);
    std::shared_ptr<const CollapseTrace> cod_core_ptr = core_cached(f.codomain());
    const CollapseTrace& cod_core = *cod_core_ptr;

    auto reduce = [&](const SimplicialMap& m) {
        return compose(cod_core.retraction, compose(m, dom_core.inclusion));
    };
    SimplicialMap rf = reduce(f), rg = reduce(g);

    ClassBudget inner = budget;
    inner.core_reduction = false;
    inner.max_chain = UINT64_MAX;  // lifted chains are longer anyway
    ClassDecision reduced = componentwise_decide(rf, rg, inner);

    ClassDecision d;
    d.budget = budget;
    d.explored = reduced.explored;
    d.verdict = reduced.verdict;
    if (reduced.verdict != Tri::Equivalent || !budget.want_chain) return d;

    // Lift the core certificate back to the original map space:
    //   f ~ f o (fold) ~ (cofold) o f o (fold) = i o rf o t ~ ... ~ i o rg o t
    //     ~ (cofold reversed) o g o (fold) ~ g o (fold reversed) = g
    const auto& dfold = dom_core.fold_chain;  // id ... s o t   (maps dom -> dom)
    const auto& cfold = cod_core.fold_chain;  // id ... i o r   (maps cod -> cod)
    std::vector<SimplicialMap> chain;
    for (const auto& dj : dfold) append_dedup(chain, compose(f, dj));
    const SimplicialMap& st = dfold.back();
    SimplicialMap f_st = compose(f, st), g_st = compose(g, st);
    for (const auto& cj : cfold) append_dedup(chain, compose(cj, f_st));
    for (const auto& h : reduced.chain)
        append_dedup(chain, compose(cod_core.inclusion, compose(h, dom_core.retraction)));
    for (auto it = cfold.rbegin(); it != cfold.rend(); ++it) append_dedup(chain, compose(*it, g_st));
    for (auto it = dfold.rbegin(); it != dfold.rend(); ++it) append_dedup(chain, compose(g, *it));

    if (static_cast<std::uint64_t>(chain.size()) > budget.max_chain) {
        d.verdict = Tri::Unknown;
        return d;
    }
    d.chain = std::move(chain);
    return d;
}

bool replay_certificate(const std::vector<SimplicialMap>& chain, const SimplicialMap& f,
                        const SimplicialMap& g) {
    if (chain.empty()) return false;
    if (!(chain.front() == f) || !(chain.back() == g)) return false;
    for (const auto& m : chain) {
        if (!(m.domain() == f.domain()) || !(m.codomain() == f.codomain())) return false;
        if (first_non_simplicial_facet(m.domain(), m.codomain(), m.assignment())) return false;
    }
    for (size_t i = 0; i + 1 < chain.size(); ++i)
        if (!is_contiguous(chain[i], chain[i + 1])) return false;
    return true;
}

}  // namespace contig
