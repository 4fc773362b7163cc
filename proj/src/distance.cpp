#include "contig/distance.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace contig {

GoodnessResult is_good_piece(const Subcomplex& omega, const std::vector<SimplicialMap>& maps,
                             const SearchBudget& budget, bool want_certificates) {
    for (const auto& m : maps)
        if (!(m.domain() == maps[0].domain()) || !(m.codomain() == maps[0].codomain()))
            throw Error(ErrorCode::DomainMismatch, "maps do not share domain and codomain");
    if (!(omega.parent == maps[0].domain()))
        throw Error(ErrorCode::DomainMismatch, "piece is not a subcomplex of the maps' domain");

    PieceComplex piece = piece_complex(omega);
    GoodnessResult r;
    r.verdict = Tri::Equivalent;
    ClassBudget cb;
    cb.max_visits = budget.max_visits;
    cb.core_reduction = true;
    cb.want_chain = want_certificates;
    for (size_t i = 0; i + 1 < maps.size(); ++i) {
        SimplicialMap a = restrict_map(maps[i], piece);
        SimplicialMap b = restrict_map(maps[i + 1], piece);
        ClassDecision d = same_contiguity_class(a, b, cb);
        r.maps_visited += d.explored;
        if (d.verdict == Tri::NotEquivalent) {
            r.verdict = Tri::NotEquivalent;
            r.certificates.chains.clear();
            return r;
        }
        if (d.verdict == Tri::Unknown) {
            r.verdict = Tri::Unknown;
            r.certificates.chains.clear();
            return r;
        }
        if (want_certificates) r.certificates.chains.push_back(std::move(d.chain));
    }
    return r;
}

namespace {

struct State {
    Mask bits;  // facet indices (mode=all) or vertex set (mode=induced)
    int floor;  // last deleted index; children delete strictly larger indices
};

struct Enumeration {
    std::vector<Mask> good_states;  // maximal, in discovery (canonical) order
    bool exhausted = true;          // false when a budget was hit or a verdict was Unknown
    bool top_good = false;
    bool top_proven_bad = false;
    DistanceStats stats;
};

// Covering set over the facet universe for a state.
Mask covering_set(const Complex& domain, CoverMode mode, Mask state_bits) {
    if (mode == CoverMode::all) return state_bits;
    Mask cover = 0;
    const auto& facets = domain.facets();
    for (size_t i = 0; i < facets.size(); ++i)
        if (subset(facets[i], state_bits)) cover |= Mask{1} << i;
    return cover;
}

Subcomplex state_subcomplex(const Complex& domain, CoverMode mode, Mask state_bits) {
    if (mode == CoverMode::induced) return restrict_complex(domain, state_bits);
    std::vector<Mask> fs;
    const auto& facets = domain.facets();
    for (int i : mask_vertices(state_bits)) fs.push_back(facets[i]);
    return Subcomplex{domain, std::move(fs)};
}

// Monotone descent over states from the top, level-synchronous so that
// probes can run on a worker pool while recording stays canonical.
Enumeration enumerate_maximal_good(const Complex& domain, const GoodnessFn& good, CoverMode mode,
                                   const SearchBudget& budget) {
    Enumeration out;
    const Mask top = mode == CoverMode::all
                         ? (domain.facet_count() == 64 ? ~Mask{0} : (Mask{1} << domain.facet_count()) - 1)
                         : domain.vertex_mask();

    std::vector<State> level{{top, -1}};
    std::vector<Tri> verdicts;

    while (!level.empty()) {
        // skip rule: anything inside a recorded good state is non-maximal
        std::vector<State> todo;
        todo.reserve(level.size());
        for (const State& s : level) {
            bool skip = false;
            for (Mask g : out.good_states)
                if (subset(s.bits, g)) { skip = true; break; }
            if (!skip) todo.push_back(s);
        }

        std::uint64_t room = budget.max_states > out.stats.states_probed
                                 ? budget.max_states - out.stats.states_probed
                                 : 0;
        if (todo.size() > room) {
            todo.resize(room);
            out.exhausted = false;
            out.stats.budget_hit = true;
        }
        if (todo.empty()) break;

        verdicts.assign(todo.size(), Tri::Unknown);
        std::vector<std::uint64_t> visited(todo.size(), 0);
        auto probe = [&](size_t i) {
            GoodnessResult g = good(state_subcomplex(domain, mode, todo[i].bits), false);
            verdicts[i] = g.verdict;
            visited[i] = g.maps_visited;
        };
        const int threads = std::max(1, budget.threads);
        if (threads == 1 || todo.size() < 2) {
            for (size_t i = 0; i < todo.size(); ++i) probe(i);
        } else {
            std::atomic<size_t> next{0};
            std::vector<std::thread> pool;
            for (int t = 0; t < threads; ++t)
                pool.emplace_back([&] {
                    for (size_t i = next.fetch_add(1); i < todo.size(); i = next.fetch_add(1)) probe(i);
                });
            for (auto& th : pool) th.join();
        }
        out.stats.states_probed += todo.size();
        out.stats.class_checks += todo.size();
        for (std::uint64_t v : visited) out.stats.maps_visited += v;

        std::vector<State> next_level;
        for (size_t i = 0; i < todo.size(); ++i) {
            const State& s = todo[i];
            if (verdicts[i] == Tri::Equivalent) {
                if (s.bits == top) out.top_good = true;
                bool dominated = false;
                for (Mask g : out.good_states)
                    if (subset(s.bits, g)) { dominated = true; break; }
                if (!dominated) {
                    if (out.good_states.size() >= budget.max_pieces) {
                        out.exhausted = false;
                        out.stats.budget_hit = true;
                    } else {
                        out.good_states.push_back(s.bits);
                    }
                }
                continue;
            }
            if (verdicts[i] == Tri::Unknown) out.exhausted = false;
            if (s.bits == top && verdicts[i] == Tri::NotEquivalent) out.top_proven_bad = true;
            // expand (also under Unknown, to keep hunting for good pieces)
            for (int j : mask_vertices(s.bits)) {
                if (j <= s.floor) continue;
                Mask child = s.bits & ~(Mask{1} << j);
                if (child) next_level.push_back({child, j});
            }
        }
        level = std::move(next_level);
    }
    out.stats.maximal_pieces = out.good_states.size();
    return out;
}

struct CoverProblem {
    Mask universe;                    // facet indices
    std::vector<Mask> sets;           // covering sets, parallel to states
    std::vector<Mask> states;         // recorded good states
};

struct CoverResult {
    bool found = false;
    std::vector<int> chosen;  // indices into sets
    std::uint64_t nodes = 0;
    bool budget_hit = false;
};

// Admissible lower bound: greedily pick uncovered elements whose candidate
// sets are pairwise disjoint; each needs its own piece.
int packing_bound(const CoverProblem& p, Mask uncovered) {
    int bound = 0;
    Mask remaining = uncovered;
    while (remaining) {
        int e = lowest_vertex(remaining);
        Mask blocked = 0;
        for (Mask s : p.sets)
            if (s & vertex_bit(e)) blocked |= s;
        ++bound;
        remaining &= ~blocked;
        remaining &= ~vertex_bit(e);
    }
    return bound;
}

void cover_rec(const CoverProblem& p, Mask uncovered, std::vector<int>& chosen,
               std::vector<int>& best, const SearchBudget& budget, CoverResult& res) {
    if (++res.nodes > budget.max_cover_nodes) {
        res.budget_hit = true;
        return;
    }
    if (!uncovered) {
        if (best.empty() || chosen.size() < best.size()) {
            best = chosen;
            res.found = true;
        }
        return;
    }
    if (!best.empty() &&
        chosen.size() + static_cast<size_t>(packing_bound(p, uncovered)) >= best.size())
        return;

    // branch on the uncovered element with the fewest candidate sets
    int elem = -1, fewest = -1;
    for (int e : mask_vertices(uncovered)) {
        int c = 0;
        for (Mask s : p.sets)
            if (s & vertex_bit(e)) ++c;
        if (c == 0) return;  // cannot be covered
        if (fewest < 0 || c < fewest) {
            fewest = c;
            elem = e;
        }
    }
    for (size_t i = 0; i < p.sets.size(); ++i) {
        if (!(p.sets[i] & vertex_bit(elem))) continue;
        chosen.push_back(static_cast<int>(i));
        cover_rec(p, uncovered & ~p.sets[i], chosen, best, budget, res);
        chosen.pop_back();
        if (res.budget_hit) return;
    }
}

CoverResult min_cover(const CoverProblem& p, const SearchBudget& budget) {
    CoverResult res;
    // greedy incumbent
    std::vector<int> greedy;
    Mask uncovered = p.universe;
    while (uncovered) {
        int best_i = -1, best_gain = 0;
        for (size_t i = 0; i < p.sets.size(); ++i) {
            int gain = popcount(p.sets[i] & uncovered);
            if (gain > best_gain) {
                best_gain = gain;
                best_i = static_cast<int>(i);
            }
        }
        if (best_i < 0) return res;  // uncoverable
        greedy.push_back(best_i);
        uncovered &= ~p.sets[best_i];
    }
    std::vector<int> best = greedy;
    std::vector<int> chosen;
    res.found = true;
    cover_rec(p, p.universe, chosen, best, budget, res);
    res.chosen = best;
    std::sort(res.chosen.begin(), res.chosen.end());
    return res;
}

}  // namespace

DistanceReport cover_search(const Complex& domain, const GoodnessFn& good, CoverMode mode,
                            const SearchBudget& budget) {
    DistanceReport rep;
    rep.mode = mode;

    if (domain.facet_count() > 64) {
        rep.kind = DistanceReport::Kind::Unknown;
        rep.lower = 0;
        rep.stats.budget_hit = true;
        return rep;
    }

    auto attach_solution = [&](const std::vector<Mask>& states) {
        CoverSolution sol;
        for (Mask s : states) {
            Subcomplex piece = state_subcomplex(domain, mode, s);
            GoodnessResult g = good(piece, true);
            rep.stats.class_checks += 1;
            rep.stats.maps_visited += g.maps_visited;
            if (g.verdict != Tri::Equivalent)
                throw Error(ErrorCode::DomainMismatch, "chosen cover piece failed re-verification");
            sol.pieces.push_back(std::move(piece));
            sol.certificates.push_back(std::move(g.certificates));
        }
        sol.value = static_cast<int>(sol.pieces.size()) - 1;
        rep.solution = std::move(sol);
    };

    // singleton-facet closures first: a bad one proves the distance infinite
    bool singleton_unknown = false;
    for (Mask f : domain.facets()) {
        Subcomplex piece{domain, {f}};
        GoodnessResult g = good(piece, false);
        rep.stats.class_checks += 1;
        rep.stats.maps_visited += g.maps_visited;
        if (g.verdict == Tri::NotEquivalent) {
            rep.kind = DistanceReport::Kind::Infinite;
            std::vector<std::string> labels;
            for (int v : mask_vertices(f)) labels.push_back(domain.label(v));
            rep.uncovered_face = std::move(labels);
            return rep;
        }
        if (g.verdict == Tri::Unknown) singleton_unknown = true;
    }

    Enumeration en = enumerate_maximal_good(domain, good, mode, budget);
    rep.stats.states_probed += en.stats.states_probed;
    rep.stats.class_checks += en.stats.class_checks;
    rep.stats.maps_visited += en.stats.maps_visited;
    rep.stats.maximal_pieces = en.stats.maximal_pieces;
    rep.stats.budget_hit = rep.stats.budget_hit || en.stats.budget_hit;

    if (en.top_good) {
        rep.kind = DistanceReport::Kind::Value;
        rep.value = 0;
        attach_solution({en.good_states.front()});
        return rep;
    }

    CoverProblem prob;
    prob.universe = domain.facet_count() == 64 ? ~Mask{0} : (Mask{1} << domain.facet_count()) - 1;
    for (Mask s : en.good_states) {
        Mask cover = covering_set(domain, mode, s);
        bool dominated = false;
        for (size_t i = 0; i < prob.sets.size(); ++i)
            if (subset(cover, prob.sets[i])) { dominated = true; break; }
        if (dominated) continue;
        prob.sets.push_back(cover);
        prob.states.push_back(s);
    }

    CoverResult cover = min_cover(prob, budget);
    rep.stats.cover_nodes = cover.nodes;
    rep.stats.budget_hit = rep.stats.budget_hit || cover.budget_hit;

    const bool exact = en.exhausted && !singleton_unknown && !cover.budget_hit;
    if (cover.found) {
        std::vector<Mask> chosen_states;
        for (int i : cover.chosen) chosen_states.push_back(prob.states[i]);
        if (exact) {
            rep.kind = DistanceReport::Kind::Value;
            rep.value = static_cast<int>(chosen_states.size()) - 1;
            attach_solution(chosen_states);
        } else {
            rep.kind = DistanceReport::Kind::Unknown;
            rep.lower = en.top_proven_bad ? 1 : 0;
            rep.upper = static_cast<int>(chosen_states.size()) - 1;
            attach_solution(chosen_states);
        }
        return rep;
    }

    // no cover over the pieces found
    rep.kind = DistanceReport::Kind::Unknown;
    rep.lower = en.top_proven_bad ? 1 : 0;
    return rep;
}

DistanceReport contiguity_distance(const std::vector<SimplicialMap>& maps, CoverMode mode,
                                   const SearchBudget& budget) {
    if (maps.size() < 2)
        throw Error(ErrorCode::IndexOutOfRange, "contiguity distance needs at least two maps");
    for (const auto& m : maps)
        if (!(m.domain() == maps[0].domain()) || !(m.codomain() == maps[0].codomain()))
            throw Error(ErrorCode::DomainMismatch, "maps do not share domain and codomain");
    const Complex& domain = maps[0].domain();
    GoodnessFn good = [&](const Subcomplex& omega, bool want_certificates) {
        return is_good_piece(omega, maps, budget, want_certificates);
    };
    return cover_search(domain, good, mode, budget);
}

DistanceReport scat(const Complex& k, CoverMode mode, const SearchBudget& budget) {
    if (k.edge_path_connected()) {
        std::vector<SimplicialMap> maps{SimplicialMap::identity(k),
                                        SimplicialMap::constant(k, k, 0)};
        return contiguity_distance(maps, mode, budget);
    }
    // Disconnected: a piece is categorical iff it lies in one component and
    // its inclusion is class-equivalent to the constant at that component's
    // representative (chains move each vertex within its component, so
    // cross-component pieces and basepoints are hopeless).
    auto comp = k.vertex_components();
    SimplicialMap id = SimplicialMap::identity(k);
    GoodnessFn good = [&, comp, id](const Subcomplex& omega, bool want_certificates) -> GoodnessResult {
        GoodnessResult r;
        auto vs = mask_vertices(omega.vertex_set());
        for (int v : vs)
            if (comp[v] != comp[vs[0]]) {
                r.verdict = Tri::NotEquivalent;
                return r;
            }
        PieceComplex piece = piece_complex(omega);
        SimplicialMap incl = restrict_map(id, piece);
        SimplicialMap cv = SimplicialMap::constant(piece.complex, k, vs[0]);
        ClassBudget cb;
        cb.max_visits = budget.max_visits;
        cb.core_reduction = true;
        cb.want_chain = want_certificates;
        ClassDecision d = same_contiguity_class(incl, cv, cb);
        r.verdict = d.verdict;
        r.maps_visited = d.explored;
        if (d.verdict == Tri::Equivalent && want_certificates)
            r.certificates.chains.push_back(std::move(d.chain));
        return r;
    };
    return cover_search(k, good, mode, budget);
}

DistanceReport discrete_tc(const Complex& k, int n, CoverMode mode, const SearchBudget& budget) {
    if (n < 1) throw Error(ErrorCode::IndexOutOfRange, "tc exponent must be at least 1");
    ProductComplex kn = categorical_power(k, n);
    std::vector<SimplicialMap> projections_list;
    for (int i = 1; i <= n; ++i) projections_list.push_back(projection(kn, i));
    if (n == 1) {
        // single projection: TC_1 is scat-like degenerate; treat as SD of the
        // pair (p_1, p_1), which is 0 on any complex
        projections_list.push_back(projections_list.front());
    }
    DistanceReport rep = contiguity_distance(projections_list, mode, budget);

    if (rep.solution) {
        SimplicialMap delta = diagonal(k, kn);
        ClassBudget cb;
        cb.max_visits = budget.max_visits;
        cb.core_reduction = true;
        bool ok = true;
        for (const auto& piece : rep.solution->pieces) {
            PieceComplex pc = piece_complex(piece);
            std::vector<SimplicialMap> restricted;
            for (const auto& p : projections_list) restricted.push_back(restrict_map(p, pc));
            // pairwise equivalence of the restricted projections
            for (size_t i = 0; i < restricted.size() && ok; ++i)
                for (size_t j = i + 1; j < restricted.size() && ok; ++j)
                    ok = same_contiguity_class(restricted[i], restricted[j], cb).verdict ==
                         Tri::Equivalent;
            // one restricted projection is a section of the diagonal up to contiguity
            if (ok) {
                SimplicialMap incl = restrict_map(SimplicialMap::identity(kn.complex), pc);
                bool section = false;
                for (const auto& pi : restricted) {
                    SimplicialMap composite = compose(delta, pi);
                    if (same_contiguity_class(composite, incl, cb).verdict == Tri::Equivalent) {
                        section = true;
                        break;
                    }
                }
                ok = section;
            }
            if (!ok) break;
        }
        rep.farber_verified = ok;
    }
    return rep;
}

bool verify_cover_solution(const CoverSolution& sol, const std::vector<SimplicialMap>& maps) {
    if (sol.pieces.size() != sol.certificates.size()) return false;
    if (sol.value != static_cast<int>(sol.pieces.size()) - 1) return false;

    // the pieces must cover every face of the domain
    const Complex& domain = maps[0].domain();
    for (Mask face : domain.faces()) {
        bool covered = false;
        for (const auto& piece : sol.pieces)
            if (piece.contains_face(face)) { covered = true; break; }
        if (!covered) return false;
    }

    for (size_t p = 0; p < sol.pieces.size(); ++p) {
        PieceComplex pc = piece_complex(sol.pieces[p]);
        const auto& chains = sol.certificates[p].chains;
        if (chains.size() + 1 != maps.size()) return false;
        for (size_t i = 0; i + 1 < maps.size(); ++i) {
            SimplicialMap a = restrict_map(maps[i], pc);
            SimplicialMap b = restrict_map(maps[i + 1], pc);
            if (!replay_certificate(chains[i], a, b)) return false;
        }
    }
    return true;
}

}  // namespace contig
