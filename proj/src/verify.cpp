#include "contig/verify.hpp"

#include <algorithm>
#include <iostream>
#include <map>
#include <sstream>

#include "contig/collapse.hpp"
#include "contig/io.hpp"
#include "contig/product.hpp"
#include "contig/subdivision.hpp"

namespace contig {

namespace {

// Extended value: finite k, infinite, or unknown.
struct XVal {
    enum class Kind { finite, infinite, unknown } kind;
    int v = -1;
};

XVal xval(const DistanceReport& r) {
    switch (r.kind) {
        case DistanceReport::Kind::Value: return {XVal::Kind::finite, r.value};
        case DistanceReport::Kind::Infinite: return {XVal::Kind::infinite, -1};
        default: return {XVal::Kind::unknown, -1};
    }
}

bool known(const XVal& a) { return a.kind != XVal::Kind::unknown; }

bool le(const XVal& a, const XVal& b) {  // a <= b over the extended integers
    if (b.kind == XVal::Kind::infinite) return true;
    if (a.kind == XVal::Kind::infinite) return false;
    return a.v <= b.v;
}

bool eq(const XVal& a, const XVal& b) {
    if (a.kind != b.kind) return false;
    return a.kind != XVal::Kind::finite || a.v == b.v;
}

std::string show(const XVal& a) {
    if (a.kind == XVal::Kind::infinite) return "infinite";
    if (a.kind == XVal::Kind::unknown) return "unknown";
    return std::to_string(a.v);
}

std::string describe_instance(const std::vector<SimplicialMap>& maps) {
    std::ostringstream os;
    os << "domain:\n" << emit_complex_text(maps[0].domain());
    os << "codomain:\n" << emit_complex_text(maps[0].codomain());
    for (size_t i = 0; i < maps.size(); ++i) os << "map " << i << ":\n" << emit_map_text(maps[i]);
    return os.str();
}

struct Suite {
    const VerifyOptions& options;
    VerifyReport report;
    std::map<std::string, size_t> index;

    explicit Suite(const VerifyOptions& o) : options(o) {}

    CheckResult& check(const std::string& name) {
        auto it = index.find(name);
        if (it == index.end()) {
            index[name] = report.checks.size();
            report.checks.push_back(CheckResult{name, 0, 0, {}});
            return report.checks.back();
        }
        return report.checks[it->second];
    }

    void pass(const std::string& name) { ++check(name).cases; }
    void skip(const std::string& name) { ++check(name).skipped; }
    void fail(const std::string& name, const std::string& detail) {
        auto& c = check(name);
        ++c.cases;
        if (c.violations.size() < 5) c.violations.push_back(detail);
    }
    void verdict(const std::string& name, bool ok, const std::string& detail) {
        ok ? pass(name) : fail(name, detail);
    }
};

// Restriction of a whole tuple to a facet-subset of the domain; used to
// shrink counterexamples for the single-tuple laws.
std::vector<SimplicialMap> restrict_tuple(const std::vector<SimplicialMap>& maps, Mask facet_subset) {
    const Complex& domain = maps[0].domain();
    std::vector<Mask> fs;
    for (int i : mask_vertices(facet_subset)) fs.push_back(domain.facets()[i]);
    PieceComplex piece = piece_complex(Subcomplex{domain, fs});
    std::vector<SimplicialMap> out;
    for (const auto& m : maps) out.push_back(restrict_map(m, piece));
    return out;
}

// Greedy facet removal while the predicate still reports a violation.
std::vector<SimplicialMap> shrink_tuple(
    const std::vector<SimplicialMap>& maps,
    const std::function<bool(const std::vector<SimplicialMap>&)>& violates) {
    const int nf = maps[0].domain().facet_count();
    Mask current = nf == 64 ? ~Mask{0} : (Mask{1} << nf) - 1;
    std::vector<SimplicialMap> best = maps;
    bool changed = true;
    while (changed && popcount(current) > 1) {
        changed = false;
        for (int i : mask_vertices(current)) {
            Mask smaller = current & ~(Mask{1} << i);
            auto t = restrict_tuple(maps, smaller);
            if (violates(t)) {
                current = smaller;
                best = t;
                changed = true;
                break;
            }
        }
    }
    return best;
}

}  // namespace

SimplicialMap random_simplicial_map(const Complex& domain, const Complex& codomain,
                                    std::mt19937& rng) {
    const int n = domain.vertex_count();
    const int m = codomain.vertex_count();
    const auto& facets = domain.facets();
    std::vector<std::vector<int>> at(n);
    for (size_t i = 0; i < facets.size(); ++i)
        for (int v : mask_vertices(facets[i])) at[v].push_back(static_cast<int>(i));

    std::vector<Mask> partial(facets.size(), 0);
    std::vector<std::uint8_t> psi(n);
    std::function<bool(int)> rec = [&](int v) -> bool {
        if (v == n) return true;
        std::vector<int> candidates(m);
        for (int w = 0; w < m; ++w) candidates[w] = w;
        std::shuffle(candidates.begin(), candidates.end(), rng);
        for (int w : candidates) {
            bool ok = true;
            for (int i : at[v])
                if (!codomain.is_face(partial[i] | vertex_bit(w))) { ok = false; break; }
            if (!ok) continue;
            std::vector<Mask> saved;
            for (int i : at[v]) {
                saved.push_back(partial[i]);
                partial[i] |= vertex_bit(w);
            }
            psi[v] = static_cast<std::uint8_t>(w);
            if (rec(v + 1)) return true;
            for (size_t s = 0; s < at[v].size(); ++s) partial[at[v][s]] = saved[s];
        }
        return false;
    };
    if (!rec(0)) {
        // constants always exist
        return SimplicialMap::constant(domain, codomain, 0);
    }
    return SimplicialMap::unchecked(domain, codomain, psi);
}

std::vector<Complex> builtin_corpus() {
    std::vector<Complex> out;
    out.push_back(Complex::from_facets({{0}}));                                      // point
    out.push_back(Complex::from_facets({{0, 1}}));                                   // edge
    out.push_back(Complex::from_facets({{0}, {1}}));                                 // two points
    out.push_back(Complex::from_facets({{0, 1}, {1, 2}}));                           // path
    out.push_back(Complex::from_facets({{0, 1}, {0, 2}, {1, 2}}));                   // triangle boundary
    out.push_back(Complex::from_facets({{0, 1, 2}}));                                // solid triangle
    out.push_back(Complex::from_facets({{0, 1}, {0, 2}, {0, 3}}));                   // star
    out.push_back(Complex::from_facets({{0, 1}, {1, 2}, {2, 3}, {0, 3}}));           // 4-cycle
    out.push_back(Complex::from_facets({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}));   // 5-cycle
    out.push_back(Complex::from_facets(
        {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));                          // K4 graph
    out.push_back(Complex::from_facets({{0, 1, 2}, {0, 1, 3}}));                     // two solid triangles
    out.push_back(Complex::from_facets({{0, 1, 2}, {2, 3}}));                        // triangle with tail
    out.push_back(Complex::from_facets({{0, 1}, {2}}));                              // edge plus point
    out.push_back(Complex::from_facets(
        {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}}));                          // 6-cycle
    return out;
}

VerifyReport verify_theorem_suite(const std::vector<Complex>& corpus, const VerifyOptions& options) {
    Suite suite(options);
    std::mt19937 rng(options.seed);
    const SearchBudget& budget = options.budget;

    auto sd_all = [&](const std::vector<SimplicialMap>& maps) {
        return xval(contiguity_distance(maps, CoverMode::all, budget));
    };

    std::vector<XVal> scat_cache(corpus.size(), XVal{XVal::Kind::unknown, -1});
    std::vector<bool> scat_done(corpus.size(), false);
    auto scat_of = [&](size_t i) {
        if (!scat_done[i]) {
            scat_cache[i] = xval(scat(corpus[i], CoverMode::all, budget));
            scat_done[i] = true;
        }
        return scat_cache[i];
    };

    // per-complex checks
    for (size_t ci = 0; ci < corpus.size(); ++ci) {
        const Complex& k = corpus[ci];
        const bool connected = k.edge_path_connected();

        if (connected) {
            // the scat value does not depend on the basepoint
            XVal base = scat_of(ci);
            bool ok = known(base);
            for (int v = 1; ok && v < k.vertex_count(); ++v) {
                std::vector<SimplicialMap> maps{SimplicialMap::identity(k),
                                                SimplicialMap::constant(k, k, v)};
                ok = eq(sd_all(maps), base);
            }
            suite.verdict("scat_basepoint_independence", ok,
                          "scat changed with basepoint on\n" + emit_complex_text(k));
        }

        if (connected && k.vertex_count() <= 4) {
            // scat(K) = SD of the two axis inclusions K -> K^2
            ProductComplex k2 = categorical_power(k, 2);
            std::vector<SimplicialMap> axes{axis_inclusion(k, k2, 1, 0), axis_inclusion(k, k2, 2, 0)};
            XVal lhs = sd_all(axes);
            XVal rhs = scat_of(ci);
            suite.verdict("identity_scat_axis_inclusions", known(lhs) && known(rhs) && eq(lhs, rhs),
                          "SD(axis incl)=" + show(lhs) + " scat=" + show(rhs) + " on\n" +
                              emit_complex_text(k));

            // scat(K^1) = SD of the two slab inclusions K^1 -> K^2
            ProductComplex k1 = categorical_power(k, 1);
            std::vector<SimplicialMap> slabs{slab_inclusion(k1, k2, 1, 0), slab_inclusion(k1, k2, 2, 0)};
            XVal lhs2 = sd_all(slabs);
            XVal rhs2 = xval(scat(k1.complex, CoverMode::all, budget));
            suite.verdict("identity_scat_slab_inclusions", known(lhs2) && known(rhs2) && eq(lhs2, rhs2),
                          "SD(slab incl)=" + show(lhs2) + " scat(K^1)=" + show(rhs2) + " on\n" +
                              emit_complex_text(k));
        }
    }

    std::uniform_int_distribution<size_t> pick(0, corpus.size() - 1);
    std::uniform_int_distribution<int> pick_n(2, 3);

    for (std::uint64_t t = 0; t < options.tuples; ++t) {
        ++suite.report.tuples_sampled;
        if (options.progress && t % 50 == 0)
            std::cerr << "verify: tuple " << t << "/" << options.tuples << "\n";
        const Complex& dom = corpus[pick(rng)];
        const Complex& cod = corpus[pick(rng)];
        const int n = pick_n(rng);
        std::vector<SimplicialMap> maps;
        for (int i = 0; i < n; ++i) maps.push_back(random_simplicial_map(dom, cod, rng));

        XVal value = sd_all(maps);
        if (!known(value)) {
            suite.skip("sd_decidable");
            continue;
        }
        suite.pass("sd_decidable");

        {  // permutation invariance
            std::vector<SimplicialMap> shuffled = maps;
            std::shuffle(shuffled.begin(), shuffled.end(), rng);
            XVal other = sd_all(shuffled);
            bool ok = known(other) && eq(value, other);
            if (!ok) {
                auto violates = [&](const std::vector<SimplicialMap>& ms) {
                    std::vector<SimplicialMap> sh(ms.rbegin(), ms.rend());
                    XVal a = sd_all(ms), b = sd_all(sh);
                    return known(a) && known(b) && !eq(a, b);
                };
                suite.fail("sd_permutation_invariance",
                           "SD=" + show(value) + " permuted=" + show(other) + "\n" +
                               describe_instance(shrink_tuple(maps, violates)));
            } else {
                suite.pass("sd_permutation_invariance");
            }
        }

        {  // SD = 0 iff consecutive maps are class-equivalent on the whole domain
            ClassBudget cb;
            cb.max_visits = budget.max_visits;
            cb.core_reduction = true;
            bool all_equivalent = true, decided = true;
            for (int i = 0; i + 1 < n && all_equivalent; ++i) {
                ClassDecision d = same_contiguity_class(maps[i], maps[i + 1], cb);
                if (d.verdict == Tri::Unknown) decided = false;
                all_equivalent = d.verdict == Tri::Equivalent;
            }
            if (!decided) {
                suite.skip("sd_zero_characterization");
            } else {
                bool ok = (value.kind == XVal::Kind::finite && value.v == 0) == all_equivalent;
                suite.verdict("sd_zero_characterization", ok,
                              "SD=" + show(value) +
                                  " consecutive-equivalent=" + (all_equivalent ? "yes" : "no") + "\n" +
                                  describe_instance(maps));
            }
        }

        if (n >= 3) {  // monotonicity in the number of maps
            std::vector<SimplicialMap> prefix(maps.begin(), maps.end() - 1);
            XVal smaller = sd_all(prefix);
            bool ok = known(smaller) && le(smaller, value);
            suite.verdict("sd_monotone_in_n", ok,
                          "SD(prefix)=" + show(smaller) + " > SD(all)=" + show(value) + "\n" +
                              describe_instance(maps));
        }

        {  // precomposition with a single map
            const Complex& mid = corpus[pick(rng)];
            SimplicialMap mu = random_simplicial_map(mid, dom, rng);
            std::vector<SimplicialMap> composed;
            for (const auto& f : maps) composed.push_back(compose(f, mu));
            XVal lhs = sd_all(composed);
            bool ok = known(lhs) && le(lhs, value);
            suite.verdict("sd_precomposition", ok,
                          "SD(f o mu)=" + show(lhs) + " > SD(f)=" + show(value) + "\n" +
                              describe_instance(maps) + "mu:\n" + emit_map_text(mu));
        }

        {  // precomposition with a contiguous family mu_1 ~ ... ~ mu_n
            const Complex& mid = corpus[pick(rng)];
            SimplicialMap mu = random_simplicial_map(mid, dom, rng);
            auto nbs = contiguous_neighbors(mu);
            std::uniform_int_distribution<size_t> pick_nb(0, nbs.size() - 1);
            std::vector<SimplicialMap> composed;
            for (const auto& f : maps) composed.push_back(compose(f, nbs[pick_nb(rng)]));
            XVal lhs = sd_all(composed);
            bool ok = known(lhs) && le(lhs, value);
            suite.verdict("sd_precomposition_family", ok,
                          "SD(f_i o mu_i)=" + show(lhs) + " > SD(f)=" + show(value) + "\n" +
                              describe_instance(maps));
        }

        {  // postcomposition with a contiguous family
            const Complex& tail = corpus[pick(rng)];
            SimplicialMap nu = random_simplicial_map(cod, tail, rng);
            auto nbs = contiguous_neighbors(nu);
            std::uniform_int_distribution<size_t> pick_nb(0, nbs.size() - 1);
            std::vector<SimplicialMap> composed;
            for (const auto& f : maps) composed.push_back(compose(nbs[pick_nb(rng)], f));
            XVal lhs = sd_all(composed);
            bool ok = known(lhs) && le(lhs, value);
            suite.verdict("sd_postcomposition_family", ok,
                          "SD(nu_i o f_i)=" + show(lhs) + " > SD(f)=" + show(value) + "\n" +
                              describe_instance(maps));
        }

        {  // replacing maps by class-equivalent ones keeps the value
            std::vector<SimplicialMap> replaced;
            for (const auto& f : maps) {
                auto nbs = contiguous_neighbors(f);
                std::uniform_int_distribution<size_t> pick_nb(0, nbs.size() - 1);
                replaced.push_back(nbs[pick_nb(rng)]);
            }
            XVal other = sd_all(replaced);
            bool ok = known(other) && eq(value, other);
            suite.verdict("sd_class_replacement", ok,
                          "SD=" + show(value) + " after replacement=" + show(other) + "\n" +
                              describe_instance(maps));
        }

        // SD of any tuple out of K is at most scat(K); needs an
        // edge-path-connected codomain so that constant maps interchange
        if (cod.edge_path_connected()) {
            size_t dom_index = 0;
            for (size_t i = 0; i < corpus.size(); ++i)
                if (corpus[i] == dom) { dom_index = i; break; }
            XVal bound = scat_of(dom_index);
            bool ok = known(bound) && le(value, bound);
            suite.verdict("sd_le_scat", ok,
                          "SD=" + show(value) + " > scat=" + show(bound) + "\n" +
                              describe_instance(maps));
        } else {
            suite.skip("sd_le_scat");
        }

        {  // factor-through bound, when the premise holds
            const Complex& mid = corpus[pick(rng)];
            SimplicialMap eta = random_simplicial_map(mid, dom, rng);
            SimplicialMap eta2 = (t % 2 == 0) ? SimplicialMap::constant(mid, dom, 0)
                                              : random_simplicial_map(mid, dom, rng);
            ClassBudget cb;
            cb.max_visits = budget.max_visits;
            cb.core_reduction = true;
            bool premise = true, decided = true;
            for (int i = 0; i + 1 < n && premise; ++i) {
                ClassDecision d =
                    same_contiguity_class(compose(maps[i], eta2), compose(maps[i + 1], eta2), cb);
                if (d.verdict == Tri::Unknown) decided = false;
                premise = d.verdict == Tri::Equivalent;
            }
            if (!decided || !premise) {
                suite.skip("sd_factor_through");
            } else {
                std::vector<SimplicialMap> lhs_maps;
                for (const auto& f : maps) lhs_maps.push_back(compose(f, eta));
                XVal lhs = sd_all(lhs_maps);
                XVal rhs = sd_all({eta, eta2});
                bool ok = known(lhs) && known(rhs) && le(lhs, rhs);
                suite.verdict("sd_factor_through", ok,
                              "SD(f_i o eta)=" + show(lhs) + " > SD(eta,eta')=" + show(rhs) + "\n" +
                                  describe_instance(maps));
            }
        }

        {  // subdivision monotonicity, where the subdivision is searchable
            std::size_t sd_facets = 0;
            for (Mask f : dom.facets()) {
                std::size_t fact = 1;
                for (int i = 2; i <= popcount(f); ++i) fact *= i;
                sd_facets += fact;
            }
            if (dom.face_count() <= kMaxVertices && cod.face_count() <= kMaxVertices &&
                sd_facets <= 14) {
                SubdividedComplex sd_dom = barycentric_subdivision(dom);
                SubdividedComplex sd_cod = barycentric_subdivision(cod);
                std::vector<SimplicialMap> sd_maps;
                for (const auto& f : maps) sd_maps.push_back(subdivide_map(f, sd_dom, sd_cod));
                XVal lhs = sd_all(sd_maps);
                bool ok = known(lhs) && le(lhs, value);
                suite.verdict("sd_subdivision_monotone", ok,
                              "SD(sd f)=" + show(lhs) + " > SD(f)=" + show(value) + "\n" +
                                  describe_instance(maps));
            } else {
                suite.skip("sd_subdivision_monotone");
            }
        }

        {  // strongly collapsible domain forces SD = 0 (connected codomain)
            if (is_strongly_collapsible(dom) && cod.edge_path_connected()) {
                bool ok = value.kind == XVal::Kind::finite && value.v == 0;
                suite.verdict("collapsible_domain_sd_zero", ok,
                              "SD=" + show(value) + " on collapsible domain\n" +
                                  describe_instance(maps));
            } else {
                suite.skip("collapsible_domain_sd_zero");
            }
        }

        {  // strongly collapsible codomain forces SD = 0
            if (is_strongly_collapsible(cod)) {
                bool ok = value.kind == XVal::Kind::finite && value.v == 0;
                suite.verdict("collapsible_codomain_sd_zero", ok,
                              "SD=" + show(value) + " into collapsible codomain\n" +
                                  describe_instance(maps));
            } else {
                suite.skip("collapsible_codomain_sd_zero");
            }
        }

        {  // the induced pool can only increase the value
            XVal induced = xval(contiguity_distance(maps, CoverMode::induced, budget));
            bool ok = known(induced) && le(value, induced);
            suite.verdict("mode_dominance", ok,
                          "value(all)=" + show(value) + " > value(induced)=" + show(induced) + "\n" +
                              describe_instance(maps));
        }
    }

    return suite.report;
}

}  // namespace contig
