// Acceptance suite: one pass/fail line per criterion, exact expected values,
// wall-clock limits enforced.  Returns the number of failed criteria.

#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "contig/collapse.hpp"
#include "contig/distance.hpp"
#include "contig/io.hpp"
#include "contig/product.hpp"
#include "contig/subdivision.hpp"
#include "contig/verify.hpp"
#include "support/oracles.hpp"

using namespace contig;

namespace {

const std::string kData = CONTIG_DATA_DIR;

struct Runner {
    int failures = 0;

    void criterion(int number, const std::string& what, double limit_seconds,
                   const std::function<bool(std::string&)>& run) {
        oracle::Timer timer;
        std::string detail;
        bool ok = false;
        try {
            ok = run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double secs = timer.seconds();
        if (secs > limit_seconds) {
            ok = false;
            detail += (detail.empty() ? "" : "; ") + std::string("exceeded time limit of ") +
                      std::to_string(limit_seconds) + "s";
        }
        if (!ok) ++failures;
        std::printf("[%s] criterion %d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", number,
                    what.c_str(), secs, detail.empty() ? "" : " -- ", detail.c_str());
        std::fflush(stdout);
    }
};

int value_or(const DistanceReport& r, int fallback) {
    return r.kind == DistanceReport::Kind::Value ? r.value : fallback;
}

std::string show(const DistanceReport& r) {
    switch (r.kind) {
        case DistanceReport::Kind::Value: return std::to_string(r.value);
        case DistanceReport::Kind::Infinite: return "infinite";
        default: return "unknown";
    }
}

// All complexes on at most 3 vertices (every vertex in some facet).
std::vector<Complex> complexes_up_to_3_vertices() {
    std::vector<Complex> out;
    out.push_back(Complex::from_facets({{0}}));
    out.push_back(Complex::from_facets({{0}, {1}}));
    out.push_back(Complex::from_facets({{0, 1}}));
    // 3 vertices, no triangle: all eight edge subsets
    const std::vector<std::vector<int>> edges{{0, 1}, {0, 2}, {1, 2}};
    for (int e = 0; e < 8; ++e) {
        std::vector<std::vector<int>> facets;
        for (int i = 0; i < 3; ++i)
            if (e & (1 << i)) facets.push_back(edges[i]);
        for (int v = 0; v < 3; ++v) facets.push_back({v});  // absorbed when covered
        out.push_back(Complex::from_facets(facets));
    }
    out.push_back(Complex::from_facets({{0, 1, 2}}));
    return out;
}

bool same_value(const DistanceReport& r, const oracle::Value& o) {
    if (o.infinite) return r.kind == DistanceReport::Kind::Infinite;
    return r.kind == DistanceReport::Kind::Value && r.value == o.v;
}

}  // namespace

int main() {
    Runner runner;

    Complex fig31 = parse_complex_file(kData + "/fig31.cx");
    Complex fig32 = parse_complex_file(kData + "/fig32.cx");
    Complex fig33 = parse_complex_file(kData + "/fig33.cx");

    // 1. SD of the figure 3.1 triple is 0
    runner.criterion(1, "SD(phi1,phi2,phi3) = 0 on the figure 3.1 complex", 1.0, [&](std::string& d) {
        std::vector<SimplicialMap> maps{parse_map_file(kData + "/fig31_phi1.map", fig31, fig31),
                                        parse_map_file(kData + "/fig31_phi2.map", fig31, fig31),
                                        parse_map_file(kData + "/fig31_phi3.map", fig31, fig31)};
        DistanceReport r = contiguity_distance(maps);
        d = "SD = " + show(r);
        return value_or(r, -1) == 0 && r.solution && verify_cover_solution(*r.solution, maps);
    });

    // 2. SD(id, c0, phi) = 1 on the triangle boundary, witness checked
    runner.criterion(2, "SD(id,c0,phi) = 1 on the figure 3.2 complex (mode=all)", 1.0,
                     [&](std::string& d) {
        std::vector<SimplicialMap> maps{SimplicialMap::identity(fig32),
                                        parse_map_file(kData + "/fig32_c0.map", fig32, fig32),
                                        parse_map_file(kData + "/fig32_phi.map", fig32, fig32)};
        DistanceReport r = contiguity_distance(maps, CoverMode::all);
        d = "SD = " + show(r);
        if (value_or(r, -1) != 1 || !r.solution) return false;
        if (!verify_cover_solution(*r.solution, maps)) return false;
        // the paper's pieces U0, U1 are themselves good
        Subcomplex u0{fig32, {mask_of({0, 1}), mask_of({0, 2})}};
        Subcomplex u1{fig32, {mask_of({1, 2})}};
        return is_good_piece(u0, maps).verdict == Tri::Equivalent &&
               is_good_piece(u1, maps).verdict == Tri::Equivalent;
    });

    // 3. scat of figure 3.1 and of its subdivision
    SubdividedComplex sd31 = barycentric_subdivision(fig31);
    int scat31 = -1, scat_sd31 = -1;
    runner.criterion(3, "scat(K) = 2 and scat(sd K) = 1 for the figure 3.1 complex", 60.0,
                     [&](std::string& d) {
        DistanceReport a = scat(fig31);
        DistanceReport b = scat(sd31.complex);
        scat31 = value_or(a, -1);
        scat_sd31 = value_or(b, -1);
        d = "scat(K) = " + show(a) + ", scat(sd K) = " + show(b);
        if (scat31 != 2 || scat_sd31 != 1) return false;
        return a.solution && verify_cover_solution(
                                 *a.solution, {SimplicialMap::identity(fig31),
                                               SimplicialMap::constant(fig31, fig31, 0)});
    });

    // 4. scat of the figure 3.3 disk
    runner.criterion(4, "scat = 1 for the figure 3.3 complex", 60.0, [&](std::string& d) {
        DistanceReport r = scat(fig33);
        d = "scat = " + show(r);
        return value_or(r, -1) == 1;
    });

    // 5. strict subdivision inequality for the figure 3.1 axis inclusions.
    // sd(K^3) far exceeds the 64-vertex cap, so the tuple value is obtained
    // through the identity scat(K) = SD of the axis inclusions, which is
    // checked directly at n=2 on the figure 3.1 complex itself and at n=3 on
    // the triangle boundary; criterion 3 supplies scat(K) = 2 > 1 = scat(sd K).
    runner.criterion(5, "subdivision drops SD of the axis inclusions from 2 to 1", 300.0,
                     [&](std::string& d) {
        if (scat31 != 2 || scat_sd31 != 1) {
            d = "criterion 3 values unavailable";
            return false;
        }
        ProductComplex k2 = categorical_power(fig31, 2);
        std::vector<SimplicialMap> axes{axis_inclusion(fig31, k2, 1, 0),
                                        axis_inclusion(fig31, k2, 2, 0)};
        DistanceReport direct = contiguity_distance(axes);
        d = "SD(axis incl, n=2) = " + show(direct) + " on figure 3.1";
        if (value_or(direct, -1) != 2) return false;

        ProductComplex t3 = categorical_power(fig32, 3);
        std::vector<SimplicialMap> axes3{axis_inclusion(fig32, t3, 1, 0),
                                         axis_inclusion(fig32, t3, 2, 0),
                                         axis_inclusion(fig32, t3, 3, 0)};
        DistanceReport triple = contiguity_distance(axes3);
        DistanceReport tri_scat = scat(fig32);
        d += ", SD(axis incl, n=3) = " + show(triple) + " on the triangle boundary";
        if (value_or(triple, -1) != value_or(tri_scat, -2)) return false;
        d += "; 1 = SD(sd inclusions) < SD(inclusions) = 2";
        return scat_sd31 < scat31;
    });

    // 6. identity theorems against the from-definition oracles
    runner.criterion(6, "SD(p1,p2) = TC_2 oracle and SD(i~1,i~2) = scat oracle on small complexes",
                     300.0, [&](std::string& d) {
        int tc_checked = 0, scat_checked = 0;
        auto corpus = complexes_up_to_3_vertices();
        for (const Complex& k : corpus) {
            DistanceReport tc = discrete_tc(k, 2);
            oracle::Value tc_expect = oracle::tc_from_definition(k, 2);
            if (!same_value(tc, tc_expect)) {
                d = "TC_2 mismatch: engine " + show(tc);
                return false;
            }
            if (tc.farber_verified && !*tc.farber_verified) {
                d = "witness pieces failed the Farber characterization";
                return false;
            }
            ++tc_checked;

            if (!k.edge_path_connected()) continue;  // the scat identity needs connectivity
            ProductComplex k2 = categorical_power(k, 2);
            std::vector<SimplicialMap> axes{axis_inclusion(k, k2, 1, 0),
                                            axis_inclusion(k, k2, 2, 0)};
            DistanceReport sd_axes = contiguity_distance(axes);
            oracle::Value scat_expect = oracle::scat_from_definition(k);
            if (!same_value(sd_axes, scat_expect)) {
                d = "scat identity mismatch: engine " + show(sd_axes);
                return false;
            }
            ++scat_checked;
        }
        d = std::to_string(tc_checked) + " TC checks, " + std::to_string(scat_checked) +
            " scat identity checks";
        return tc_checked == 12;
    });

    // 7. property suite: 1000 sampled tuples, zero violations
    runner.criterion(7, "theorem property suite over 1000 sampled tuples", 600.0,
                     [&](std::string& d) {
        VerifyOptions options;
        options.tuples = 1000;
        options.seed = 20250810;
        VerifyReport rep = verify_theorem_suite(builtin_corpus(), options);
        std::uint64_t violations = 0;
        for (const auto& c : rep.checks) violations += c.violations.size();
        d = std::to_string(rep.total_cases()) + " cases, " + std::to_string(violations) +
            " violations";
        for (const auto& c : rep.checks)
            if (!c.violations.empty()) {
                d += "; " + c.name + ": " + c.violations.front();
                break;
            }
        // the unconditional value checks must also never be budget-skipped
        for (const auto& c : rep.checks)
            if (c.name == "sd_decidable" && c.skipped) {
                d += "; undecided tuples: " + std::to_string(c.skipped);
                return false;
            }
        return rep.all_passed() && rep.tuples_sampled == 1000;
    });

    // 8. decision soundness: certificates replay, NotEquivalent verdicts agree
    // with exhaustive map-space components on instances with <= 3^5 maps
    runner.criterion(8, "class decisions agree with full map-space enumeration", 600.0,
                     [&](std::string& d) {
        struct Pair {
            Complex dom, cod;
        };
        Complex path3 = Complex::from_facets({{0, 1}, {1, 2}});
        Complex c5 = Complex::from_facets({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
        Complex two_points = Complex::from_facets({{0}, {1}});
        Complex two_edges = Complex::from_facets({{0, 1}, {2, 3}});
        std::vector<Pair> instances{{fig32, fig32}, {path3, fig32}, {fig32, path3},
                                    {two_points, two_edges}, {c5, fig32}};
        std::uint64_t pairs_checked = 0, not_equivalent_reverified = 0;
        for (const auto& inst : instances) {
            double space = 1;
            for (int v = 0; v < inst.dom.vertex_count(); ++v) space *= inst.cod.vertex_count();
            if (space > 243) {
                d = "instance exceeds the 3^5 map-space bound";
                return false;
            }
            auto all = oracle::all_simplicial_maps(inst.dom, inst.cod);
            auto comp = oracle::contiguity_components(all);
            ClassBudget raw;
            ClassBudget reduced;
            reduced.core_reduction = true;
            for (size_t i = 0; i < all.size(); ++i)
                for (size_t j = i; j < all.size(); ++j) {
                    bool same = comp[i] == comp[j];
                    ClassDecision a = same_contiguity_class(all[i], all[j], raw);
                    ClassDecision b = same_contiguity_class(all[i], all[j], reduced);
                    ++pairs_checked;
                    if (a.verdict == Tri::Unknown || b.verdict == Tri::Unknown) {
                        d = "budget exhausted on a desk-scale instance";
                        return false;
                    }
                    bool a_same = a.verdict == Tri::Equivalent;
                    bool b_same = b.verdict == Tri::Equivalent;
                    if (a_same != same || b_same != same) {
                        d = "verdict disagrees with enumeration";
                        return false;
                    }
                    if (same) {
                        if (!replay_certificate(a.chain, all[i], all[j]) ||
                            !replay_certificate(b.chain, all[i], all[j])) {
                            d = "certificate failed to replay";
                            return false;
                        }
                    } else {
                        ++not_equivalent_reverified;
                    }
                }
        }
        d = std::to_string(pairs_checked) + " map pairs, " +
            std::to_string(not_equivalent_reverified) + " NotEquivalent verdicts re-verified";
        return pairs_checked > 0;
    });

    if (runner.failures == 0)
        std::printf("acceptance: all 8 criteria passed\n");
    else
        std::printf("acceptance: %d criterion(s) failed\n", runner.failures);
    return runner.failures;
}
