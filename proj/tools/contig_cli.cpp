// Command-line front end.  Each command writes one JSON document to stdout
// and a short human summary to stderr.  Exit codes: 0 definite result,
// 1 error, 2 budget-limited (unknown) result.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "contig/collapse.hpp"
#include "contig/contiguity.hpp"
#include "contig/distance.hpp"
#include "contig/io.hpp"
#include "contig/product.hpp"
#include "contig/subdivision.hpp"
#include "contig/verify.hpp"

using nlohmann::json;

namespace {

struct CommonOptions {
    std::string complex_path;
    std::string codomain_path;  // empty = same as domain
    std::vector<std::string> map_paths;
    std::string mode = "all";
    contig::SearchBudget budget;
    std::uint64_t max_chain = 0;  // 0 = unlimited
};

std::uint64_t env_override(const char* name, std::uint64_t fallback) {
    if (const char* v = std::getenv(name)) return std::strtoull(v, nullptr, 10);
    return fallback;
}

void add_budget_flags(CLI::App* cmd, CommonOptions& o) {
    o.budget.max_visits = env_override("CONTIG_MAX_VISITS", o.budget.max_visits);
    o.budget.max_states = env_override("CONTIG_MAX_SUBCOMPLEXES", o.budget.max_states);
    o.budget.max_pieces = env_override("CONTIG_MAX_PIECES", o.budget.max_pieces);
    o.budget.threads = static_cast<int>(env_override("CONTIG_THREADS", 1));
    cmd->add_option("--max-visits", o.budget.max_visits, "maps visited per class decision");
    cmd->add_option("--max-subcomplexes", o.budget.max_states, "candidate subcomplexes probed");
    cmd->add_option("--max-pieces", o.budget.max_pieces, "maximal good pieces kept");
    cmd->add_option("--threads", o.budget.threads, "worker pool size");
}

contig::CoverMode parse_mode(const std::string& mode) {
    if (mode == "all") return contig::CoverMode::all;
    if (mode == "induced") return contig::CoverMode::induced;
    throw contig::Error(contig::ErrorCode::ParseError, "mode must be 'all' or 'induced'");
}

struct LoadedMaps {
    contig::Complex domain;
    contig::Complex codomain;
    std::vector<contig::SimplicialMap> maps;
};

LoadedMaps load(const CommonOptions& o, size_t want_maps) {
    LoadedMaps l;
    l.domain = contig::parse_complex_file(o.complex_path);
    l.codomain = o.codomain_path.empty() ? l.domain : contig::parse_complex_file(o.codomain_path);
    for (const auto& p : o.map_paths)
        l.maps.push_back(contig::parse_map_file(p, l.domain, l.codomain));
    if (want_maps && l.maps.size() < want_maps)
        throw contig::Error(contig::ErrorCode::MissingVertex,
                            "expected at least " + std::to_string(want_maps) + " map files");
    return l;
}

int emit(const json& j, int exit_code, const std::string& summary) {
    std::cout << j.dump(2) << "\n";
    std::cerr << summary << "\n";
    return exit_code;
}

int emit_distance(const contig::DistanceReport& rep, const std::string& what) {
    json j = contig::distance_report_json(rep);
    j["command"] = what;
    std::string summary;
    int code = 0;
    switch (rep.kind) {
        case contig::DistanceReport::Kind::Value:
            summary = what + " = " + std::to_string(rep.value);
            break;
        case contig::DistanceReport::Kind::Infinite:
            summary = what + " = infinite";
            break;
        case contig::DistanceReport::Kind::Unknown:
            summary = what + " unknown within budget (lower bound " + std::to_string(rep.lower) +
                      (rep.upper ? ", upper bound " + std::to_string(*rep.upper) : "") + ")";
            code = 2;
            break;
    }
    return emit(j, code, summary);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact contiguity invariants for finite simplicial complexes"};
    app.require_subcommand(1);

    CommonOptions o;
    int tc_n = 2;
    int power_n = 2;
    std::uint64_t verify_tuples = 200;
    unsigned verify_seed = 1;
    std::string corpus_dir;

    auto* validate = app.add_subcommand("validate", "parse and summarize a complex (and maps)");
    validate->add_option("--complex", o.complex_path)->required();
    validate->add_option("--codomain", o.codomain_path);
    validate->add_option("--maps", o.map_paths)->delimiter(',');

    auto* contiguous = app.add_subcommand("contiguous", "decide contiguity of two maps");
    contiguous->add_option("--complex", o.complex_path)->required();
    contiguous->add_option("--codomain", o.codomain_path);
    contiguous->add_option("--maps", o.map_paths)->delimiter(',')->required();

    auto* cls = app.add_subcommand("class", "decide contiguity-class membership of two maps");
    cls->add_option("--complex", o.complex_path)->required();
    cls->add_option("--codomain", o.codomain_path);
    cls->add_option("--maps", o.map_paths)->delimiter(',')->required();
    cls->add_option("--max-chain", o.max_chain, "certificate length cap (0 = unlimited)");
    bool cls_reduce = false;
    cls->add_flag("--reduce", cls_reduce, "decide on strong-collapse cores (longer certificates)");
    add_budget_flags(cls, o);

    auto* sd = app.add_subcommand("sd", "higher contiguity distance of the given maps");
    sd->add_option("--complex", o.complex_path)->required();
    sd->add_option("--codomain", o.codomain_path);
    sd->add_option("--maps", o.map_paths)->delimiter(',')->required();
    sd->add_option("--mode", o.mode)->check(CLI::IsMember({"all", "induced"}));
    add_budget_flags(sd, o);

    auto* scat_cmd = app.add_subcommand("scat", "simplicial LS-category");
    scat_cmd->add_option("--complex", o.complex_path)->required();
    scat_cmd->add_option("--mode", o.mode)->check(CLI::IsMember({"all", "induced"}));
    add_budget_flags(scat_cmd, o);

    auto* tc = app.add_subcommand("tc", "discrete topological complexity TC_n");
    tc->add_option("--complex", o.complex_path)->required();
    tc->add_option("--n", tc_n, "number of factors")->check(CLI::PositiveNumber);
    tc->add_option("--mode", o.mode)->check(CLI::IsMember({"all", "induced"}));
    add_budget_flags(tc, o);

    auto* subdivide = app.add_subcommand("subdivide", "barycentric subdivision (facet text format)");
    subdivide->add_option("--complex", o.complex_path)->required();

    auto* power = app.add_subcommand("power", "categorical power K^n");
    power->add_option("--complex", o.complex_path)->required();
    power->add_option("--n", power_n)->check(CLI::PositiveNumber);

    auto* core_cmd = app.add_subcommand("core", "strong-collapse core and trace");
    core_cmd->add_option("--complex", o.complex_path)->required();

    auto* verify = app.add_subcommand("verify", "run the theorem property suite");
    verify->add_option("--corpus", corpus_dir, "directory of .cx files (default: builtin corpus)");
    verify->add_option("--tuples", verify_tuples, "sampled map tuples");
    verify->add_option("--seed", verify_seed);
    add_budget_flags(verify, o);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*validate) {
            auto l = load(o, 0);
            json j;
            j["command"] = "validate";
            j["vertices"] = l.domain.vertex_count();
            j["facets"] = l.domain.facet_count();
            j["faces"] = l.domain.face_count();
            j["edge_path_connected"] = l.domain.edge_path_connected();
            j["maps_ok"] = l.maps.size();
            return emit(j, 0, "ok: " + std::to_string(l.domain.vertex_count()) + " vertices, " +
                                  std::to_string(l.domain.face_count()) + " faces");
        }

        if (*contiguous) {
            auto l = load(o, 2);
            contig::Mask witness = contig::contiguity_witness(l.maps[0], l.maps[1]);
            json j;
            j["command"] = "contiguous";
            j["contiguous"] = witness == 0;
            if (witness) {
                std::vector<std::string> w;
                for (int v : contig::mask_vertices(witness)) w.push_back(l.domain.label(v));
                j["witness_facet"] = w;
            }
            return emit(j, 0, witness == 0 ? "contiguous" : "not contiguous");
        }

        if (*cls) {
            auto l = load(o, 2);
            contig::ClassBudget cb;
            cb.max_visits = o.budget.max_visits;
            cb.core_reduction = cls_reduce;
            if (o.max_chain) cb.max_chain = o.max_chain;
            contig::ClassDecision d = contig::same_contiguity_class(l.maps[0], l.maps[1], cb);
            json j = contig::class_decision_json(d);
            j["command"] = "class";
            int code = d.verdict == contig::Tri::Unknown ? 2 : 0;
            std::string s = d.verdict == contig::Tri::Equivalent      ? "equivalent (chain length " +
                                                                       std::to_string(d.chain.size()) + ")"
                            : d.verdict == contig::Tri::NotEquivalent ? "not equivalent"
                                                                      : "unknown within budget";
            return emit(j, code, s);
        }

        if (*sd) {
            auto l = load(o, 2);
            return emit_distance(contig::contiguity_distance(l.maps, parse_mode(o.mode), o.budget),
                                 "sd");
        }

        if (*scat_cmd) {
            auto k = contig::parse_complex_file(o.complex_path);
            return emit_distance(contig::scat(k, parse_mode(o.mode), o.budget), "scat");
        }

        if (*tc) {
            auto k = contig::parse_complex_file(o.complex_path);
            return emit_distance(contig::discrete_tc(k, tc_n, parse_mode(o.mode), o.budget), "tc");
        }

        if (*subdivide) {
            auto k = contig::parse_complex_file(o.complex_path);
            auto sdk = contig::barycentric_subdivision(k);
            std::cout << contig::emit_complex_text(sdk.complex);
            std::cerr << "sd: " << sdk.complex.vertex_count() << " vertices, "
                      << sdk.complex.facet_count() << " facets\n";
            return 0;
        }

        if (*power) {
            auto k = contig::parse_complex_file(o.complex_path);
            auto p = contig::categorical_power(k, power_n);
            json j;
            j["command"] = "power";
            j["n"] = power_n;
            j["vertices"] = p.complex.vertex_count();
            json facets = json::array();
            for (contig::Mask f : p.complex.facets()) {
                json facet = json::array();
                for (int v : contig::mask_vertices(f)) facet.push_back(p.complex.label(v));
                facets.push_back(facet);
            }
            j["facets"] = facets;
            return emit(j, 0, "K^" + std::to_string(power_n) + ": " +
                                  std::to_string(p.complex.vertex_count()) + " vertices, " +
                                  std::to_string(p.complex.facet_count()) + " facets");
        }

        if (*core_cmd) {
            auto k = contig::parse_complex_file(o.complex_path);
            auto trace = contig::core(k);
            json j;
            j["command"] = "core";
            json steps = json::array();
            for (const auto& [removed, dominator] : trace.steps)
                steps.push_back({{"removed", removed}, {"dominated_by", dominator}});
            j["steps"] = steps;
            json facets = json::array();
            for (contig::Mask f : trace.result.facets()) {
                json facet = json::array();
                for (int v : contig::mask_vertices(f)) facet.push_back(trace.result.label(v));
                facets.push_back(facet);
            }
            j["core_facets"] = facets;
            j["strongly_collapsible"] = trace.collapsed_to_point();
            return emit(j, 0, "core has " + std::to_string(trace.result.vertex_count()) +
                                  " vertices after " + std::to_string(trace.steps.size()) + " steps");
        }

        if (*verify) {
            std::vector<contig::Complex> corpus;
            if (corpus_dir.empty()) {
                corpus = contig::builtin_corpus();
            } else {
                for (const auto& entry : std::filesystem::directory_iterator(corpus_dir))
                    if (entry.path().extension() == ".cx")
                        corpus.push_back(contig::parse_complex_file(entry.path().string()));
                std::sort(corpus.begin(), corpus.end(),
                          [](const contig::Complex& a, const contig::Complex& b) {
                              return a.labels() < b.labels();
                          });
                if (corpus.empty())
                    throw contig::Error(contig::ErrorCode::EmptyComplex,
                                        "no .cx files in corpus directory");
            }
            contig::VerifyOptions vo;
            vo.tuples = verify_tuples;
            vo.seed = verify_seed;
            vo.budget = o.budget;
            vo.progress = true;
            contig::VerifyReport rep = contig::verify_theorem_suite(corpus, vo);
            json j;
            j["command"] = "verify";
            j["tuples"] = rep.tuples_sampled;
            json checks = json::array();
            for (const auto& c : rep.checks) {
                json cj;
                cj["name"] = c.name;
                cj["cases"] = c.cases;
                cj["skipped"] = c.skipped;
                cj["violations"] = c.violations;
                checks.push_back(cj);
            }
            j["checks"] = checks;
            j["all_passed"] = rep.all_passed();
            for (const auto& c : rep.checks)
                std::cerr << (c.violations.empty() ? "pass" : "FAIL") << "  " << c.name << " ("
                          << c.cases << " cases, " << c.skipped << " skipped)\n";
            return emit(j, rep.all_passed() ? 0 : 1,
                        rep.all_passed() ? "all checks passed" : "violations found");
        }
    } catch (const contig::Error& e) {
        std::cout << contig::error_json(e).dump(2) << "\n";
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        json j;
        j["error"] = "Internal";
        j["message"] = e.what();
        std::cout << j.dump(2) << "\n";
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
