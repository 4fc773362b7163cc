// Property suite: evaluates the checkable identities and inequalities of
// the distance theory on a corpus of small complexes with sampled map
// tuples, reporting any violation with a shrunk counterexample.

#ifndef CONTIG_VERIFY_HPP
#define CONTIG_VERIFY_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "contig/complex.hpp"
#include "contig/distance.hpp"

namespace contig {

struct VerifyOptions {
    std::uint64_t tuples = 200;  // sampled map tuples across the corpus
    unsigned seed = 1;
    SearchBudget budget;
    bool progress = false;  // one line per 50 tuples on stderr
};

struct CheckResult {
    std::string name;
    std::uint64_t cases = 0;
    std::uint64_t skipped = 0;  // preconditions not met (conditional laws)
    std::vector<std::string> violations;
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    std::uint64_t tuples_sampled = 0;
    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.violations.empty()) return false;
        return true;
    }
    std::uint64_t total_cases() const {
        std::uint64_t n = 0;
        for (const auto& c : checks) n += c.cases;
        return n;
    }
};

// Small complexes (<= 6 vertices) exercising the suite; includes the
// standard figures.
std::vector<Complex> builtin_corpus();

// A uniformly random valid simplicial map domain -> codomain (backtracking
// with randomized image order; constants guarantee existence).
SimplicialMap random_simplicial_map(const Complex& domain, const Complex& codomain,
                                    std::mt19937& rng);

VerifyReport verify_theorem_suite(const std::vector<Complex>& corpus, const VerifyOptions& options);

}  // namespace contig

#endif
