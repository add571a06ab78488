// Acceptance run: one PASS/FAIL line per criterion, non-zero exit on failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "latframe/classical.hpp"
#include "latframe/coordinates.hpp"
#include "latframe/corpus.hpp"
#include "latframe/invariants.hpp"
#include "latframe/lattice.hpp"

using namespace latframe;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Verdict {
    bool passed = true;
    std::string detail;

    void require(bool condition, const std::string& what) {
        if (!condition && passed) {
            passed = false;
            detail = what;
        }
    }
};

struct CorpusRun {
    std::vector<SuiteReport> reports;
    double seconds = 0;
    std::string error;
};

CorpusRun run_corpus() {
    CorpusRun run;
    const auto start = Clock::now();
    try {
        for (const auto& entry : reference_corpus()) run.reports.push_back(run_invariants(entry.graph, {}, entry.name));
    } catch (const std::exception& e) {
        run.error = e.what();
    }
    run.seconds = seconds_since(start);
    return run;
}

// Every check of the listed properties must pass on every corpus graph.
Verdict corpus_properties(const CorpusRun& run, const std::vector<Property>& properties) {
    Verdict v;
    v.require(run.error.empty(), run.error);
    std::size_t checks = 0;
    for (const auto& report : run.reports) {
        for (const auto& check : report.checks) {
            if (std::find(properties.begin(), properties.end(), check.property) == properties.end()) continue;
            ++checks;
            v.require(check.passed, report.graph + ": " + check.name + ": " + check.detail);
        }
    }
    v.require(checks > 0, "no checks ran");
    if (v.passed)
        v.detail = std::to_string(checks) + " checks on " + std::to_string(run.reports.size()) + " graphs";
    return v;
}

Verdict counts() {
    Verdict v;
    const std::vector<int> factorial{1, 1, 2, 6, 24, 120};
    std::ostringstream timing;
    for (int n = 2; n <= 5; ++n) {
        const auto g = oruga(n);
        const auto start = Clock::now();
        const auto L = FramingLattice::build(g);
        const double elapsed = seconds_since(start);
        const std::string name = "oruga(" + std::to_string(n) + ")";
        v.require(L.size() == factorial[static_cast<std::size_t>(n)], name + " element count " + std::to_string(L.size()));
        for (const auto& c : L.elements())
            v.require(static_cast<int>(c.routes.size()) == n + 1, name + " clique of wrong size");
        const auto bricks = enumerate_bricks(g).size();
        v.require(bricks == (std::size_t{1} << n) - static_cast<std::size_t>(n) - 1,
                  name + " brick count " + std::to_string(bricks));
        if (n == 5) {
            v.require(elapsed < 30.0, "oruga(5) took " + std::to_string(elapsed) + " s");
            char buffer[64];
            std::snprintf(buffer, sizeof buffer, "oruga(5) built in %.3f s", elapsed);
            timing << buffer;
        }
    }
    for (int n = 2; n <= 4; ++n) {
        const auto g = caracol(n);
        const int formula = g.edge_count() - g.vertex_count() + 2;
        v.require(g.clique_size() == formula, "caracol clique size formula");
        for (const auto& c : maximal_cliques(RouteCatalog(g)))
            v.require(static_cast<int>(c.routes.size()) == formula, "caracol(" + std::to_string(n) + ") clique size");
    }
    v.require(caracol(3).clique_size() == 5, "caracol(3) clique size");
    if (v.passed) v.detail = timing.str();
    return v;
}

Verdict classical_models() {
    Verdict v;
    for (int n = 1; n <= 4; ++n) {
        const auto L = FramingLattice::build(oruga(n));
        const auto perms = all_permutations(n);
        std::set<int> image;
        for (const auto& p : perms) image.insert(L.index_of(perm_to_clique(L.catalog(), p)));
        v.require(image.size() == perms.size() && static_cast<int>(image.size()) == L.size(),
                  "permutations do not cover oruga(" + std::to_string(n) + ")");
        for (const auto& a : perms)
            for (const auto& b : perms)
                v.require(L.leq(L.index_of(perm_to_clique(L.catalog(), a)), L.index_of(perm_to_clique(L.catalog(), b))) ==
                              weak_leq(a, b),
                          "order mismatch at " + format_permutation(a) + ", " + format_permutation(b));
        const auto coords = all_ccl(L);
        for (const auto& p : perms) {
            const auto& c = coords[static_cast<std::size_t>(L.index_of(perm_to_clique(L.catalog(), p)))];
            for (int i = 1; i < n; ++i)
                v.require(c.values[static_cast<std::size_t>(i - 1)] == ccl_weak_formula(p, i),
                          "inversion formula fails at " + format_permutation(p));
        }
    }
    const RouteCatalog oruga3(oruga(3));
    v.require(ccl(oruga3, perm_to_clique(oruga3, {3, 2, 1})).values == std::vector<int>{3, 1}, "321 is not (3,1)");

    std::string lehmer;
    for (int n = 2; n <= 4 && lehmer.empty(); ++n)
        if (const auto pair = lehmer_counterexample(n))
            lehmer = format_permutation(pair->first) + "/" + format_permutation(pair->second);
    v.require(!lehmer.empty(), "no Lehmer counterexample for n <= 4");

    for (int n = 2; n <= 3; ++n) {
        const auto report = tamari_check(n);
        v.require(report.passed(), "caracol(" + std::to_string(n) + "): " + report.failure);
        v.require(report.vector_sets_equal, "bracket vectors differ from coordinates");
    }
    if (v.passed) v.detail = "Lehmer witness " + lehmer;
    return v;
}

}  // namespace

int main() {
    std::vector<std::pair<std::string, std::function<Verdict()>>> criteria;
    CorpusRun corpus;
    bool corpus_ready = false;
    const auto on_corpus = [&](std::vector<Property> properties) {
        return [&, properties = std::move(properties)] {
            if (!corpus_ready) {
                corpus = run_corpus();
                corpus_ready = true;
            }
            return corpus_properties(corpus, properties);
        };
    };

    criteria.emplace_back("clique and brick counts", counts);
    criteria.emplace_back("reconstruction round trips", [&] {
        auto v = on_corpus({Property::structure, Property::round_trips})();
        v.require(corpus.seconds < 60.0, "corpus took " + std::to_string(corpus.seconds) + " s");
        return v;
    });
    criteria.emplace_back("greedy steps match brute force", on_corpus({Property::greedy_oracles}));
    criteria.emplace_back("cornering inverts the second step", on_corpus({Property::cornering}));
    criteria.emplace_back("cube embedding", on_corpus({Property::cube_embedding}));
    criteria.emplace_back("comparison by coordinates", [&] {
        auto v = on_corpus({Property::comparison})();
        bool witness = false;
        for (const auto& r : corpus.reports) witness = witness || r.observed.meet_intersection_witness;
        v.require(witness, "no meet whose left-clockwise set differs from the intersection");
        return v;
    });
    criteria.emplace_back("semidistributivity and canonical joins", on_corpus({Property::lattice_theory}));
    criteria.emplace_back("classical models", classical_models);
    criteria.emplace_back("duality and rowmotion", on_corpus({Property::duality}));

    int failed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        Verdict v;
        try {
            v = criteria[k].second();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        failed += v.passed ? 0 : 1;
        std::cout << (v.passed ? "PASS" : "FAIL") << "  " << k + 1 << ". " << criteria[k].first;
        if (!v.detail.empty()) std::cout << "  (" << v.detail << ")";
        std::cout << '\n';
    }
    std::cout << criteria.size() - static_cast<std::size_t>(failed) << "/" << criteria.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
