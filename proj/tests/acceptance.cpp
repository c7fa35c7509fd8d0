// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure.  Sample counts, seeds and wall-clock budgets are pinned here.

#include <chrono>
#include <cstdio>
#include <string>

#include "rim/suites.hpp"

namespace {

int failures = 0;
int criterion = 0;

void report(const std::string& name, bool pass, const std::string& detail = "") {
    ++criterion;
    std::printf("criterion %2d %-24s %s\n", criterion, name.c_str(), pass ? "pass" : "FAIL");
    if (!pass) {
        if (!detail.empty()) std::printf("    %s\n", detail.c_str());
        ++failures;
    }
    std::fflush(stdout);
}

// Run a suite under a wall-clock budget (seconds; <= 0 means unbudgeted).
void run(const std::string& name, const rim::SuiteFn& fn, uint64_t seed, int samples,
         double budget_s) {
    auto t0 = std::chrono::steady_clock::now();
    rim::SuiteReport r = fn(seed, samples);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::string detail = r.pass ? "" : r.witness;
    bool pass = r.pass;
    if (pass && budget_s > 0 && secs > budget_s) {
        pass = false;
        detail = "exceeded time budget: " + std::to_string(secs) + "s > " +
                 std::to_string(budget_s) + "s";
    }
    report(name + " (" + std::to_string(samples) + " samples, " +
               std::to_string(secs).substr(0, 5) + "s)",
           pass, detail);
}

} // namespace

int main() {
    using namespace rim;
    const uint64_t seed = 20240817;

    // 1. circuit codec round trip, <= 40 vertices
    run("codec", [](uint64_t s, int n) { return suites::codec(s, n); }, seed, 500, 10.0);

    // 2. compiler equivalence in both directions, l_in <= 12
    run("compiler", [](uint64_t s, int n) { return suites::compiler(s, n); }, seed, 300, 60.0);

    // 3. monoid laws with the exhaustive pointwise oracle
    run("monoid laws", [](uint64_t s, int n) { return suites::monoid(s, n); }, seed, 1000, 0);

    // 4. injective-normal and normal-chain factorizations
    run("factorizations",
        [](uint64_t s, int n) { return suites::factorization(s, n, 100); }, seed, 300, 0);

    // 5. regularity: f f' f = f
    run("regularity", [](uint64_t s, int n) { return suites::regularity(s, n); }, seed, 300, 0);

    // 6. completion suite (both modes, homomorphy, uniqueness) plus the
    //    pinned witness that the classical totalization is not homomorphic
    {
        auto t0 = std::chrono::steady_clock::now();
        SuiteReport r = suites::completion(seed, 300);
        bool pass = r.pass;
        std::string detail = r.witness;
        RimTable f = make_rim({{"1", "0"}}, 2);
        RimTable g = make_rim({{"0", "1"}}, 2);
        RimTable lhs = compose(tilde_complete(g), tilde_complete(f));
        std::map<Word, Word> want{{"0", "1"}, {"1", "1"}};
        if (pass && (lhs.rows != want || equiv_fin(lhs, tilde_complete(compose(g, f))))) {
            pass = false;
            detail = "totalization witness not reproduced";
        }
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        report("completions (300 samples, " + std::to_string(secs).substr(0, 5) + "s)", pass,
               detail);
    }

    // 7. circuit completion semantics and depth bound
    run("circuit completion",
        [](uint64_t s, int n) { return suites::circuit_completion(s, n); }, seed, 200, 0);

    // 8. decomposition into an unambiguous union, |w| <= 10
    run("decomposition", [](uint64_t s, int n) { return suites::decomposition(s, n); }, seed,
        300, 120.0);

    // 9. union/composition algebra: pinned fragment identities + recombination
    run("union algebra", [](uint64_t s, int n) { return suites::union_algebra(s, n); }, seed,
        100, 0);

    // 10. emptiness oracle with guaranteed-empty instances, cap 16
    run("emptiness oracle", [](uint64_t s, int n) { return suites::appendix(s, n); }, seed,
        200, 0);

    // 11. length-difference laws and the pinned delta set of a1
    run("delta laws", [](uint64_t s, int n) { return suites::delta_laws(s, n); }, seed, 500, 0);

    if (failures) std::printf("%d criterion(s) FAILED\n", failures);
    else std::printf("all %d criteria passed\n", criterion);
    return failures ? 1 : 0;
}
