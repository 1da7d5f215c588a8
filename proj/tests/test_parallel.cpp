#include "af/bench.hpp"
#include "af/cuts.hpp"
#include "af/generator.hpp"
#include "af/splitting.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace af;

// The OpenMP branch kernel must return exactly what the serial reference
// returns, counts included.
TEST_CASE("parallel split branches match the serial reference") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        int n = 2 + static_cast<int>(seed % 10);
        long long m = static_cast<long long>((seed * 47) % (n * n + 1));
        Framework f = random_framework(n, m, 17000 + seed);
        Cut cut = balanced_cut(f);

        SplitOptions serial;
        SplitOptions parallel;
        parallel.parallel = true;
        SplitResult reference = split_enumerate_stable(f, cut, serial);
        SplitResult candidate = split_enumerate_stable(f, cut, parallel);
        CAPTURE(seed);
        CHECK(candidate.combined == reference.combined);
        CHECK(candidate.f1_labelings == reference.f1_labelings);
        CHECK(candidate.f2_runs == reference.f2_runs);
        CHECK(candidate.discarded == reference.discarded);
    }
}

TEST_CASE("parallel run_method keeps the solve outcome") {
    Framework f = symmetric_framework(12, 30, 321);
    SolveConfig serial;
    SolveConfig parallel;
    parallel.parallel = true;
    SolveOutcome reference = run_method(f, Method::split_bc, serial);
    SolveOutcome candidate = run_method(f, Method::split_bc, parallel);
    CHECK(candidate.labelings == reference.labelings);
    CHECK(candidate.discarded == reference.discarded);
}

TEST_CASE("parallel split honors the deadline") {
    std::vector<Attack> attacks;
    for (ArgId a = 0; a + 1 < 26; ++a) {
        attacks.push_back({a, a + 1});
        attacks.push_back({a + 1, a});
    }
    Framework chain = Framework::with_default_names(26, std::move(attacks));
    Cut cut = balanced_cut(chain);
    Deadline expired{std::chrono::steady_clock::now() - std::chrono::milliseconds(1)};
    SplitOptions options;
    options.parallel = true;
    options.deadline = &expired;
    CHECK_THROWS_AS(split_enumerate_stable(chain, cut, options), TimeoutError);
}
