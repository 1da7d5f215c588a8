#include <map>

#include "af/apx.hpp"
#include "af/generator.hpp"
#include "af/scc.hpp"
#include "af/semantics.hpp"
#include "doctest.h"

using namespace af;

TEST_CASE("random_framework counts and determinism") {
    Framework f = random_framework(10, 30, 77);
    CHECK(f.size() == 10);
    CHECK(f.attack_count() == 30);

    CHECK(serialize_apx(random_framework(10, 30, 77)) == serialize_apx(f));
    CHECK(serialize_apx(random_framework(10, 30, 78)) != serialize_apx(f));

    CHECK(random_framework(4, 16, 3) == complete_framework(4));
    CHECK_THROWS_AS(random_framework(3, 10, 0), std::invalid_argument);
}

TEST_CASE("complete_framework shapes") {
    CHECK(complete_framework(6).attack_count() == 36);
    CHECK(complete_framework(10).attack_count() == 100);

    Framework loop = complete_framework(1);
    CHECK(loop.attack_count() == 1);
    CHECK(loop.has_attack(0, 0));
    CHECK(enumerate_stable_bruteforce(loop).empty());
}

TEST_CASE("symmetric_framework construction") {
    Framework f = symmetric_framework(4, 4, 5);
    CHECK(f.attack_count() == 4);
    for (const Attack& at : f.attacks()) {
        CHECK(at.source != at.target);
        CHECK(f.has_attack(at.target, at.source));
    }
    CHECK_THROWS_AS(symmetric_framework(4, 3, 0), std::invalid_argument);
    CHECK_THROWS_AS(symmetric_framework(3, 8, 0), std::invalid_argument);
}

TEST_CASE("symmetric frameworks carry at least one stable extension") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        int n = 2 + static_cast<int>(seed % 8);
        long long max_m = n * (n - 1);
        long long m = 2 * ((seed * 7) % (max_m / 2 + 1));
        Framework f = symmetric_framework(n, m, 16000 + seed);
        CAPTURE(seed);
        CHECK(!enumerate_stable_bruteforce(f).empty());
    }
}

TEST_CASE("attack sampling is uniform") {
    std::map<Attack, int> counts;
    const int samples = 10000;
    for (int i = 0; i < samples; ++i) {
        Framework f = random_framework(3, 1, 50000 + static_cast<std::uint64_t>(i));
        counts[f.attacks().front()] += 1;
    }
    CHECK(counts.size() == 9);
    for (const auto& [attack, count] : counts) {
        double frequency = static_cast<double>(count) / samples;
        CAPTURE(attack.source);
        CAPTURE(attack.target);
        CHECK(frequency > 1.0 / 9 - 0.02);
        CHECK(frequency < 1.0 / 9 + 0.02);
    }
}

TEST_CASE("dense random frameworks are usually one SCC") {
    int single = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed)
        if (scc_decomposition(random_framework(10, 30, 60000 + seed)).size() == 1) ++single;
    CHECK(single >= 80);
}
