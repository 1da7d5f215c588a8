#include <set>

#include "af/generator.hpp"
#include "af/semantics.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace af;
using test::extension_set;
using test::make_fex;

namespace {

Labeling fex_stable() {
    return Labeling::from_sets(5, std::vector<ArgId>{1, 4}, std::vector<ArgId>{0, 2, 3},
                               std::vector<ArgId>{});
}

}  // namespace

TEST_CASE("labeling partition validation") {
    CHECK_THROWS_AS(Labeling::from_sets(2, std::vector<ArgId>{0}, std::vector<ArgId>{0},
                                        std::vector<ArgId>{}),
                    std::invalid_argument);
    CHECK_THROWS_AS(Labeling::from_sets(2, std::vector<ArgId>{0}, std::vector<ArgId>{},
                                        std::vector<ArgId>{}),
                    std::invalid_argument);
}

TEST_CASE("argument_legality follows the label conditions") {
    Framework f = make_fex();
    Labeling l = fex_stable();
    CHECK(argument_legality(f, l, 4) == LegalityStatus::legally_in);  // no attackers
    CHECK(argument_legality(f, l, 0) == LegalityStatus::legally_out);  // attacker 4 is in
    CHECK(argument_legality(f, l, 1) == LegalityStatus::legally_in);
    CHECK(argument_legality(f, l, 3) == LegalityStatus::legally_out);

    Framework cycle = Framework::with_default_names(2, {{0, 1}, {1, 0}});
    Labeling all_in(2, Label::in);
    CHECK(argument_legality(cycle, all_in, 0) == LegalityStatus::illegally_in);

    Labeling undec(2, Label::undec);
    CHECK(argument_legality(cycle, undec, 0) == LegalityStatus::legally_undec);
    Labeling mixed = Labeling::from_sets(2, std::vector<ArgId>{1}, std::vector<ArgId>{},
                                         std::vector<ArgId>{0});
    CHECK(argument_legality(cycle, mixed, 0) == LegalityStatus::illegally_undec);
}

TEST_CASE("is_stable_labeling") {
    Framework f = make_fex();
    CHECK(is_stable_labeling(f, fex_stable()));

    Labeling wrong = Labeling::from_sets(5, std::vector<ArgId>{4}, std::vector<ArgId>{0, 1, 2, 3},
                                         std::vector<ArgId>{});
    CHECK_FALSE(is_stable_labeling(f, wrong));  // 1 is illegally out

    Labeling with_undec = Labeling::from_sets(5, std::vector<ArgId>{1, 4},
                                              std::vector<ArgId>{0, 2}, std::vector<ArgId>{3});
    CHECK_FALSE(is_stable_labeling(f, with_undec));
}

TEST_CASE("both stability characterizations agree on random labelings") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        int n = 1 + static_cast<int>(seed % 7);
        Framework f = random_framework(n, (3 * seed) % (n * n + 1), 5000 + seed);
        SplitMix64 rng(seed);
        Labeling l(n, Label::in);
        for (ArgId a = 0; a < n; ++a) l.set(a, static_cast<Label>(rng.below(3)));
        bool by_labels = is_stable_labeling(f, l);
        bool by_extension = !l.any(Label::undec) && is_stable_extension(f, l.members(Label::in));
        CAPTURE(seed);
        CHECK(by_labels == by_extension);
    }
}

TEST_CASE("enumerate_stable_bruteforce on the examples") {
    CHECK(extension_set(enumerate_stable_bruteforce(make_fex())) ==
          std::set<Extension>{{1, 4}});

    Framework self_loop = Framework::with_default_names(1, {{0, 0}});
    CHECK(enumerate_stable_bruteforce(self_loop).empty());

    Framework cycle = Framework::with_default_names(2, {{0, 1}, {1, 0}});
    CHECK(extension_set(enumerate_stable_bruteforce(cycle)) == std::set<Extension>{{0}, {1}});

    CHECK_THROWS_AS(enumerate_stable_bruteforce(Framework::with_default_names(25, {})),
                    std::invalid_argument);
}

TEST_CASE("enumerate_stable on the examples") {
    Framework f = make_fex();
    std::vector<Labeling> labelings = enumerate_stable(f);
    REQUIRE(labelings.size() == 1);
    CHECK(labelings[0] == fex_stable());

    Framework complete6 = complete_framework(6);
    CHECK(complete6.attack_count() == 36);
    CHECK(enumerate_stable(complete6).empty());
}

TEST_CASE("enumerate_stable matches the oracle on random frameworks") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        int n = 1 + static_cast<int>(seed % 10);
        long long m = static_cast<long long>((seed * 13) % (n * n + 1));
        Framework f = random_framework(n, m, 6000 + seed);
        CAPTURE(seed);
        CHECK(extension_set(enumerate_stable(f)) ==
              extension_set(enumerate_stable_bruteforce(f)));
    }
}

TEST_CASE("strategy changes traversal order only") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        int n = 2 + static_cast<int>(seed % 9);
        Framework f = random_framework(n, (seed * 17) % (n * n + 1), 7000 + seed);
        std::vector<Labeling> base = enumerate_stable(f, {});
        for (std::uint64_t s : {0ULL, 1ULL, 99ULL}) {
            SearchStrategy random_pick{SearchStrategy::Kind::seeded_random, s};
            CHECK(enumerate_stable(f, random_pick) == base);
        }
    }
}

TEST_CASE("every returned labeling is stable and complete w.r.t. the oracle") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        int n = 1 + static_cast<int>(seed % 8);
        Framework f = random_framework(n, (seed * 19) % (n * n + 1), 8000 + seed);
        std::vector<Labeling> found = enumerate_stable(f);
        for (const Labeling& l : found) CHECK(is_stable_labeling(f, l));
        CHECK(extension_set(found) == extension_set(enumerate_stable_bruteforce(f)));
    }
}

TEST_CASE("labeling and extension conversions") {
    Framework f = make_fex();
    CHECK(labeling_from_extension(f, {1, 4}) == fex_stable());
    CHECK_THROWS_WITH_AS(labeling_from_extension(f, {0}), "not a stable extension",
                         std::invalid_argument);

    Framework single = Framework::with_default_names(1, {});
    Labeling only = labeling_from_extension(single, {0});
    CHECK(only.members(Label::in) == Extension{0});
    CHECK(only.members(Label::out).empty());

    CHECK(extension_from_labeling(fex_stable()) == Extension{1, 4});
    CHECK(extension_from_labeling(labeling_from_extension(f, {1, 4})) == Extension{1, 4});
    CHECK(extension_from_labeling(Labeling{}).empty());
}

TEST_CASE("symmetric irreflexive frameworks always have a stable labeling") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        int n = 2 + static_cast<int>(seed % 7);
        long long max_pairs = n * (n - 1);
        long long m = 2 * ((seed * 3) % (max_pairs / 2 + 1));
        Framework f = symmetric_framework(n, m, 9000 + seed);
        CAPTURE(seed);
        CHECK(!enumerate_stable(f).empty());
    }
}

TEST_CASE("enumerate_stable honors the deadline") {
    // Mutual-attack chain: stable labelings grow exponentially, so an already
    // expired deadline must abort the search.
    std::vector<Attack> attacks;
    for (ArgId a = 0; a + 1 < 22; ++a) {
        attacks.push_back({a, a + 1});
        attacks.push_back({a + 1, a});
    }
    Framework chain = Framework::with_default_names(22, std::move(attacks));
    Deadline expired{std::chrono::steady_clock::now() - std::chrono::milliseconds(1)};
    CHECK_THROWS_AS(enumerate_stable(chain, {}, &expired), TimeoutError);
}
