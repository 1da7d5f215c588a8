#include "af/generator.hpp"

#include <set>
#include <stdexcept>
#include <string>

namespace af {

std::uint64_t SplitMix64::below(std::uint64_t bound) {
    // Rejection sampling on the top of the range keeps every residue equally
    // likely, which the generator uniformity contract requires.
    std::uint64_t limit = bound * (~std::uint64_t{0} / bound);
    std::uint64_t value;
    do {
        value = next();
    } while (value >= limit);
    return value % bound;
}

Framework random_framework(int n, long long m, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_framework: needs at least 1 argument");
    const long long all_pairs = static_cast<long long>(n) * n;
    if (m < 0 || m > all_pairs)
        throw std::invalid_argument("random_framework: attack count exceeds n*n");

    SplitMix64 rng(seed);
    std::set<Attack> attacks;
    while (static_cast<long long>(attacks.size()) < m) {
        ArgId source = static_cast<ArgId>(rng.below(static_cast<std::uint64_t>(n)));
        ArgId target = static_cast<ArgId>(rng.below(static_cast<std::uint64_t>(n)));
        attacks.insert({source, target});
    }
    return Framework::with_default_names(n, {attacks.begin(), attacks.end()});
}

Framework complete_framework(int n) {
    if (n < 1) throw std::invalid_argument("complete_framework: needs at least 1 argument");
    std::vector<Attack> attacks;
    attacks.reserve(static_cast<std::size_t>(n) * n);
    for (ArgId source = 0; source < n; ++source)
        for (ArgId target = 0; target < n; ++target) attacks.push_back({source, target});
    return Framework::with_default_names(n, std::move(attacks));
}

Framework symmetric_framework(int n, long long m, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("symmetric_framework: needs at least 1 argument");
    if (m % 2 != 0) throw std::invalid_argument("symmetric_framework: attack count must be even");
    const long long non_self_pairs = static_cast<long long>(n) * n - n;
    if (m < 0 || m > non_self_pairs)
        throw std::invalid_argument("symmetric_framework: attack count exceeds n*n - n");

    SplitMix64 rng(seed);
    std::set<Attack> attacks;
    while (static_cast<long long>(attacks.size()) < m) {
        ArgId a = static_cast<ArgId>(rng.below(static_cast<std::uint64_t>(n)));
        ArgId b = static_cast<ArgId>(rng.below(static_cast<std::uint64_t>(n)));
        if (a == b) continue;
        attacks.insert({a, b});
        attacks.insert({b, a});
    }
    return Framework::with_default_names(n, {attacks.begin(), attacks.end()});
}

}  // namespace af
