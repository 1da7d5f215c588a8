#pragma once

#include <chrono>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "af/framework.hpp"

namespace af {

enum class Label : std::uint8_t { in, out, undec };

/// Three-way partition of the arguments of one framework.
class Labeling {
  public:
    Labeling() = default;
    Labeling(int n, Label fill) : labels_(static_cast<std::size_t>(n), fill) {}

    /// Throws std::invalid_argument unless the three sets partition [0, n).
    static Labeling from_sets(int n, std::span<const ArgId> in, std::span<const ArgId> out,
                              std::span<const ArgId> undec);

    int size() const { return static_cast<int>(labels_.size()); }
    Label at(ArgId a) const { return labels_[static_cast<std::size_t>(a)]; }
    void set(ArgId a, Label l) { labels_[static_cast<std::size_t>(a)] = l; }

    std::vector<ArgId> members(Label l) const;
    bool any(Label l) const;

    bool operator==(const Labeling&) const = default;

  private:
    std::vector<Label> labels_;
};

enum class LegalityStatus {
    legally_in,
    legally_out,
    legally_undec,
    illegally_in,
    illegally_out,
    illegally_undec,
};

/// Label legality of `a` under `l`: in is legal iff all attackers are out,
/// out is legal iff some attacker is in, undec is legal iff neither holds.
LegalityStatus argument_legality(const Framework& f, const Labeling& l, ArgId a);

/// No illegal in/out label, no legally undec argument, and undec is empty.
bool is_stable_labeling(const Framework& f, const Labeling& l);

using Extension = std::vector<ArgId>;  // sorted member ids

/// Extension route to the same predicate: conflict-free and attacking every
/// non-member.
bool is_stable_extension(const Framework& f, const Extension& e);

/// Exhaustive subset scan; the testing oracle. Guarded at 24 arguments.
std::vector<Extension> enumerate_stable_bruteforce(const Framework& f);

struct SearchStrategy {
    enum class Kind { lowest_id, seeded_random };
    Kind kind = Kind::lowest_id;
    std::uint64_t seed = 0;
};

struct Deadline {
    std::chrono::steady_clock::time_point at;
    bool expired() const { return std::chrono::steady_clock::now() >= at; }
};

class TimeoutError : public std::runtime_error {
  public:
    TimeoutError() : std::runtime_error("solve abandoned: time budget exhausted") {}
};

/// All stable labelings, found by labeling search from the all-in labeling.
/// The strategy changes traversal order only. Throws TimeoutError when the
/// deadline expires mid-search.
std::vector<Labeling> enumerate_stable(const Framework& f,
                                       const SearchStrategy& strategy = {},
                                       const Deadline* deadline = nullptr);

/// (e, A minus e, {}); throws std::invalid_argument if e is not stable.
Labeling labeling_from_extension(const Framework& f, const Extension& e);

Extension extension_from_labeling(const Labeling& l);

/// Canonical order for labeling collections: lexicographic by in-set.
void sort_labelings(std::vector<Labeling>& labelings);

}  // namespace af
