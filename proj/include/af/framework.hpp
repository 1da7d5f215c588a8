#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace af {

using ArgId = int;

struct Attack {
    ArgId source = 0;
    ArgId target = 0;
    friend auto operator<=>(const Attack&, const Attack&) = default;
};

/// Directed argumentation graph. Immutable after construction; ids are dense
/// in [0, size()) and map one-to-one onto names.
class Framework {
  public:
    /// Throws std::invalid_argument listing every violation (dangling
    /// endpoints, duplicate attacks, empty or duplicated names).
    Framework(std::vector<std::string> names, std::vector<Attack> attacks);

    /// Names arguments a0, a1, ...
    static Framework with_default_names(int n, std::vector<Attack> attacks);

    int size() const { return static_cast<int>(names_.size()); }
    std::size_t attack_count() const { return attacks_.size(); }
    const std::vector<Attack>& attacks() const { return attacks_; }

    /// Sources of attacks on a, ascending.
    std::span<const ArgId> attackers_of(ArgId a) const;
    /// Targets attacked by a, ascending.
    std::span<const ArgId> targets_of(ArgId a) const;

    bool has_attack(ArgId source, ArgId target) const;

    const std::string& name(ArgId id) const { return names_[static_cast<std::size_t>(id)]; }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<ArgId> id_of(std::string_view name) const;

    bool operator==(const Framework& other) const {
        return names_ == other.names_ && attacks_ == other.attacks_;
    }

  private:
    std::vector<std::string> names_;
    std::vector<Attack> attacks_;  // sorted, duplicate free
    std::vector<int> in_offsets_;  // CSR over incoming attacks
    std::vector<ArgId> in_list_;
    std::vector<int> out_offsets_;  // CSR over outgoing attacks
    std::vector<ArgId> out_list_;
    std::unordered_map<std::string, ArgId> id_by_name_;
};

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// Checks the raw pieces of a framework candidate: dangling attack
/// endpoints, duplicate attacks, empty argument set.
ValidationReport validate_framework(int arg_count, std::span<const Attack> attacks);

/// Induced sub-framework on `keep`: ids re-densified, names preserved.
Framework restrict(const Framework& f, std::span<const ArgId> keep);

/// No attack has both endpoints among `members`.
bool is_conflict_free(const Framework& f, std::span<const ArgId> members);

/// Every attacker of `a` is attacked by some member.
bool is_acceptable(const Framework& f, std::span<const ArgId> members, ArgId a);

/// Partition of a framework with the attacks crossing it. k counts the
/// crossing attacks directed a2 -> a1.
struct Cut {
    std::vector<ArgId> a1;   // sorted
    std::vector<ArgId> a2;   // sorted complement
    std::vector<Attack> r3;  // crossing attacks, both directions, sorted
    int k = 0;
};

/// Cut induced by a1 (must be a non-empty proper subset).
Cut cross_attacks(const Framework& f, std::span<const ArgId> a1);

/// Every crossing attack points a1 -> a2 (equivalently k == 0).
bool is_unidirectional(const Cut& c);

}  // namespace af
