#include "af/framework.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace af {

namespace {

void build_csr(int n, const std::vector<Attack>& attacks, bool incoming,
               std::vector<int>& offsets, std::vector<ArgId>& list) {
    offsets.assign(static_cast<std::size_t>(n) + 1, 0);
    for (const Attack& at : attacks) {
        ArgId key = incoming ? at.target : at.source;
        ++offsets[static_cast<std::size_t>(key) + 1];
    }
    for (int i = 0; i < n; ++i) offsets[i + 1] += offsets[i];
    list.resize(attacks.size());
    std::vector<int> cursor(offsets.begin(), offsets.end() - 1);
    for (const Attack& at : attacks) {
        ArgId key = incoming ? at.target : at.source;
        ArgId val = incoming ? at.source : at.target;
        list[static_cast<std::size_t>(cursor[key]++)] = val;
    }
    for (int i = 0; i < n; ++i)
        std::sort(list.begin() + offsets[i], list.begin() + offsets[i + 1]);
}

}  // namespace

Framework::Framework(std::vector<std::string> names, std::vector<Attack> attacks)
    : names_(std::move(names)), attacks_(std::move(attacks)) {
    // Zero arguments is allowed here: splitting can empty one side of a cut.
    // Parsing, generation, and validation enforce the non-empty domain rule.
    ValidationReport report = attack_violations(size(), attacks_);
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i].empty())
            report.violations.push_back("empty name for argument " + std::to_string(i));
        else if (!id_by_name_.emplace(names_[i], static_cast<ArgId>(i)).second)
            report.violations.push_back("duplicate name " + names_[i]);
    }
    if (!report.ok()) {
        std::ostringstream msg;
        msg << "invalid framework:";
        for (const std::string& v : report.violations) msg << " " << v << ";";
        throw std::invalid_argument(msg.str());
    }
    std::sort(attacks_.begin(), attacks_.end());
    build_csr(size(), attacks_, /*incoming=*/true, in_offsets_, in_list_);
    build_csr(size(), attacks_, /*incoming=*/false, out_offsets_, out_list_);
}

Framework Framework::with_default_names(int n, std::vector<Attack> attacks) {
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(std::max(n, 0)));
    for (int i = 0; i < n; ++i) names.push_back("a" + std::to_string(i));
    return Framework(std::move(names), std::move(attacks));
}

std::span<const ArgId> Framework::attackers_of(ArgId a) const {
    return {in_list_.data() + in_offsets_[a],
            in_list_.data() + in_offsets_[static_cast<std::size_t>(a) + 1]};
}

std::span<const ArgId> Framework::targets_of(ArgId a) const {
    return {out_list_.data() + out_offsets_[a],
            out_list_.data() + out_offsets_[static_cast<std::size_t>(a) + 1]};
}

bool Framework::has_attack(ArgId source, ArgId target) const {
    return std::binary_search(attacks_.begin(), attacks_.end(), Attack{source, target});
}

std::optional<ArgId> Framework::id_of(std::string_view name) const {
    auto it = id_by_name_.find(std::string(name));
    if (it == id_by_name_.end()) return std::nullopt;
    return it->second;
}

ValidationReport attack_violations(int arg_count, std::span<const Attack> attacks) {
    ValidationReport report;
    std::set<ArgId> dangling;
    std::set<Attack> seen;
    std::set<Attack> duplicated;
    for (const Attack& at : attacks) {
        if (at.source < 0 || at.source >= arg_count) dangling.insert(at.source);
        if (at.target < 0 || at.target >= arg_count) dangling.insert(at.target);
        if (!seen.insert(at).second) duplicated.insert(at);
    }
    for (ArgId id : dangling)
        report.violations.push_back("dangling endpoint " + std::to_string(id));
    for (const Attack& at : duplicated)
        report.violations.push_back("duplicate attack (" + std::to_string(at.source) + "," +
                                    std::to_string(at.target) + ")");
    return report;
}

ValidationReport validate_framework(int arg_count, std::span<const Attack> attacks) {
    ValidationReport report;
    if (arg_count <= 0) report.violations.push_back("empty argument set");
    ValidationReport rest = attack_violations(arg_count, attacks);
    report.violations.insert(report.violations.end(), rest.violations.begin(),
                             rest.violations.end());
    return report;
}

Framework restrict(const Framework& f, std::span<const ArgId> keep) {
    std::vector<ArgId> sorted(keep.begin(), keep.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted.empty()) throw std::invalid_argument("restrict: empty argument subset");
    if (sorted.front() < 0 || sorted.back() >= f.size())
        throw std::invalid_argument("restrict: argument out of range");

    std::vector<ArgId> local(static_cast<std::size_t>(f.size()), -1);
    std::vector<std::string> names;
    names.reserve(sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        local[sorted[i]] = static_cast<ArgId>(i);
        names.push_back(f.name(sorted[i]));
    }
    std::vector<Attack> attacks;
    for (const Attack& at : f.attacks())
        if (local[at.source] >= 0 && local[at.target] >= 0)
            attacks.push_back({local[at.source], local[at.target]});
    return Framework(std::move(names), std::move(attacks));
}

bool is_conflict_free(const Framework& f, std::span<const ArgId> members) {
    std::vector<char> member(static_cast<std::size_t>(f.size()), 0);
    for (ArgId a : members) member[a] = 1;
    for (const Attack& at : f.attacks())
        if (member[at.source] && member[at.target]) return false;
    return true;
}

bool is_acceptable(const Framework& f, std::span<const ArgId> members, ArgId a) {
    std::vector<char> member(static_cast<std::size_t>(f.size()), 0);
    for (ArgId m : members) member[m] = 1;
    for (ArgId attacker : f.attackers_of(a)) {
        bool defended = false;
        for (ArgId defender : f.attackers_of(attacker)) {
            if (member[defender]) {
                defended = true;
                break;
            }
        }
        if (!defended) return false;
    }
    return true;
}

Cut cross_attacks(const Framework& f, std::span<const ArgId> a1) {
    std::vector<ArgId> side1(a1.begin(), a1.end());
    std::sort(side1.begin(), side1.end());
    side1.erase(std::unique(side1.begin(), side1.end()), side1.end());
    if (side1.empty()) throw std::invalid_argument("cross_attacks: a1 is empty");
    if (side1.front() < 0 || side1.back() >= f.size())
        throw std::invalid_argument("cross_attacks: argument out of range");
    if (static_cast<int>(side1.size()) == f.size())
        throw std::invalid_argument("cross_attacks: a1 is not a proper subset");

    std::vector<char> in_a1(static_cast<std::size_t>(f.size()), 0);
    for (ArgId a : side1) in_a1[a] = 1;

    Cut cut;
    cut.a1 = std::move(side1);
    for (ArgId a = 0; a < f.size(); ++a)
        if (!in_a1[a]) cut.a2.push_back(a);
    for (const Attack& at : f.attacks()) {
        if (in_a1[at.source] == in_a1[at.target]) continue;
        cut.r3.push_back(at);
        if (!in_a1[at.source]) ++cut.k;  // a2 -> a1
    }
    return cut;
}

bool is_unidirectional(const Cut& c) {
    for (const Attack& at : c.r3)
        if (std::binary_search(c.a2.begin(), c.a2.end(), at.source)) return false;
    return true;
}

}  // namespace af
