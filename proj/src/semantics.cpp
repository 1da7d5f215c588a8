#include "af/semantics.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_set>

namespace af {

Labeling Labeling::from_sets(int n, std::span<const ArgId> in, std::span<const ArgId> out,
                             std::span<const ArgId> undec) {
    Labeling l;
    l.labels_.assign(static_cast<std::size_t>(n), Label{3});  // sentinel: unassigned
    auto place = [&](std::span<const ArgId> ids, Label label) {
        for (ArgId a : ids) {
            if (a < 0 || a >= n) throw std::invalid_argument("labeling: argument out of range");
            if (l.labels_[a] != Label{3})
                throw std::invalid_argument("labeling: argument " + std::to_string(a) +
                                            " assigned twice");
            l.labels_[a] = label;
        }
    };
    place(in, Label::in);
    place(out, Label::out);
    place(undec, Label::undec);
    for (int a = 0; a < n; ++a)
        if (l.labels_[a] == Label{3})
            throw std::invalid_argument("labeling: argument " + std::to_string(a) + " unassigned");
    return l;
}

std::vector<ArgId> Labeling::members(Label l) const {
    std::vector<ArgId> out;
    for (std::size_t a = 0; a < labels_.size(); ++a)
        if (labels_[a] == l) out.push_back(static_cast<ArgId>(a));
    return out;
}

bool Labeling::any(Label l) const {
    return std::find(labels_.begin(), labels_.end(), l) != labels_.end();
}

LegalityStatus argument_legality(const Framework& f, const Labeling& l, ArgId a) {
    bool all_attackers_out = true;
    bool some_attacker_in = false;
    for (ArgId b : f.attackers_of(a)) {
        if (l.at(b) != Label::out) all_attackers_out = false;
        if (l.at(b) == Label::in) some_attacker_in = true;
    }
    switch (l.at(a)) {
        case Label::in:
            return all_attackers_out ? LegalityStatus::legally_in : LegalityStatus::illegally_in;
        case Label::out:
            return some_attacker_in ? LegalityStatus::legally_out : LegalityStatus::illegally_out;
        case Label::undec:
        default:
            return (!all_attackers_out && !some_attacker_in) ? LegalityStatus::legally_undec
                                                             : LegalityStatus::illegally_undec;
    }
}

bool is_stable_labeling(const Framework& f, const Labeling& l) {
    if (l.size() != f.size()) return false;
    if (l.any(Label::undec)) return false;
    for (ArgId a = 0; a < f.size(); ++a) {
        LegalityStatus status = argument_legality(f, l, a);
        if (status == LegalityStatus::illegally_in || status == LegalityStatus::illegally_out)
            return false;
    }
    return true;
}

bool is_stable_extension(const Framework& f, const Extension& e) {
    std::vector<char> member(static_cast<std::size_t>(f.size()), 0);
    for (ArgId a : e) {
        if (a < 0 || a >= f.size()) return false;
        member[a] = 1;
    }
    if (!is_conflict_free(f, e)) return false;
    for (ArgId a = 0; a < f.size(); ++a) {
        if (member[a]) continue;
        bool attacked = false;
        for (ArgId b : f.attackers_of(a)) {
            if (member[b]) {
                attacked = true;
                break;
            }
        }
        if (!attacked) return false;
    }
    return true;
}

std::vector<Extension> enumerate_stable_bruteforce(const Framework& f) {
    const int n = f.size();
    if (n > 24)
        throw std::invalid_argument("enumerate_stable_bruteforce: framework exceeds 24 arguments");
    std::vector<std::uint32_t> attacker_mask(static_cast<std::size_t>(n), 0);
    for (const Attack& at : f.attacks())
        attacker_mask[at.target] |= std::uint32_t{1} << at.source;

    std::vector<Extension> result;
    const std::uint32_t end = std::uint32_t{1} << n;
    for (std::uint32_t subset = 0; subset < end; ++subset) {
        bool stable = true;
        for (int a = 0; a < n && stable; ++a) {
            bool member = (subset >> a) & 1;
            if (member) {
                if (attacker_mask[a] & subset) stable = false;  // conflict inside
            } else {
                if (!(attacker_mask[a] & subset)) stable = false;  // not attacked
            }
        }
        if (!stable) continue;
        Extension e;
        for (int a = 0; a < n; ++a)
            if ((subset >> a) & 1) e.push_back(a);
        result.push_back(std::move(e));
    }
    return result;
}

namespace {

// Search node bookkeeping for the labeling enumeration. Labels are packed
// into a byte string so visited labelings can live in a hash set.
struct LabelKeyHash {
    std::size_t operator()(const std::string& s) const noexcept {
        return std::hash<std::string>{}(s);
    }
};

std::string label_key(const Labeling& l) {
    std::string key(static_cast<std::size_t>(l.size()), '\0');
    for (int a = 0; a < l.size(); ++a) key[a] = static_cast<char>(l.at(a));
    return key;
}

class StableSearch {
  public:
    StableSearch(const Framework& f, const SearchStrategy& strategy, const Deadline* deadline)
        : f_(f), strategy_(strategy), rng_(strategy.seed), deadline_(deadline) {}

    std::vector<Labeling> run() {
        Labeling all_in(f_.size(), Label::in);
        visit(all_in);
        sort_labelings(found_);
        return std::move(found_);
    }

  private:
    void visit(const Labeling& l) {
        if (!visited_.insert(label_key(l)).second) return;
        if (deadline_ && ++tick_ % 256 == 0 && deadline_->expired()) throw TimeoutError();
        // Stable-specific pruning: undec is never relabeled, so the branch
        // cannot reach a labeling with empty undec.
        if (l.any(Label::undec)) return;

        std::vector<ArgId> illegal_in;
        for (ArgId a = 0; a < f_.size(); ++a)
            if (l.at(a) == Label::in &&
                argument_legality(f_, l, a) == LegalityStatus::illegally_in)
                illegal_in.push_back(a);

        if (illegal_in.empty()) {
            found_.push_back(l);  // leaf: no illegally-in argument, no undec
            return;
        }
        if (strategy_.kind == SearchStrategy::Kind::seeded_random) shuffle(illegal_in);
        for (ArgId x : illegal_in) visit(transition(l, x));
    }

    // Relabel x out, then turn every argument this made illegally out into
    // undec. Only x and the targets of x can change legality.
    Labeling transition(const Labeling& l, ArgId x) const {
        Labeling next = l;
        next.set(x, Label::out);
        auto fix = [&](ArgId y) {
            if (next.at(y) != Label::out) return;
            for (ArgId b : f_.attackers_of(y))
                if (next.at(b) == Label::in) return;
            next.set(y, Label::undec);
        };
        fix(x);
        for (ArgId y : f_.targets_of(x)) fix(y);
        return next;
    }

    void shuffle(std::vector<ArgId>& ids) {
        for (std::size_t i = ids.size(); i > 1; --i) {
            // splitmix64 step; bound bias is irrelevant for traversal order
            std::uint64_t z = (rng_ += 0x9e3779b97f4a7c15ULL);
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
            z ^= z >> 31;
            std::swap(ids[i - 1], ids[z % i]);
        }
    }

    const Framework& f_;
    SearchStrategy strategy_;
    std::uint64_t rng_;
    const Deadline* deadline_;
    std::uint64_t tick_ = 0;
    std::unordered_set<std::string, LabelKeyHash> visited_;
    std::vector<Labeling> found_;
};

}  // namespace

std::vector<Labeling> enumerate_stable(const Framework& f, const SearchStrategy& strategy,
                                       const Deadline* deadline) {
    StableSearch search(f, strategy, deadline);
    return search.run();
}

Labeling labeling_from_extension(const Framework& f, const Extension& e) {
    if (!is_stable_extension(f, e)) throw std::invalid_argument("not a stable extension");
    Labeling l(f.size(), Label::out);
    for (ArgId a : e) l.set(a, Label::in);
    return l;
}

Extension extension_from_labeling(const Labeling& l) { return l.members(Label::in); }

void sort_labelings(std::vector<Labeling>& labelings) {
    std::sort(labelings.begin(), labelings.end(), [](const Labeling& a, const Labeling& b) {
        return a.members(Label::in) < b.members(Label::in);
    });
    labelings.erase(std::unique(labelings.begin(), labelings.end()), labelings.end());
}

}  // namespace af
