#include "af/splitting.hpp"

#include <algorithm>
#include <exception>
#include <set>
#include <stdexcept>

namespace af {

namespace {

std::vector<ArgId> local_index(const Framework& f0, const std::vector<ArgId>& members) {
    std::vector<ArgId> local(static_cast<std::size_t>(f0.size()), -1);
    for (std::size_t i = 0; i < members.size(); ++i) local[members[i]] = static_cast<ArgId>(i);
    return local;
}

}  // namespace

ModifiedFramework assume_attacked(const Framework& f0, const Cut& cut) {
    std::vector<ArgId> local = local_index(f0, cut.a1);

    std::vector<std::string> names;
    names.reserve(cut.a1.size());
    for (ArgId a : cut.a1) names.push_back(f0.name(a));

    std::vector<Attack> attacks;
    for (const Attack& at : f0.attacks())
        if (local[at.source] >= 0 && local[at.target] >= 0)
            attacks.push_back({local[at.source], local[at.target]});
    const int base_attack_count = static_cast<int>(attacks.size());

    std::vector<FreshArg> fresh;
    int added = 0;
    std::vector<ArgId> shadow_of(static_cast<std::size_t>(f0.size()), -1);
    for (const Attack& at : cut.r3) {
        if (local[at.target] < 0) continue;  // points a1 -> a2
        ArgId a = at.target;
        if (shadow_of[a] >= 0) continue;  // one shadow per argument
        ArgId shadow = static_cast<ArgId>(names.size());
        shadow_of[a] = shadow;
        names.push_back("." + f0.name(a));
        fresh.push_back({shadow, FreshKind::shadow, a});
        attacks.push_back({local[a], shadow});
        attacks.push_back({shadow, local[a]});
        added += 2;
    }
    return ModifiedFramework{Framework(std::move(names), std::move(attacks)), cut.a1,
                             std::move(fresh), {}, base_attack_count, added};
}

ModifiedFramework remove_attacked(const Framework& f0, const Cut& cut,
                                  const ModifiedFramework& f1m, const Extension& e1) {
    if (!is_stable_extension(f1m.framework, e1))
        throw std::invalid_argument("remove_attacked: e1 is not stable for the modified F1");

    std::vector<char> in_a1(static_cast<std::size_t>(f0.size()), 0);
    for (ArgId a : cut.a1) in_a1[a] = 1;
    std::vector<char> accepted(static_cast<std::size_t>(f0.size()), 0);  // E = e1 restricted to A1
    for (ArgId local : e1)
        if (local < f1m.base_count()) accepted[f1m.base_ids[local]] = 1;

    std::vector<ArgId> local = local_index(f0, cut.a2);
    std::vector<std::string> names;
    names.reserve(cut.a2.size());
    for (ArgId a : cut.a2) names.push_back(f0.name(a));

    std::set<Attack> attacks;
    for (const Attack& at : f0.attacks())
        if (local[at.source] >= 0 && local[at.target] >= 0)
            attacks.insert({local[at.source], local[at.target]});
    const int base_attack_count = static_cast<int>(attacks.size());

    // Pass 1: gadgets and self-loops for crossing attacks a2 -> a1.
    std::vector<FreshArg> fresh;
    int added = 0;
    std::vector<ArgId> gadget_of(static_cast<std::size_t>(f0.size()), -1);
    for (const Attack& at : cut.r3) {
        if (local[at.source] < 0) continue;  // points a1 -> a2
        ArgId b = at.source;
        ArgId a = at.target;
        if (accepted[a]) {
            // b attacks an accepted argument, so b must end up defeated.
            if (attacks.insert({local[b], local[b]}).second) ++added;
            continue;
        }
        bool defeated_inside = false;
        for (ArgId c : f0.attackers_of(a))
            if (in_a1[c] && accepted[c]) {
                defeated_inside = true;
                break;
            }
        if (defeated_inside) continue;
        // a is out with no internal defeater: some external attacker of a
        // must join the F2 extension. The gadget collects them.
        if (gadget_of[a] < 0) {
            ArgId gadget = static_cast<ArgId>(names.size());
            gadget_of[a] = gadget;
            names.push_back(":" + f0.name(a));
            fresh.push_back({gadget, FreshKind::gadget, a});
            if (attacks.insert({gadget, gadget}).second) ++added;
        }
        if (attacks.insert({local[b], gadget_of[a]}).second) ++added;
    }

    // Pass 2: accepted a1 sources defeat their a2 targets outright.
    std::vector<char> removed_local(names.size(), 0);
    std::vector<ArgId> removed;
    for (const Attack& at : cut.r3) {
        if (local[at.target] < 0) continue;  // points a2 -> a1
        if (!accepted[at.source]) continue;
        ArgId target_local = local[at.target];
        if (!removed_local[target_local]) {
            removed_local[target_local] = 1;
            removed.push_back(at.target);
        }
    }
    std::sort(removed.begin(), removed.end());

    // Materialize with removals applied and local ids re-densified.
    std::vector<ArgId> remap(names.size(), -1);
    std::vector<std::string> final_names;
    std::vector<ArgId> final_base;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (removed_local[i]) continue;
        remap[i] = static_cast<ArgId>(final_names.size());
        final_names.push_back(names[i]);
        if (i < cut.a2.size()) final_base.push_back(cut.a2[i]);
    }
    for (FreshArg& f : fresh) f.local = remap[f.local];

    std::vector<Attack> final_attacks;
    for (const Attack& at : attacks)
        if (remap[at.source] >= 0 && remap[at.target] >= 0)
            final_attacks.push_back({remap[at.source], remap[at.target]});

    return ModifiedFramework{Framework(std::move(final_names), std::move(final_attacks)),
                             std::move(final_base),
                             std::move(fresh),
                             std::move(removed),
                             base_attack_count,
                             added};
}

Labeling combine(const Framework& f0, const ModifiedFramework& f1m, const Extension& e1,
                 const ModifiedFramework& f2m, const Extension& e2) {
    Labeling l(f0.size(), Label::out);
    for (ArgId local : e1)
        if (local < f1m.base_count()) l.set(f1m.base_ids[local], Label::in);
    for (ArgId local : e2)
        if (local < f2m.base_count()) l.set(f2m.base_ids[local], Label::in);
    return l;
}

SplitResult split_enumerate_stable(const Framework& f0, const Cut& cut,
                                   const SplitOptions& options) {
    SplitResult result;
    result.cut = cut;

    ModifiedFramework f1m = assume_attacked(f0, cut);
    std::vector<Labeling> f1_labelings =
        enumerate_stable(f1m.framework, options.strategy, options.deadline);
    result.f1_labelings = static_cast<int>(f1_labelings.size());
    result.f2_runs = result.f1_labelings;

    const int branches = result.f1_labelings;
    std::vector<std::vector<Labeling>> branch_found(branches);
    std::vector<int> branch_discarded(branches, 0);
    std::vector<std::exception_ptr> branch_error(branches);

    auto run_branch = [&](int i) {
        try {
            Extension e1 = extension_from_labeling(f1_labelings[i]);
            ModifiedFramework f2m = remove_attacked(f0, cut, f1m, e1);
            std::vector<Labeling> f2_labelings =
                enumerate_stable(f2m.framework, options.strategy, options.deadline);
            for (const Labeling& l2 : f2_labelings) {
                Labeling candidate = combine(f0, f1m, e1, f2m, extension_from_labeling(l2));
                if (is_stable_labeling(f0, candidate))
                    branch_found[i].push_back(std::move(candidate));
                else
                    ++branch_discarded[i];
            }
        } catch (...) {
            branch_error[i] = std::current_exception();
        }
    };

    if (options.parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (int i = 0; i < branches; ++i) run_branch(i);
    } else {
        for (int i = 0; i < branches; ++i) run_branch(i);
    }

    for (int i = 0; i < branches; ++i)
        if (branch_error[i]) std::rethrow_exception(branch_error[i]);
    for (int i = 0; i < branches; ++i) {
        result.discarded += branch_discarded[i];
        std::move(branch_found[i].begin(), branch_found[i].end(),
                  std::back_inserter(result.combined));
    }
    sort_labelings(result.combined);
    return result;
}

}  // namespace af
