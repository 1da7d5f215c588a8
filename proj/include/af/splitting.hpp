#pragma once

#include <cstdint>
#include <vector>

#include "af/framework.hpp"
#include "af/semantics.hpp"

namespace af {

enum class FreshKind : std::uint8_t { shadow, gadget };

struct FreshArg {
    ArgId local;   // id inside the modified framework
    FreshKind kind;
    ArgId base;    // original-framework argument it derives from
};

/// A sub-framework after splitting modifications. Locals [0, base_count())
/// are surviving base arguments (mapped by base_ids); the rest are fresh
/// shadow/gadget arguments. Fresh ids never collide with base ids.
struct ModifiedFramework {
    Framework framework;
    std::vector<ArgId> base_ids;  // local -> original id
    std::vector<FreshArg> fresh;
    std::vector<ArgId> removed;          // original ids dropped (F2 side only)
    int base_attack_count = 0;           // attacks of the plain restriction
    int added_attack_count = 0;          // insertions before any removal

    int base_count() const { return static_cast<int>(base_ids.size()); }
};

/// F1-side modification: every a1 argument attacked from a2 gains a shadow
/// argument in mutual attack with it, standing in for possible external
/// defeat.
ModifiedFramework assume_attacked(const Framework& f0, const Cut& cut);

/// F2-side modification for one stable extension e1 of assume_attacked's
/// output (local ids). Crossing attacks (b,a) with b in a2 either force a
/// self-attack on b (a accepted) or route b into a self-attacking gadget
/// (a defeated with no internal defeater in e1); crossing attacks from
/// accepted a1 sources remove their a2 targets. Throws std::invalid_argument
/// if e1 is not stable for f1m.
ModifiedFramework remove_attacked(const Framework& f0, const Cut& cut,
                                  const ModifiedFramework& f1m, const Extension& e1);

/// Combined labeling over f0: in = base parts of e1 and e2, fresh arguments
/// stripped; out = rest; undec empty.
Labeling combine(const Framework& f0, const ModifiedFramework& f1m, const Extension& e1,
                 const ModifiedFramework& f2m, const Extension& e2);

struct SplitOptions {
    SearchStrategy strategy;
    bool parallel = false;  // run per-extension branches under OpenMP
    const Deadline* deadline = nullptr;
};

struct SplitResult {
    Cut cut;
    int f1_labelings = 0;
    int f2_runs = 0;
    std::vector<Labeling> combined;  // canonical order
    int discarded = 0;               // combined candidates failing validation
};

/// Full pipeline: modify F1, enumerate, modify F2 per extension, enumerate,
/// combine, validate. The combined set equals enumerate_stable(f0) exactly.
SplitResult split_enumerate_stable(const Framework& f0, const Cut& cut,
                                   const SplitOptions& options = {});

}  // namespace af
