#pragma once

#include <cstddef>
#include <optional>

#include "af/framework.hpp"

namespace af {

enum class CutAlgo { hao_orlin, balanced };

/// Side assignment for balanced cuts: `literal` keeps the grown set as a1,
/// `minimize_k` keeps whichever assignment yields the smaller k.
enum class Orientation { literal, minimize_k };

struct CutRequest {
    CutAlgo algo = CutAlgo::hao_orlin;
    std::optional<ArgId> start;  // balanced only
    Orientation orientation = Orientation::literal;
};

/// Global directed minimum cut: k = min over non-empty proper S of the number
/// of attacks leaving S; the minimizing S becomes a2. Self-attacks never
/// cross a cut and are ignored. Deterministic for a fixed framework.
Cut hao_orlin_min_cut(const Framework& f);

/// Exhaustive oracle, guarded at 16 arguments. Ties pick the smallest a2 in
/// sorted-set order.
Cut brute_force_min_cut(const Framework& f);

struct BalancedCutTrace {
    std::size_t attack_inspections = 0;
};

/// Grows a1 from `start` (default: lowest id) along incoming attacks in
/// rounds, refilling with the lowest unvisited id whenever a round adds
/// nothing, until |a1| = ceil(|A|/2).
Cut balanced_cut(const Framework& f, std::optional<ArgId> start = std::nullopt,
                 BalancedCutTrace* trace = nullptr);

Cut compute_cut(const Framework& f, const CutRequest& request);

}  // namespace af
