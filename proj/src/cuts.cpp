#include "af/cuts.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>

namespace af {

namespace {

// Preflow-push global min-cut machinery after Hao & Orlin: one designated
// source, n-1 phases, each ending with the sink merged into the source set.
// Nodes outside the awake set live in a stack of dormant sets; the source
// set is dormant set 0. Invariants relied on throughout:
//   - residual arcs between awake nodes v,w satisfy d(v) <= d(w) + 1
//   - no residual arc leaves a dormant node toward an awake one, so at the
//     end of a phase the dormant side is a saturated cut of value excess(t).
class HaoOrlin {
  public:
    HaoOrlin(int n, const std::vector<Attack>& attacks, bool reversed) : n_(n), adj_(n) {
        for (const Attack& at : attacks) {
            if (at.source == at.target) continue;  // self-attacks cross no cut
            int u = reversed ? at.target : at.source;
            int v = reversed ? at.source : at.target;
            adj_[u].push_back({v, 1, static_cast<int>(adj_[v].size())});
            adj_[v].push_back({u, 0, static_cast<int>(adj_[u].size()) - 1});
        }
    }

    struct Result {
        long long value = 0;
        std::vector<char> source_side;  // 1 for nodes on the minimizing side
    };

    Result run(int s) {
        d_.assign(n_, 0);
        d_[s] = n_;
        dormant_.assign(n_, -1);
        dormant_[s] = 0;
        top_dormant_ = 0;
        awake_count_ = n_ - 1;
        excess_.assign(n_, 0);
        cur_.assign(n_, 0);
        cnt_awake_.assign(2 * n_ + 2, 0);
        buckets_.assign(2 * n_ + 2, {});
        relabel_budget_ = 8LL * n_ * n_ + 64;
        saturate_out(s);

        Result best;
        best.value = std::numeric_limits<long long>::max();
        for (int phase = 0; phase < n_ - 1; ++phase) {
            pick_sink();
            start_phase();
            for (int v = pop_active(); v != -1; v = pop_active()) discharge(v);

            if (excess_[sink_] < best.value) {
                best.value = excess_[sink_];
                best.source_side.assign(n_, 0);
                for (int v = 0; v < n_; ++v)
                    if (dormant_[v] != -1) best.source_side[v] = 1;
            }
            if (phase == n_ - 2) break;

            // Sink joins the source set; everything it can still reach gets
            // pushed outward so no residual arc leaves the dormant side.
            dormant_[sink_] = 0;
            --awake_count_;
            saturate_out(sink_);
            if (awake_count_ == 0) wake_top_set();
        }
        return best;
    }

  private:
    struct Arc {
        int to;
        int res;
        int rev;
    };

    void saturate_out(int u) {
        for (Arc& arc : adj_[u]) {
            if (arc.res == 0) continue;
            excess_[arc.to] += arc.res;
            adj_[arc.to][arc.rev].res += arc.res;
            excess_[u] -= arc.res;
            arc.res = 0;
        }
    }

    void pick_sink() {
        sink_ = -1;
        for (int v = 0; v < n_; ++v) {
            if (dormant_[v] != -1) continue;
            if (sink_ == -1 || d_[v] < d_[sink_]) sink_ = v;
        }
    }

    void start_phase() {
        std::fill(cur_.begin(), cur_.end(), 0);
        std::fill(cnt_awake_.begin(), cnt_awake_.end(), 0);
        for (auto& bucket : buckets_) bucket.clear();
        highest_ = 0;
        for (int v = 0; v < n_; ++v) {
            if (dormant_[v] != -1) continue;
            ++cnt_awake_[d_[v]];
            if (v != sink_ && excess_[v] > 0) push_bucket(v);
        }
    }

    void push_bucket(int v) {
        buckets_[d_[v]].push_back(v);
        highest_ = std::max(highest_, d_[v]);
    }

    int pop_active() {
        while (highest_ >= 0) {
            auto& bucket = buckets_[highest_];
            while (!bucket.empty()) {
                int v = bucket.back();
                bucket.pop_back();
                if (dormant_[v] == -1 && v != sink_ && excess_[v] > 0 && d_[v] == highest_)
                    return v;  // stale entries are skipped
            }
            --highest_;
        }
        return -1;
    }

    void discharge(int v) {
        while (excess_[v] > 0) {
            if (cur_[v] == adj_[v].size()) {
                if (!relabel(v)) return;  // frozen
                cur_[v] = 0;
                continue;
            }
            Arc& arc = adj_[v][cur_[v]];
            if (arc.res > 0 && dormant_[arc.to] == -1 && d_[v] == d_[arc.to] + 1) {
                long long amount = std::min<long long>(excess_[v], arc.res);
                arc.res -= static_cast<int>(amount);
                adj_[arc.to][arc.rev].res += static_cast<int>(amount);
                excess_[v] -= amount;
                excess_[arc.to] += amount;
                if (arc.to != sink_ && excess_[arc.to] == amount) push_bucket(arc.to);
            } else {
                ++cur_[v];
            }
        }
    }

    // Returns false if v (or its whole level group) went dormant.
    bool relabel(int v) {
        if (--relabel_budget_ < 0) throw std::logic_error("hao-orlin: relabel bound exceeded");
        if (cnt_awake_[d_[v]] == 1) {
            // Relabeling the only node at this level would leave a gap: all
            // awake nodes at or above it go dormant as one set.
            ++top_dormant_;
            for (int w = 0; w < n_; ++w) {
                if (dormant_[w] != -1 || d_[w] < d_[v]) continue;
                dormant_[w] = top_dormant_;
                --cnt_awake_[d_[w]];
                --awake_count_;
            }
            return false;
        }
        int min_d = std::numeric_limits<int>::max();
        for (const Arc& arc : adj_[v])
            if (arc.res > 0 && dormant_[arc.to] == -1) min_d = std::min(min_d, d_[arc.to]);
        if (min_d == std::numeric_limits<int>::max()) {
            // No residual arc into the awake set left.
            ++top_dormant_;
            dormant_[v] = top_dormant_;
            --cnt_awake_[d_[v]];
            --awake_count_;
            return false;
        }
        --cnt_awake_[d_[v]];
        d_[v] = min_d + 1;
        if (d_[v] >= 2 * n_ + 1) throw std::logic_error("hao-orlin: distance label out of range");
        ++cnt_awake_[d_[v]];
        push_bucket(v);
        return true;
    }

    void wake_top_set() {
        for (int v = 0; v < n_; ++v) {
            if (dormant_[v] != top_dormant_) continue;
            dormant_[v] = -1;
            ++awake_count_;
        }
        --top_dormant_;
    }

    int n_;
    std::vector<std::vector<Arc>> adj_;
    std::vector<long long> excess_;
    std::vector<int> d_;
    std::vector<int> dormant_;  // -1 awake, 0 source set, >0 dormant sets
    std::vector<std::size_t> cur_;
    std::vector<int> cnt_awake_;
    std::vector<std::vector<int>> buckets_;
    int highest_ = 0;
    int top_dormant_ = 0;
    int awake_count_ = 0;
    int sink_ = -1;
    long long relabel_budget_ = 0;
};

Cut cut_from_a2(const Framework& f, const std::vector<char>& a2_flags) {
    std::vector<ArgId> a1;
    for (ArgId a = 0; a < f.size(); ++a)
        if (!a2_flags[a]) a1.push_back(a);
    return cross_attacks(f, a1);
}

}  // namespace

Cut hao_orlin_min_cut(const Framework& f) {
    if (f.size() < 2) throw std::invalid_argument("hao_orlin_min_cut: needs at least 2 arguments");

    // Cuts with argument 0 on the a2 side come from the forward run; the rest
    // from the run on the reversed graph.
    HaoOrlin forward(f.size(), f.attacks(), /*reversed=*/false);
    auto fwd = forward.run(0);
    HaoOrlin backward(f.size(), f.attacks(), /*reversed=*/true);
    auto bwd = backward.run(0);

    std::vector<char> a2_flags(static_cast<std::size_t>(f.size()), 0);
    long long value;
    if (fwd.value <= bwd.value) {
        value = fwd.value;
        a2_flags = fwd.source_side;
    } else {
        value = bwd.value;
        for (ArgId a = 0; a < f.size(); ++a) a2_flags[a] = !bwd.source_side[a];
    }
    Cut cut = cut_from_a2(f, a2_flags);
    if (cut.k != value) throw std::logic_error("hao-orlin: flow value disagrees with cut");
    return cut;
}

Cut brute_force_min_cut(const Framework& f) {
    const int n = f.size();
    if (n < 2) throw std::invalid_argument("brute_force_min_cut: needs at least 2 arguments");
    if (n > 16) throw std::invalid_argument("brute_force_min_cut: framework exceeds 16 arguments");

    std::vector<std::uint32_t> out_mask(static_cast<std::size_t>(n), 0);
    for (const Attack& at : f.attacks())
        if (at.source != at.target) out_mask[at.source] |= std::uint32_t{1} << at.target;

    auto ids_of = [n](std::uint32_t mask) {
        std::vector<ArgId> ids;
        for (int a = 0; a < n; ++a)
            if ((mask >> a) & 1) ids.push_back(a);
        return ids;
    };

    int best = std::numeric_limits<int>::max();
    std::uint32_t best_a2 = 0;
    const std::uint32_t all = (std::uint32_t{1} << n) - 1;
    for (std::uint32_t a2 = 1; a2 < all; ++a2) {
        int count = 0;
        for (int a = 0; a < n; ++a)
            if ((a2 >> a) & 1) count += std::popcount(out_mask[a] & ~a2 & all);
        if (count > best) continue;
        if (count < best || ids_of(a2) < ids_of(best_a2)) {
            best = count;
            best_a2 = a2;
        }
    }
    std::vector<char> a2_flags(static_cast<std::size_t>(n), 0);
    for (int a = 0; a < n; ++a) a2_flags[a] = (best_a2 >> a) & 1;
    return cut_from_a2(f, a2_flags);
}

Cut balanced_cut(const Framework& f, std::optional<ArgId> start, BalancedCutTrace* trace) {
    const int n = f.size();
    if (n < 2) throw std::invalid_argument("balanced_cut: needs at least 2 arguments");
    ArgId first = start.value_or(0);
    if (first < 0 || first >= n) throw std::invalid_argument("balanced_cut: start out of range");

    std::vector<char> visited(static_cast<std::size_t>(n), 0);
    std::vector<ArgId> a1;
    std::vector<ArgId> round{first};
    std::vector<ArgId> next;
    visited[first] = 1;
    a1.push_back(first);
    ArgId refill_cursor = 0;
    std::size_t inspections = 0;
    auto growing = [&] { return 2 * static_cast<int>(a1.size()) < n; };

    while (growing()) {
        next.clear();
        for (ArgId a : round) {
            for (ArgId attacker : f.attackers_of(a)) {
                ++inspections;
                if (!growing()) break;
                if (visited[attacker]) continue;
                visited[attacker] = 1;
                a1.push_back(attacker);
                next.push_back(attacker);
            }
            if (!growing()) break;
        }
        if (next.empty() && growing()) {
            while (visited[refill_cursor]) ++refill_cursor;
            visited[refill_cursor] = 1;
            a1.push_back(refill_cursor);
            next.push_back(refill_cursor);
        }
        std::swap(round, next);
    }
    if (trace) trace->attack_inspections = inspections;
    return cross_attacks(f, a1);
}

Cut compute_cut(const Framework& f, const CutRequest& request) {
    if (request.algo == CutAlgo::hao_orlin) return hao_orlin_min_cut(f);
    Cut literal = balanced_cut(f, request.start);
    if (request.orientation == Orientation::literal) return literal;
    Cut swapped = cross_attacks(f, literal.a2);
    return swapped.k < literal.k ? swapped : literal;
}

}  // namespace af
