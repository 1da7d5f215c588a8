#include "af/scc.hpp"

#include <algorithm>

namespace af {

// Tarjan with an explicit stack so deep attack chains cannot overflow the
// call stack.
std::vector<std::vector<ArgId>> scc_decomposition(const Framework& f) {
    const int n = f.size();
    std::vector<int> index(n, -1);
    std::vector<int> lowlink(n, 0);
    std::vector<char> on_stack(n, 0);
    std::vector<ArgId> stack;
    std::vector<std::vector<ArgId>> components;
    int next_index = 0;

    struct Frame {
        ArgId node;
        std::size_t edge = 0;
    };
    std::vector<Frame> work;

    for (ArgId root = 0; root < n; ++root) {
        if (index[root] != -1) continue;
        work.push_back({root});
        while (!work.empty()) {
            Frame& frame = work.back();
            ArgId v = frame.node;
            if (frame.edge == 0) {
                index[v] = lowlink[v] = next_index++;
                stack.push_back(v);
                on_stack[v] = 1;
            }
            auto targets = f.targets_of(v);
            bool descended = false;
            while (frame.edge < targets.size()) {
                ArgId w = targets[frame.edge++];
                if (index[w] == -1) {
                    work.push_back({w});
                    descended = true;
                    break;
                }
                if (on_stack[w]) lowlink[v] = std::min(lowlink[v], index[w]);
            }
            if (descended) continue;
            if (lowlink[v] == index[v]) {
                std::vector<ArgId> component;
                while (true) {
                    ArgId w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    component.push_back(w);
                    if (w == v) break;
                }
                std::sort(component.begin(), component.end());
                components.push_back(std::move(component));
            }
            work.pop_back();
            if (!work.empty()) {
                ArgId parent = work.back().node;
                lowlink[parent] = std::min(lowlink[parent], lowlink[v]);
            }
        }
    }
    std::sort(components.begin(), components.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return components;
}

}  // namespace af
