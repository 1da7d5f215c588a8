#pragma once

#include <set>
#include <vector>

#include "af/framework.hpp"
#include "af/semantics.hpp"

namespace af::test {

// The five-argument running example: 4 -> 0, 4 -> 3, 0 -> 1, 1 -> 2, 2 -> 0.
// Its only stable extension is {1, 4}.
inline Framework make_fex() {
    return Framework::with_default_names(5, {{4, 0}, {4, 3}, {0, 1}, {1, 2}, {2, 0}});
}

inline std::set<Extension> extension_set(const std::vector<Labeling>& labelings) {
    std::set<Extension> out;
    for (const Labeling& l : labelings) out.insert(l.members(Label::in));
    return out;
}

inline std::set<Extension> extension_set(const std::vector<Extension>& extensions) {
    return {extensions.begin(), extensions.end()};
}

}  // namespace af::test
