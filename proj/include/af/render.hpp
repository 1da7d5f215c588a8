#pragma once

#include <cstdint>
#include <span>
#include <string>

#include "af/framework.hpp"
#include "af/semantics.hpp"

namespace af {

struct ResultMeta {
    std::string framework;
    std::string method;
    std::int64_t elapsed_ms = 0;
    bool censored = false;
    std::uint64_t seed = 0;
};

/// Canonical JSON result object. Name arrays are sorted and labelings are
/// ordered lexicographically, so identical inputs render byte-identically.
std::string render_result(const Framework& f, std::span<const Labeling> labelings,
                          const ResultMeta& meta);

}  // namespace af
