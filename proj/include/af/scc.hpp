#pragma once

#include <vector>

#include "af/framework.hpp"

namespace af {

/// Strongly connected components of the attack graph. Components are sorted
/// internally and ordered by their smallest member.
std::vector<std::vector<ArgId>> scc_decomposition(const Framework& f);

}  // namespace af
