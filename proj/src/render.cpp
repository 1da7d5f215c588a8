#include "af/render.hpp"

#include <algorithm>

#include "json.hpp"

namespace af {

std::string render_result(const Framework& f, std::span<const Labeling> labelings,
                          const ResultMeta& meta) {
    auto names_of = [&](const std::vector<ArgId>& ids) {
        std::vector<std::string> names;
        names.reserve(ids.size());
        for (ArgId a : ids) names.push_back(f.name(a));
        std::sort(names.begin(), names.end());
        return names;
    };

    std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> rows;
    rows.reserve(labelings.size());
    for (const Labeling& l : labelings)
        rows.emplace_back(names_of(l.members(Label::in)), names_of(l.members(Label::out)));
    std::sort(rows.begin(), rows.end());

    nlohmann::ordered_json doc;
    doc["framework"] = meta.framework;
    doc["method"] = meta.method;
    doc["elapsed_ms"] = meta.elapsed_ms;
    doc["censored"] = meta.censored;
    doc["seed"] = meta.seed;
    doc["stable_labelings"] = nlohmann::ordered_json::array();
    for (const auto& [in_names, out_names] : rows) {
        nlohmann::ordered_json entry;
        entry["in"] = in_names;
        entry["out"] = out_names;
        doc["stable_labelings"].push_back(std::move(entry));
    }
    return doc.dump(2) + "\n";
}

}  // namespace af
