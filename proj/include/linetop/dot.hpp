#pragma once

#include <sstream>

#include "atlas.hpp"

namespace linetop {

/// Deterministic DOT rendering; removed points and chart domains are
/// tagged through node attributes.
inline std::string export_dot(const Space& s, const Decomposition* decomposition = nullptr,
                              const Atlas* atlas = nullptr) {
    std::ostringstream out;
    out << "graph space {\n";
    for (int v = 0; v < s.point_count(); ++v) {
        out << "  " << v;
        std::vector<std::string> tags;
        if (decomposition && decomposition->removed.contains(v)) tags.push_back("removed");
        auto collect = [&](const std::vector<OrderChart>& charts) {
            for (std::size_t i = 0; i < charts.size(); ++i)
                if (charts[i].contains(v)) tags.push_back("chart" + std::to_string(i));
        };
        if (decomposition) collect(decomposition->components);
        if (atlas) {
            collect(atlas->charts);
            if (atlas->uncovered.contains(v)) tags.push_back("uncovered");
        }
        if (!tags.empty()) {
            out << " [group=\"";
            for (std::size_t i = 0; i < tags.size(); ++i) {
                if (i) out << ",";
                out << tags[i];
            }
            out << "\"]";
        }
        out << ";\n";
    }
    for (auto [u, v] : s.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace linetop
