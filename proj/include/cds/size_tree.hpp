#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cds {

/// Hierarchical breakdown of serialized bytes. A node's total is its own
/// bytes plus the totals of its children.
struct size_tree {
    std::string name;
    uint64_t self_bytes = 0;
    std::vector<size_tree> children;

    uint64_t total() const;
    const size_tree* child(const std::string& child_name) const;

    std::string to_json(int indent = -1) const;
    /// Standalone HTML page with the JSON inlined and a zoomable sunburst.
    std::string to_html(const std::string& title) const;
};

}  // namespace cds
