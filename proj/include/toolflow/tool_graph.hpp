#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "toolflow/tool_spec.hpp"

namespace toolflow {

/// Bipartite graph over resource-type nodes and tool nodes.
///
/// A tool node points at the resource node matching its return type, and a
/// resource node points at every tool node that lists it among its argument
/// types. No tool-tool or resource-resource edges exist. The graph is
/// immutable after build and safe for concurrent read-only queries.
class ToolGraph {
public:
    /// Validates and indexes the tools (sorted by name for deterministic
    /// iteration). Throws DuplicateTool or ConfigError.
    static ToolGraph build(std::vector<ToolSpec> tools, const DomainRegistry& domains);

    const std::vector<ToolSpec>& tools() const noexcept { return tools_; }

    /// All resource types referenced by at least one tool (arg or return).
    const std::set<ResourceType>& resource_nodes() const noexcept { return resource_nodes_; }

    const ToolSpec* find(std::string_view name) const;
    const ToolSpec& require(std::string_view name) const;

    /// Edge from a tool node to a resource node: true iff the resource type
    /// equals the tool's return type.
    bool edge_tool_to_resource(const ToolSpec& tool, const ResourceType& type) const;

    /// Edge from a resource node to a tool node: true iff the type appears
    /// among the tool's argument types.
    bool edge_resource_to_tool(const ResourceType& type, const ToolSpec& tool) const;

    /// Tools reachable from a resource node (consumers of the type).
    std::vector<const ToolSpec*> consumers_of(const ResourceType& type) const;

    /// Tools whose every argument type is available and whose domain list
    /// intersects the filter (empty filter admits all). Sorted by name.
    std::vector<const ToolSpec*> applicable(const std::set<ResourceType>& available,
                                            const std::vector<std::string>& domain_filter) const;

    std::size_t resource_node_count() const noexcept { return resource_nodes_.size(); }
    std::size_t tool_node_count() const noexcept { return tools_.size(); }
    std::size_t node_count() const noexcept { return resource_nodes_.size() + tools_.size(); }

    /// Total directed edges: one per tool return plus one per distinct
    /// (arg type, tool) pair.
    std::size_t edge_count() const noexcept;

private:
    ToolGraph() = default;

    std::vector<ToolSpec> tools_;  // sorted by name
    std::map<std::string, std::size_t> index_;
    std::set<ResourceType> resource_nodes_;
    std::map<ResourceType, std::vector<std::size_t>> consumers_;  // type -> tool indices
};

/// Builds a graph over the given tools against the built-in domain list.
ToolGraph build_graph(std::vector<ToolSpec> tools);
ToolGraph build_graph(std::vector<ToolSpec> tools, const DomainRegistry& domains);

/// Value-returning convenience over ToolGraph::applicable.
std::vector<ToolSpec> applicable_tools(const ToolGraph& g,
                                       const std::set<ResourceType>& available,
                                       const std::vector<std::string>& domain_filter);

/// Deterministic Graphviz rendering: resource nodes as ellipses, tool nodes
/// as boxes, edges per the bipartite adjacency.
std::string export_dot(const ToolGraph& g);

}  // namespace toolflow
