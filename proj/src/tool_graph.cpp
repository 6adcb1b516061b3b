#include "toolflow/tool_graph.hpp"

#include <algorithm>
#include <sstream>

namespace toolflow {

ToolGraph ToolGraph::build(std::vector<ToolSpec> tools, const DomainRegistry& domains) {
    ToolGraph g;
    std::sort(tools.begin(), tools.end(),
              [](const ToolSpec& a, const ToolSpec& b) { return a.name < b.name; });
    for (std::size_t i = 0; i + 1 < tools.size(); ++i) {
        if (tools[i].name == tools[i + 1].name) throw DuplicateTool(tools[i].name);
    }
    for (const auto& t : tools) validate_tool(t, domains);

    g.tools_ = std::move(tools);
    for (std::size_t i = 0; i < g.tools_.size(); ++i) {
        const ToolSpec& t = g.tools_[i];
        g.index_.emplace(t.name, i);
        g.resource_nodes_.insert(t.ret.type);
        for (const auto& type : t.arg_types()) {
            g.resource_nodes_.insert(type);
            g.consumers_[type].push_back(i);
        }
    }
    return g;
}

const ToolSpec* ToolGraph::find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    return it == index_.end() ? nullptr : &tools_[it->second];
}

const ToolSpec& ToolGraph::require(std::string_view name) const {
    const ToolSpec* t = find(name);
    if (!t) throw ConfigError("tool not in registry: '" + std::string(name) + "'");
    return *t;
}

bool ToolGraph::edge_tool_to_resource(const ToolSpec& tool, const ResourceType& type) const {
    return tool.ret.type == type;
}

bool ToolGraph::edge_resource_to_tool(const ResourceType& type, const ToolSpec& tool) const {
    auto types = tool.arg_types();
    return types.count(type) > 0;
}

std::vector<const ToolSpec*> ToolGraph::consumers_of(const ResourceType& type) const {
    std::vector<const ToolSpec*> out;
    auto it = consumers_.find(type);
    if (it == consumers_.end()) return out;
    out.reserve(it->second.size());
    for (std::size_t i : it->second) out.push_back(&tools_[i]);
    return out;
}

std::vector<const ToolSpec*> ToolGraph::applicable(
    const std::set<ResourceType>& available,
    const std::vector<std::string>& domain_filter) const {
    std::vector<const ToolSpec*> out;
    for (const auto& tool : tools_) {
        if (!tool.in_any_domain(domain_filter)) continue;
        bool feasible = true;
        for (const auto& type : tool.arg_types()) {
            if (available.count(type) == 0) {
                feasible = false;
                break;
            }
        }
        if (feasible) out.push_back(&tool);
    }
    return out;  // tools_ is name-sorted, so the result is too
}

std::size_t ToolGraph::edge_count() const noexcept {
    std::size_t edges = tools_.size();  // one return edge per tool
    for (const auto& [type, consumers] : consumers_) edges += consumers.size();
    return edges;
}

ToolGraph build_graph(std::vector<ToolSpec> tools) {
    return ToolGraph::build(std::move(tools), builtin_domains());
}

ToolGraph build_graph(std::vector<ToolSpec> tools, const DomainRegistry& domains) {
    return ToolGraph::build(std::move(tools), domains);
}

std::vector<ToolSpec> applicable_tools(const ToolGraph& g,
                                       const std::set<ResourceType>& available,
                                       const std::vector<std::string>& domain_filter) {
    std::vector<ToolSpec> out;
    for (const ToolSpec* t : g.applicable(available, domain_filter)) out.push_back(*t);
    return out;
}

std::string export_dot(const ToolGraph& g) {
    std::ostringstream out;
    out << "digraph tool_graph {\n";
    out << "  rankdir=LR;\n";
    for (const auto& type : g.resource_nodes()) {
        out << "  \"" << type.name() << "\" [shape=ellipse];\n";
    }
    for (const auto& tool : g.tools()) {
        out << "  \"" << tool.name << "\" [shape=box];\n";
    }
    for (const auto& type : g.resource_nodes()) {
        for (const ToolSpec* tool : g.consumers_of(type)) {
            out << "  \"" << type.name() << "\" -> \"" << tool->name << "\";\n";
        }
    }
    for (const auto& tool : g.tools()) {
        out << "  \"" << tool.name << "\" -> \"" << tool.ret.type.name() << "\";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace toolflow
