#pragma once

#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "toolflow/types.hpp"

namespace toolflow {

struct ToolArg {
    std::string name;
    ResourceType type;
};

/// Static description of one tool: free-text purpose, the task domains it
/// belongs to, an ordered non-empty argument list, and exactly one return.
struct ToolSpec {
    std::string name;
    std::string desc;
    std::vector<std::string> domains;
    std::vector<ToolArg> args;
    ToolArg ret;

    /// Distinct argument types (applicability is a type-presence check, so
    /// duplicate arg types collapse here).
    std::set<ResourceType> arg_types() const;

    /// Empty filter means every domain is admissible.
    bool in_any_domain(const std::vector<std::string>& filter) const;
};

/// Checks the structural invariants of a single tool. Throws ConfigError or
/// UnknownResourceType-style errors with a message naming the tool.
void validate_tool(const ToolSpec& tool, const DomainRegistry& domains);

ToolSpec tool_from_json(const nlohmann::json& doc, const TypeRegistry& types,
                        const DomainRegistry& domains);
nlohmann::ordered_json tool_to_json(const ToolSpec& tool);

/// Parses a tool-registry document: an array of
/// {name, description, domains, args:[{name,type}], returns:{name,type}}.
std::vector<ToolSpec> parse_tool_registry(const std::string& json_text,
                                          const TypeRegistry& types,
                                          const DomainRegistry& domains);

std::vector<ToolSpec> load_tool_registry_file(const std::string& path,
                                              const TypeRegistry& types,
                                              const DomainRegistry& domains);

}  // namespace toolflow
