#include "toolflow/tool_spec.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace toolflow {

std::set<ResourceType> ToolSpec::arg_types() const {
    std::set<ResourceType> out;
    for (const auto& a : args) out.insert(a.type);
    return out;
}

bool ToolSpec::in_any_domain(const std::vector<std::string>& filter) const {
    if (filter.empty()) return true;
    for (const auto& d : domains) {
        if (std::find(filter.begin(), filter.end(), d) != filter.end()) return true;
    }
    return false;
}

void validate_tool(const ToolSpec& tool, const DomainRegistry& domains) {
    if (tool.name.empty()) throw ConfigError("tool name must not be empty");
    if (tool.args.empty()) {
        throw ConfigError("tool '" + tool.name + "' declares no arguments");
    }
    if (tool.ret.name.empty()) {
        throw ConfigError("tool '" + tool.name + "' return slot has no name");
    }
    if (tool.domains.empty()) {
        throw ConfigError("tool '" + tool.name + "' declares no task domain");
    }
    for (const auto& d : tool.domains) {
        domains.require(d, "tool '" + tool.name + "'");
    }
}

namespace {

void reject_unknown_fields(const nlohmann::json& doc,
                           std::initializer_list<const char*> allowed,
                           const std::string& context) {
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        bool ok = std::any_of(allowed.begin(), allowed.end(),
                              [&](const char* k) { return it.key() == k; });
        if (!ok) throw ConfigError("unknown field '" + it.key() + "' in " + context);
    }
}

ToolArg arg_from_json(const nlohmann::json& doc, const TypeRegistry& types,
                      const std::string& context) {
    if (!doc.is_object()) throw ConfigError("argument entry must be an object in " + context);
    reject_unknown_fields(doc, {"name", "type"}, context);
    if (!doc.contains("name") || !doc.contains("type")) {
        throw ConfigError("argument entry needs 'name' and 'type' in " + context);
    }
    return ToolArg{doc.at("name").get<std::string>(),
                   types.parse(doc.at("type").get<std::string>())};
}

}  // namespace

ToolSpec tool_from_json(const nlohmann::json& doc, const TypeRegistry& types,
                        const DomainRegistry& domains) {
    if (!doc.is_object()) throw ConfigError("tool entry must be a JSON object");
    const std::string name = doc.value("name", std::string{});
    const std::string ctx = "tool '" + name + "'";
    reject_unknown_fields(doc, {"name", "description", "domains", "args", "returns"}, ctx);
    if (!doc.contains("name") || !doc.contains("args") || !doc.contains("returns")) {
        throw ConfigError("tool entry needs 'name', 'args' and 'returns'");
    }

    ToolSpec out{name,
                 doc.value("description", std::string{}),
                 {},
                 {},
                 arg_from_json(doc.at("returns"), types, ctx + " returns")};
    if (doc.contains("domains")) {
        for (const auto& d : doc.at("domains")) out.domains.push_back(d.get<std::string>());
    }
    for (const auto& a : doc.at("args")) {
        out.args.push_back(arg_from_json(a, types, ctx + " args"));
    }
    validate_tool(out, domains);
    return out;
}

nlohmann::ordered_json tool_to_json(const ToolSpec& tool) {
    nlohmann::ordered_json doc;
    doc["name"] = tool.name;
    doc["description"] = tool.desc;
    doc["domains"] = tool.domains;
    doc["args"] = nlohmann::ordered_json::array();
    for (const auto& a : tool.args) {
        doc["args"].push_back({{"name", a.name}, {"type", a.type.name()}});
    }
    doc["returns"] = {{"name", tool.ret.name}, {"type", tool.ret.type.name()}};
    return doc;
}

std::vector<ToolSpec> parse_tool_registry(const std::string& json_text,
                                          const TypeRegistry& types,
                                          const DomainRegistry& domains) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("tool registry is not valid JSON: ") + e.what());
    }
    if (!doc.is_array()) throw ConfigError("tool registry must be a JSON array");
    std::vector<ToolSpec> out;
    out.reserve(doc.size());
    for (const auto& entry : doc) out.push_back(tool_from_json(entry, types, domains));
    return out;
}

std::vector<ToolSpec> load_tool_registry_file(const std::string& path,
                                              const TypeRegistry& types,
                                              const DomainRegistry& domains) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open tool registry file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_tool_registry(buf.str(), types, domains);
}

}  // namespace toolflow
