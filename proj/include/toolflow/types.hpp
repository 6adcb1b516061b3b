#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "toolflow/errors.hpp"

namespace toolflow {

class TypeRegistry;

/// One resource type out of the closed vocabulary. Instances can only be
/// obtained through a TypeRegistry, so holding a ResourceType implies the
/// name was validated.
class ResourceType {
public:
    const std::string& name() const noexcept { return name_; }

    friend bool operator==(const ResourceType& a, const ResourceType& b) {
        return a.name_ == b.name_;
    }
    friend bool operator!=(const ResourceType& a, const ResourceType& b) { return !(a == b); }
    friend bool operator<(const ResourceType& a, const ResourceType& b) {
        return a.name_ < b.name_;
    }

private:
    friend class TypeRegistry;
    explicit ResourceType(std::string name) : name_(std::move(name)) {}
    std::string name_;
};

/// The closed resource-type vocabulary. Ships with the 19 built-in type
/// descriptors; extensible at configuration time only. Immutable once the
/// engine starts searching, so it is safe to share across threads.
class TypeRegistry {
public:
    TypeRegistry();

    static const std::vector<std::string>& builtin_names();

    /// Adds a type name at configuration time. Throws ConfigError on
    /// duplicates or empty names.
    void extend(const std::string& name);

    bool contains(std::string_view name) const;

    /// Case-sensitive exact lookup; throws UnknownResourceType.
    ResourceType parse(std::string_view name) const;

    const std::vector<std::string>& names() const noexcept { return names_; }
    std::size_t size() const noexcept { return names_.size(); }

private:
    std::vector<std::string> names_;
};

/// The shared registry holding only the built-in types.
const TypeRegistry& builtin_types();

/// Convenience lookup against an explicit registry (defaults to built-ins).
ResourceType parse_resource_type(std::string_view name);
ResourceType parse_resource_type(std::string_view name, const TypeRegistry& registry);

/// Names a resource that a subtask (or a search step inside it) will
/// generate. Canonical wire form is "<GEN>-{id}"; compound input forms such
/// as "<GEN>-detr-bbox-0" are accepted and normalized, with the middle
/// segments preserved as an informational hint.
struct GenPlaceholder {
    int id = 0;
    std::string hint;  // producer hint from a compound form, may be empty

    std::string raw() const { return "<GEN>-" + std::to_string(id); }
    std::string qualified() const {
        return hint.empty() ? raw() : "<GEN>-" + hint + "-" + std::to_string(id);
    }

    friend bool operator==(const GenPlaceholder& a, const GenPlaceholder& b) {
        return a.id == b.id;
    }
    friend bool operator!=(const GenPlaceholder& a, const GenPlaceholder& b) { return !(a == b); }
};

/// True when the string is intended to be a placeholder (starts with the
/// "<GEN>" tag), whether or not it is well-formed.
bool looks_like_placeholder(std::string_view value);

/// Parses and normalizes a placeholder string; throws MalformedPlaceholder.
GenPlaceholder parse_placeholder(std::string_view raw);

std::string format_placeholder(int id);

/// A concrete typed value flowing through the engine.
struct Resource {
    std::string id;
    ResourceType rtype;
    std::string value;  // inline payload, or a workspace-relative file path
};

/// Types whose values are carried inline rather than as file paths.
bool is_inline_type(const ResourceType& type);

/// File extension used for synthetic artifacts of a path-valued type.
std::string file_extension_for(const ResourceType& type);

/// A typed argument slot in the decomposition protocol. The value is either
/// a literal (file path or inline text) or a placeholder reference.
struct TypedValue {
    ResourceType type;
    std::string value;
    std::optional<GenPlaceholder> placeholder;

    bool is_placeholder() const noexcept { return placeholder.has_value(); }

    friend bool operator==(const TypedValue& a, const TypedValue& b) {
        if (a.type != b.type) return false;
        if (a.is_placeholder() != b.is_placeholder()) return false;
        if (a.is_placeholder()) return a.placeholder->id == b.placeholder->id;
        return a.value == b.value;
    }
    friend bool operator!=(const TypedValue& a, const TypedValue& b) { return !(a == b); }
};

/// The closed list of task domains. Built-ins cover every domain the stock
/// toolbox and the decomposition protocol use; extensible at configuration
/// time like the type registry.
class DomainRegistry {
public:
    DomainRegistry();

    static const std::vector<std::string>& builtin_names();

    void extend(const std::string& name);
    bool contains(std::string_view name) const;

    /// Throws ConfigError when the domain is not registered.
    void require(std::string_view name, const std::string& context) const;

    const std::vector<std::string>& names() const noexcept { return names_; }

private:
    std::vector<std::string> names_;
};

const DomainRegistry& builtin_domains();

}  // namespace toolflow
