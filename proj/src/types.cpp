#include "toolflow/types.hpp"

#include <algorithm>
#include <cctype>

namespace toolflow {

namespace {

constexpr std::string_view kGenPrefix = "<GEN>-";

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(),
                       [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

const std::vector<std::string>& TypeRegistry::builtin_names() {
    static const std::vector<std::string> kNames = {
        "text",   "tags",  "html",  "image",    "video",  "audio", "segmentation",
        "edge",   "line",  "hed",   "canny",    "scribble", "pose", "depth",
        "normal", "mask",  "point", "bbox",     "category",
    };
    return kNames;
}

TypeRegistry::TypeRegistry() : names_(builtin_names()) {}

void TypeRegistry::extend(const std::string& name) {
    if (name.empty()) throw ConfigError("resource type name must not be empty");
    if (contains(name)) throw ConfigError("resource type already registered: '" + name + "'");
    names_.push_back(name);
}

bool TypeRegistry::contains(std::string_view name) const {
    return std::find(names_.begin(), names_.end(), name) != names_.end();
}

ResourceType TypeRegistry::parse(std::string_view name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) throw UnknownResourceType(std::string(name));
    return ResourceType(*it);
}

const TypeRegistry& builtin_types() {
    static const TypeRegistry kRegistry;
    return kRegistry;
}

ResourceType parse_resource_type(std::string_view name) {
    return builtin_types().parse(name);
}

ResourceType parse_resource_type(std::string_view name, const TypeRegistry& registry) {
    return registry.parse(name);
}

bool looks_like_placeholder(std::string_view value) {
    return value.rfind("<GEN>", 0) == 0;
}

GenPlaceholder parse_placeholder(std::string_view raw) {
    if (raw.rfind(kGenPrefix, 0) != 0) throw MalformedPlaceholder(std::string(raw));
    std::string_view rest = raw.substr(kGenPrefix.size());
    if (rest.empty()) throw MalformedPlaceholder(std::string(raw));

    // Canonical form: digits only. Compound form: dash-separated hint
    // segments followed by a trailing decimal id.
    auto last_dash = rest.rfind('-');
    std::string_view id_part = last_dash == std::string_view::npos
                                   ? rest
                                   : rest.substr(last_dash + 1);
    std::string_view hint_part = last_dash == std::string_view::npos
                                     ? std::string_view{}
                                     : rest.substr(0, last_dash);
    if (!all_digits(id_part)) throw MalformedPlaceholder(std::string(raw));
    if (last_dash != std::string_view::npos) {
        if (hint_part.empty()) throw MalformedPlaceholder(std::string(raw));
        // Reject empty segments such as "<GEN>--1" or "<GEN>-a--1".
        std::string_view scan = hint_part;
        while (!scan.empty()) {
            auto dash = scan.find('-');
            std::string_view seg = dash == std::string_view::npos ? scan : scan.substr(0, dash);
            if (seg.empty()) throw MalformedPlaceholder(std::string(raw));
            if (dash == std::string_view::npos) break;
            scan = scan.substr(dash + 1);
        }
    }
    if (id_part.size() > 9) throw MalformedPlaceholder(std::string(raw));

    GenPlaceholder out;
    out.id = std::stoi(std::string(id_part));
    out.hint = std::string(hint_part);
    return out;
}

std::string format_placeholder(int id) {
    return GenPlaceholder{id, {}}.raw();
}

bool is_inline_type(const ResourceType& type) {
    const std::string& n = type.name();
    return n == "text" || n == "tags" || n == "category" || n == "bbox" || n == "point";
}

std::string file_extension_for(const ResourceType& type) {
    const std::string& n = type.name();
    if (n == "video") return "mp4";
    if (n == "audio") return "wav";
    if (n == "html") return "html";
    return "png";  // image-like maps: image, edge, depth, mask, ...
}

const std::vector<std::string>& DomainRegistry::builtin_names() {
    static const std::vector<std::string> kNames = {
        "question-answering",
        "visual-question-answering",
        "natural-language-processing",
        "image-perception",
        "image-generation",
        "image-editing",
        "image-processing",
        "video-question-answering",
        "video-perception",
        "video-processing",
        "video-generation",
        "video-editing",
        "audio-perception",
        "audio-generation",
        "audio-editing",
    };
    return kNames;
}

DomainRegistry::DomainRegistry() : names_(builtin_names()) {}

void DomainRegistry::extend(const std::string& name) {
    if (name.empty()) throw ConfigError("domain name must not be empty");
    if (contains(name)) throw ConfigError("domain already registered: '" + name + "'");
    names_.push_back(name);
}

bool DomainRegistry::contains(std::string_view name) const {
    return std::find(names_.begin(), names_.end(), name) != names_.end();
}

void DomainRegistry::require(std::string_view name, const std::string& context) const {
    if (!contains(name)) {
        throw ConfigError("unknown task domain '" + std::string(name) + "' in " + context);
    }
}

const DomainRegistry& builtin_domains() {
    static const DomainRegistry kRegistry;
    return kRegistry;
}

}  // namespace toolflow
