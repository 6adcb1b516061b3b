#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "toolflow/types.hpp"

namespace toolflow {

struct SubtaskReturn {
    ResourceType type;
    GenPlaceholder placeholder;

    friend bool operator==(const SubtaskReturn& a, const SubtaskReturn& b) {
        return a.type == b.type && a.placeholder == b.placeholder;
    }
};

/// One unit of a decomposed request, in the strict JSON protocol:
/// {description, task, id, dep, args, returns}. Dependencies always point
/// at lower ids, so a valid list is a DAG by construction.
struct Subtask {
    int id = 0;
    std::string description;
    std::vector<std::string> domains;
    std::vector<int> deps;
    std::vector<TypedValue> args;
    std::vector<SubtaskReturn> returns;

    std::set<ResourceType> arg_types() const;

    friend bool operator==(const Subtask& a, const Subtask& b) {
        return a.id == b.id && a.description == b.description && a.domains == b.domains &&
               a.deps == b.deps && a.args == b.args && a.returns == b.returns;
    }
};

struct DecompositionResult {
    std::vector<Subtask> subtasks;
    std::string source_request;

    friend bool operator==(const DecompositionResult& a, const DecompositionResult& b) {
        return a.subtasks == b.subtasks;
    }
};

/// Validates one subtask against the protocol invariants (dep ordering,
/// placeholder references, return placeholder ids, registered domains).
/// `known_ids` holds the ids of subtasks declared before this one.
void validate_subtask(const Subtask& subtask, const std::set<int>& known_ids,
                      const DomainRegistry& domains);

/// Strict parser for the decomposition protocol. Accepts "task" or
/// "domains" for the domain list, rejects unknown fields, and checks every
/// invariant. Throws ProtocolViolation.
DecompositionResult parse_decomposition(const std::string& json_text,
                                        const TypeRegistry& types,
                                        const DomainRegistry& domains);
DecompositionResult parse_decomposition(const std::string& json_text);

/// Canonical serialization; parse(serialize(d)) reproduces d.
std::string serialize_decomposition(const DecompositionResult& result);

/// Topological layering: stage i holds the ids of all subtasks whose
/// dependencies are satisfied by stages < i. Ids ascend within a stage.
std::vector<std::vector<int>> subtask_schedule(const DecompositionResult& result);

/// Produces the raw protocol document for a request. Implementations must
/// either be safe for concurrent calls or report themselves exclusive.
class Decomposer {
public:
    virtual ~Decomposer() = default;
    virtual std::string decompose_raw(const std::string& request) = 0;
    virtual bool concurrent_safe() const { return true; }
};

/// Runs the decomposer and re-validates its output through the protocol
/// parser, retrying on malformed documents. An empty subtask list maps to
/// EmptyDecomposition (the protocol's "unparsable request" signal).
DecompositionResult decompose(const std::string& request, Decomposer& decomposer,
                              const TypeRegistry& types, const DomainRegistry& domains,
                              int retries = 2);

/// Deterministic rule-based decomposer. Splits the request into clauses,
/// matches each against a fixed keyword table, and emits protocol-valid
/// subtasks with file mentions lifted into typed args. With
/// `prior_knowledge` enabled, tool-name hints are appended to each subtask
/// description.
class KeywordDecomposer : public Decomposer {
public:
    explicit KeywordDecomposer(bool prior_knowledge = false)
        : prior_knowledge_(prior_knowledge) {}

    std::string decompose_raw(const std::string& request) override;

private:
    bool prior_knowledge_;
};

}  // namespace toolflow
