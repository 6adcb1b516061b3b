#pragma once

#include <stdexcept>
#include <string>

namespace toolflow {

// Base class for every error the engine raises on purpose.
class EngineError : public std::runtime_error {
public:
    explicit EngineError(const std::string& what) : std::runtime_error(what) {}
};

class ConfigError : public EngineError {
public:
    using EngineError::EngineError;
};

class UnknownResourceType : public EngineError {
public:
    explicit UnknownResourceType(const std::string& name)
        : EngineError("unknown resource type: '" + name + "'"), name_(name) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

class MalformedPlaceholder : public EngineError {
public:
    explicit MalformedPlaceholder(const std::string& raw)
        : EngineError("malformed placeholder: '" + raw + "'") {}
};

// Strict decomposition-protocol failure; carries the offending field.
class ProtocolViolation : public EngineError {
public:
    ProtocolViolation(const std::string& field, const std::string& reason)
        : EngineError("protocol violation in '" + field + "': " + reason),
          field_(field),
          reason_(reason) {}
    const std::string& field() const noexcept { return field_; }
    const std::string& reason() const noexcept { return reason_; }

private:
    std::string field_;
    std::string reason_;
};

class DuplicateTool : public EngineError {
public:
    explicit DuplicateTool(const std::string& name)
        : EngineError("duplicate tool name: '" + name + "'") {}
};

class InvalidSubtask : public EngineError {
public:
    using EngineError::EngineError;
};

class DecompositionFailed : public EngineError {
public:
    using EngineError::EngineError;
};

class EmptyDecomposition : public EngineError {
public:
    using EngineError::EngineError;
};

class PlanningFailed : public EngineError {
public:
    using EngineError::EngineError;
};

class AssessorUnavailable : public EngineError {
public:
    using EngineError::EngineError;
};

class AssessorProtocolError : public EngineError {
public:
    using EngineError::EngineError;
};

class ExpertUnavailable : public EngineError {
public:
    using EngineError::EngineError;
};

class UnbindableArgument : public EngineError {
public:
    explicit UnbindableArgument(const std::string& arg)
        : EngineError("no resource available for argument '" + arg + "'"), arg_(arg) {}
    const std::string& arg() const noexcept { return arg_; }

private:
    std::string arg_;
};

// An expert referenced a resource id that does not exist.
class BindingHallucination : public EngineError {
public:
    using EngineError::EngineError;
};

class TypeMismatch : public EngineError {
public:
    using EngineError::EngineError;
};

class ToolExecutionError : public EngineError {
public:
    using EngineError::EngineError;
};

class MissingInput : public EngineError {
public:
    using EngineError::EngineError;
};

class UnresolvedReference : public EngineError {
public:
    using EngineError::EngineError;
};

class UnknownGoldTool : public EngineError {
public:
    using EngineError::EngineError;
};

class EmptyBenchmark : public EngineError {
public:
    using EngineError::EngineError;
};

}  // namespace toolflow
