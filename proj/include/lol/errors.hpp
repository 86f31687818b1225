#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lol {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
    virtual const char* kind() const noexcept { return "Error"; }
};

/// Malformed or inconsistent input. The CLI maps this family to exit code 1.
class InputError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "InputError"; }
};

class ParseError : public InputError {
public:
    using InputError::InputError;
    const char* kind() const noexcept override { return "ParseError"; }
};

class DimMismatch : public InputError {
public:
    DimMismatch(std::size_t lhs, std::size_t rhs)
        : InputError("dimension mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}
    explicit DimMismatch(const std::string& what) : InputError(what) {}
    const char* kind() const noexcept override { return "DimMismatch"; }
};

class NotHermitian : public InputError {
public:
    using InputError::InputError;
    const char* kind() const noexcept override { return "NotHermitian"; }
};

class InvalidProjector : public InputError {
public:
    using InputError::InputError;
    const char* kind() const noexcept override { return "InvalidProjector"; }
};

class InvalidSubspace : public InputError {
public:
    using InputError::InputError;
    const char* kind() const noexcept override { return "InvalidSubspace"; }
};

class UnknownElement : public InputError {
public:
    using InputError::InputError;
    const char* kind() const noexcept override { return "UnknownElement"; }
};

class UniverseMismatch : public InputError {
public:
    using InputError::InputError;
    const char* kind() const noexcept override { return "UniverseMismatch"; }
};

/// A poset file whose relations violate the partial-order or orthogonality axioms.
class InvalidPoset : public InputError {
public:
    using InputError::InputError;
    const char* kind() const noexcept override { return "InvalidPoset"; }
};

class ConvergenceFailure : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "ConvergenceFailure"; }
};

/// A partial operation evaluated outside its domain. The CLI maps this family to exit code 2.
class Undefined : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "Undefined"; }
};

class NotOrthogonal : public Undefined {
public:
    NotOrthogonal() : Undefined("operands are not orthogonal") {}
    const char* kind() const noexcept override { return "NotOrthogonal"; }
};

class NotUpperBound : public Undefined {
public:
    explicit NotUpperBound(std::size_t index)
        : Undefined("family member " + std::to_string(index) + " is not below the supplied bound"),
          index_(index) {}
    std::size_t index() const noexcept { return index_; }
    const char* kind() const noexcept override { return "NotUpperBound"; }

private:
    std::size_t index_;
};

class NotLess : public Undefined {
public:
    NotLess() : Undefined("first operand is not below the second in the logical order") {}
    const char* kind() const noexcept override { return "NotLess"; }
};

class Conflict : public Undefined {
public:
    explicit Conflict(std::string key)
        : Undefined("partial functions disagree at " + key), key_(std::move(key)) {}
    const std::string& key() const noexcept { return key_; }
    const char* kind() const noexcept override { return "Conflict"; }

private:
    std::string key_;
};

/// A checker was asked for an axiom family whose hooks the structure does not provide.
class HookUnavailable : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "HookUnavailable"; }
};

class MeetUnavailable : public HookUnavailable {
public:
    MeetUnavailable() : HookUnavailable("structure has no meet hook and no finite carrier") {}
    const char* kind() const noexcept override { return "MeetUnavailable"; }
};

class OrthogonalityUnavailable : public HookUnavailable {
public:
    OrthogonalityUnavailable() : HookUnavailable("structure has no orthogonality hook") {}
    const char* kind() const noexcept override { return "OrthogonalityUnavailable"; }
};

class SubtractionUnavailable : public HookUnavailable {
public:
    SubtractionUnavailable() : HookUnavailable("structure has no subtraction hook") {}
    const char* kind() const noexcept override { return "SubtractionUnavailable"; }
};

class OrthoMissing : public HookUnavailable {
public:
    OrthoMissing() : HookUnavailable("poset carries no orthogonality relation") {}
    const char* kind() const noexcept override { return "OrthoMissing"; }
};

class InfiniteCarrier : public HookUnavailable {
public:
    InfiniteCarrier() : HookUnavailable("check requires a finite carrier") {}
    const char* kind() const noexcept override { return "InfiniteCarrier"; }
};

}  // namespace lol
