#pragma once

#include <stdexcept>
#include <string>

namespace snweb {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero polynomial") {}
};

struct NotDivisible : Error {
    NotDivisible() : Error("polynomial division is not exact") {}
};

struct NonIntegralResult : Error {
    explicit NonIntegralResult(const std::string& what) : Error(what) {}
};

struct NegativeArgument : Error {
    explicit NegativeArgument(const std::string& what) : Error(what) {}
};

struct OutOfRange : Error {
    explicit OutOfRange(const std::string& what) : Error(what) {}
};

struct SyntaxError : Error {
    explicit SyntaxError(const std::string& what) : Error(what) {}
};

// Diagram validation failure; carries the offending slice index (-1 = global).
struct ValidationError : Error {
    int slice;
    ValidationError(int slice_index, const std::string& reason)
        : Error("slice " + std::to_string(slice_index) + ": " + reason), slice(slice_index) {}
};

struct OpenDiagram : Error {
    OpenDiagram() : Error("diagram has a non-empty boundary") {}
};

struct SignatureMismatch : Error {
    explicit SignatureMismatch(const std::string& what) : Error(what) {}
};

struct InvalidSignature : Error {
    explicit InvalidSignature(const std::string& what) : Error(what) {}
};

struct HasCrossings : Error {
    HasCrossings() : Error("diagram has crossings; a planar web is required") {}
};

struct HasVertices : Error {
    HasVertices() : Error("diagram has vertices; a link diagram is required") {}
};

struct NotALink : Error {
    NotALink() : Error("component count is defined for link diagrams only") {}
};

struct NoSuchVertex : Error {
    explicit NoSuchVertex(int index) : Error("no vertex with index " + std::to_string(index)) {}
};

struct MismatchedAlgebra : Error {
    explicit MismatchedAlgebra(const std::string& what) : Error(what) {}
};

struct FlowViolation : Error {
    explicit FlowViolation(const std::string& what) : Error(what) {}
};

struct NoStates : Error {
    NoStates() : Error("graph admits no states") {}
};

}  // namespace snweb
