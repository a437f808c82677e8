#pragma once

#include <stdexcept>
#include <string>

namespace pcalg {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

struct NonInvertible : Error {
    explicit NonInvertible(const std::string& what) : Error("non-invertible: " + what) {}
};

struct NonEmbeddable : Error {
    explicit NonEmbeddable(const std::string& what) : Error("non-embeddable: " + what) {}
};

struct MixedDomains : Error {
    explicit MixedDomains(const std::string& what) : Error("mixed domains: " + what) {}
};

struct UnsupportedCharacteristic : Error {
    explicit UnsupportedCharacteristic(const std::string& what)
        : Error("unsupported characteristic: " + what) {}
};

struct ClosureFailure : Error {
    explicit ClosureFailure(const std::string& what) : Error("closure failure: " + what) {}
};

struct NotAnAxis : Error {
    explicit NotAnAxis(const std::string& what) : Error("not an axis: " + what) {}
};

struct NotAutomorphism : Error {
    explicit NotAutomorphism(const std::string& what) : Error("not an automorphism: " + what) {}
};

struct ImproperIdeal : Error {
    explicit ImproperIdeal(const std::string& what) : Error("improper ideal: " + what) {}
};

struct GramNotInduced : Error {
    explicit GramNotInduced(const std::string& what)
        : Error("gram form does not descend to quotient: " + what) {}
};

struct Singular : Error {
    explicit Singular(const std::string& what) : Error("singular matrix: " + what) {}
};

struct NotEnumerated : Error {
    NotEnumerated() : Error("group enumeration did not complete") {}
};

struct ReducibleMinpoly : Error {
    explicit ReducibleMinpoly(const std::string& what) : Error("reducible minpoly: " + what) {}
};

struct UnknownItem : Error {
    explicit UnknownItem(const std::string& what) : Error("unknown item: " + what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

}  // namespace pcalg
