#pragma once

#include <stdexcept>
#include <string>

namespace flowvol {

// Named failure conditions raised by library operations. The CLI surfaces
// the kind name verbatim, so these stay stable.
enum class ErrorKind {
    EdgeOrientation,
    VertexRange,
    EmptyGraph,
    ZeroPart,
    BadParams,
    NonzeroSum,
    NegativeNetflow,
    EnumerationCapExceeded,
    DegenerateDimension,
    MissingOutgoingEdge,
    MissingIncomingEdge,
    EdgesNotComposable,
    NoIncomingEdges,
    TreeShapeMismatch,
    NetflowMismatch,
    ParseError,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

}  // namespace flowvol
