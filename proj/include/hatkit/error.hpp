#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hat {

enum class ErrorKind {
    LoopEdge,
    DuplicateEdge,
    VertexOutOfRange,
    MalformedGraph6,
    EmptyEdgeSet,
    DegreeMismatch,
    NotBijection,
    NotInvariant,
    TooLarge,
    NotAutomorphisms,
    NotHalfArcTransitive,
    NotTetravalent,
    OrientationInvalid,
    StructureViolation,
    TightlyAttached,
    OddAttachment,
    AntipodeMismatch,
    TheoremViolation,
    NotCubic,
    NotConnected,
    Not2ArcTransitive,
    WrongParameters,
    TooSmall,
    FixedPoint,
    OrbitNotIndependent,
    DegenerateWreath,
    NotCentralizing,
    TauInG,
    OrderTooSmall,
    UnknownInput,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the toolkit carries a machine-checkable kind.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& detail)
        : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace hat
