#include "hatkit/error.hpp"

namespace hat {

std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::LoopEdge: return "LoopEdge";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::MalformedGraph6: return "MalformedGraph6";
    case ErrorKind::EmptyEdgeSet: return "EmptyEdgeSet";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::NotBijection: return "NotBijection";
    case ErrorKind::NotInvariant: return "NotInvariant";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotAutomorphisms: return "NotAutomorphisms";
    case ErrorKind::NotHalfArcTransitive: return "NotHalfArcTransitive";
    case ErrorKind::NotTetravalent: return "NotTetravalent";
    case ErrorKind::OrientationInvalid: return "OrientationInvalid";
    case ErrorKind::StructureViolation: return "StructureViolation";
    case ErrorKind::TightlyAttached: return "TightlyAttached";
    case ErrorKind::OddAttachment: return "OddAttachment";
    case ErrorKind::AntipodeMismatch: return "AntipodeMismatch";
    case ErrorKind::TheoremViolation: return "TheoremViolation";
    case ErrorKind::NotCubic: return "NotCubic";
    case ErrorKind::NotConnected: return "NotConnected";
    case ErrorKind::Not2ArcTransitive: return "Not2ArcTransitive";
    case ErrorKind::WrongParameters: return "WrongParameters";
    case ErrorKind::TooSmall: return "TooSmall";
    case ErrorKind::FixedPoint: return "FixedPoint";
    case ErrorKind::OrbitNotIndependent: return "OrbitNotIndependent";
    case ErrorKind::DegenerateWreath: return "DegenerateWreath";
    case ErrorKind::NotCentralizing: return "NotCentralizing";
    case ErrorKind::TauInG: return "TauInG";
    case ErrorKind::OrderTooSmall: return "OrderTooSmall";
    case ErrorKind::UnknownInput: return "UnknownInput";
    }
    return "Unknown";
}

} // namespace hat
