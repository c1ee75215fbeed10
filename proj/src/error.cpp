#include "gentle/error.hpp"

namespace gentle {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::NonComposableRelation: return "NonComposableRelation";
    case ErrorKind::TooManyArrowsAtVertex: return "TooManyArrowsAtVertex";
    case ErrorKind::GentleCondition2Violated: return "GentleCondition2Violated";
    case ErrorKind::GentleCondition3Violated: return "GentleCondition3Violated";
    case ErrorKind::NotChained: return "NotChained";
    case ErrorKind::TrivialPath: return "TrivialPath";
    case ErrorKind::NoValidAssignment: return "NoValidAssignment";
    case ErrorKind::HeadTailMismatch: return "HeadTailMismatch";
    case ErrorKind::InverseCancellation: return "InverseCancellation";
    case ErrorKind::RelationCrossed: return "RelationCrossed";
    case ErrorKind::TailNotPeriodicizable: return "TailNotPeriodicizable";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::NotClassifiable: return "NotClassifiable";
    case ErrorKind::NotAStringWord: return "NotAStringWord";
    case ErrorKind::NotABandWord: return "NotABandWord";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::AdjacencyRuleViolated: return "AdjacencyRuleViolated";
    case ErrorKind::PathNotInP: return "PathNotInP";
    case ErrorKind::WeakCyclic: return "WeakCyclic";
    case ErrorKind::IndexOutOfShape: return "IndexOutOfShape";
    case ErrorKind::PeriodicInput: return "PeriodicInput";
    case ErrorKind::WindowRequired: return "WindowRequired";
    case ErrorKind::InfinitePreimage: return "InfinitePreimage";
    case ErrorKind::NotCyclic: return "NotCyclic";
    case ErrorKind::NotARecognizedResolution: return "NotARecognizedResolution";
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::InfiniteDimensional: return "InfiniteDimensional";
    case ErrorKind::VertexUnknown: return "VertexUnknown";
    case ErrorKind::NotAComplex: return "NotAComplex";
    case ErrorKind::Internal: return "InternalError";
  }
  return "UnknownError";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {}

void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

}  // namespace gentle
