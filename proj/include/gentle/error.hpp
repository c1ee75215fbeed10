#pragma once

#include <stdexcept>
#include <string>

namespace gentle {

enum class ErrorKind {
  Parse,
  NonComposableRelation,
  TooManyArrowsAtVertex,
  GentleCondition2Violated,
  GentleCondition3Violated,
  NotChained,
  TrivialPath,
  NoValidAssignment,
  HeadTailMismatch,
  InverseCancellation,
  RelationCrossed,
  TailNotPeriodicizable,
  ShapeMismatch,
  NotClassifiable,
  NotAStringWord,
  NotABandWord,
  SingularMatrix,
  AdjacencyRuleViolated,
  PathNotInP,
  WeakCyclic,
  IndexOutOfShape,
  PeriodicInput,
  WindowRequired,
  InfinitePreimage,
  NotCyclic,
  NotARecognizedResolution,
  RankMismatch,
  InfiniteDimensional,
  VertexUnknown,
  NotAComplex,
  Internal,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

}  // namespace gentle
