#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lmtt {

enum class ErrorKind {
  NonFinite,
  NoEdges,
  BadEdgeIndex,
  SelfLoop,
  DuplicateEdge,
  DuplicateVertex,
  Disconnected,
  EdgesCross,
  OnCriticalAngle,
  MissingNode,
  InvalidTree,
  InvalidArgument,
  DimensionTooLarge,
  ParseError,
  Io,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure in the library is reported as an lmtt::Error carrying a
/// machine-checkable kind and a human-readable message.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }
  /// The message without the kind prefix.
  [[nodiscard]] const std::string& message() const noexcept { return message_; }

 private:
  ErrorKind kind_;
  std::string message_;
};

}  // namespace lmtt
