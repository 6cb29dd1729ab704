#include "lmtt/error.hpp"

namespace lmtt {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NonFinite: return "NonFinite";
    case ErrorKind::NoEdges: return "NoEdges";
    case ErrorKind::BadEdgeIndex: return "BadEdgeIndex";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::DuplicateVertex: return "DuplicateVertex";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::EdgesCross: return "EdgesCross";
    case ErrorKind::OnCriticalAngle: return "OnCriticalAngle";
    case ErrorKind::MissingNode: return "MissingNode";
    case ErrorKind::InvalidTree: return "InvalidTree";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind), message_(message) {}

}  // namespace lmtt
