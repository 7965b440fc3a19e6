#include "multmon/error.hpp"

namespace multmon {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "invalid_input";
    case ErrorKind::HypothesisViolation: return "hypothesis_violation";
    case ErrorKind::Unsupported: return "unsupported";
    case ErrorKind::ResourceLimit: return "resource_limit";
    case ErrorKind::InternalConsistency: return "internal_consistency";
  }
  return "unknown";
}

}  // namespace multmon
