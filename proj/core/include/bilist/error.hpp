#pragma once

#include <stdexcept>
#include <string>

namespace bilist {

enum class ErrorCode {
  MALFORMED,        // unparseable input (syntax)
  INCONSISTENT,     // parsed but violates a type invariant
  SHAPE_MISMATCH,   // assignment does not fit the graph
  SIZE,             // construction exceeds a configured size cap
  TOO_LARGE,        // search intermediate exceeds a configured cap
  PROPERTY_A_HOLDS, // a family required to lack a hitting set has one
  RETRY_EXHAUSTED,  // randomized retry budget spent
  REGION_TOO_LARGE, // sweep region exceeds the row cap
  USAGE,            // bad CLI invocation
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MALFORMED: return "MALFORMED";
    case ErrorCode::INCONSISTENT: return "INCONSISTENT";
    case ErrorCode::SHAPE_MISMATCH: return "SHAPE_MISMATCH";
    case ErrorCode::SIZE: return "SIZE";
    case ErrorCode::TOO_LARGE: return "TOO_LARGE";
    case ErrorCode::PROPERTY_A_HOLDS: return "PROPERTY_A_HOLDS";
    case ErrorCode::RETRY_EXHAUSTED: return "RETRY_EXHAUSTED";
    case ErrorCode::REGION_TOO_LARGE: return "REGION_TOO_LARGE";
    case ErrorCode::USAGE: return "USAGE";
  }
  return "UNKNOWN";
}

} // namespace bilist
