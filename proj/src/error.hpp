#pragma once

#include <stdexcept>
#include <string>

namespace rsg {

enum class ErrorCode {
  Io = 1,
  Format = 2,
  InvalidArgument = 3,
  MissingArtifact = 4,
  Numeric = 5,
  Internal = 6,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace rsg
