#pragma once

#include <stdexcept>
#include <string>

namespace adsrigid {

enum class ErrorKind {
  Precondition,  // input violates an operation's stated precondition
  Degenerate,    // singular / ill-conditioned data
  Config,        // bad run configuration
  Resource,      // requested size above configured limit
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace adsrigid
