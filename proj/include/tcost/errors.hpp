#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace tcost {

// Domain error carrying a stable machine-readable name next to the human
// message. CLI maps these to exit code 1 and prints the name.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& message)
      : std::runtime_error(name + ": " + message), name_(std::move(name)) {}

  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

}  // namespace tcost
