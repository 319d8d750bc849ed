#pragma once

#include <stdexcept>
#include <string>

namespace contamkit {

// Error taxonomy mirrors the CLI exit codes: usage -> 1, data -> 2,
// provider -> 3.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ProviderError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace contamkit
