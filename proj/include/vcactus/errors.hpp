#pragma once

#include <stdexcept>
#include <string>

namespace vcactus {

// Unsupported or malformed type/rank/folding request.
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Argument outside an operation's domain (e.g. a non-dominant weight).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// A generated model violated one of its structural guards
// (non-integral minimum, size mismatch against the Weyl dimension).
struct ModelIntegrityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Internal Cartan/crystal data disagreed with itself.
struct ConsistencyError : std::logic_error {
  using std::logic_error::logic_error;
};

// Path is not in the span of the folding weight map.
struct NotInImage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace vcactus
