#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qfg {

// Raised when a criterion is asked about an input outside its domain, e.g.
// the three-vertex check on a graph with a different vertex count.
class NotApplicable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when a structural invariant that the theory guarantees is observed
// to fail (arrow determinism, partition soundness, unexpected graph shape).
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace qfg
