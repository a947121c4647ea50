#pragma once

#include <stdexcept>
#include <string>

namespace nband {

// Malformed arguments or documents (wrong lengths, out-of-range entries,
// non-bijective permutations, unparsable JSON).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Well-formed input that violates a mathematical precondition, e.g. a table
// that is not a symmetric n-ary band.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configured memory / enumeration budget would be exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A derived object failed an internal cross-check. Seeing one of these means
// an upstream precondition was silently false.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace nband
