#pragma once

#include <stdexcept>
#include <string>

namespace subtour {

// Malformed input text (graph files, rationals, JSON documents).
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A precondition on values was violated by the caller (bad subset, wrong
// dimension, point outside the required polytope, ...).
class DomainError : public std::runtime_error {
public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// The instance is larger than the exact desk-scale algorithms accept.
class ScaleError : public std::runtime_error {
public:
  explicit ScaleError(const std::string& what) : std::runtime_error(what) {}
};

// A structural guarantee the library relies on failed on a concrete instance.
// Seeing this either means a bug or a genuine counterexample to one of the
// certified facts; the message carries the witness.
class ContradictionError : public std::logic_error {
public:
  explicit ContradictionError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace subtour
