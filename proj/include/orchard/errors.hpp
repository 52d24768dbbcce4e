#pragma once

// Exception hierarchy shared by all modules.
//
// InputError          -- malformed arguments, schema violations, label clashes
// TripleConstantError -- a pairwise sign table whose triple products are not
//                        constant (carries one witness triple)
// GenericityError     -- a point configuration with a degenerate subset
//                        (carries the violating index subset)
// GenerationError     -- a randomized generator exhausted its retry budget

#include <array>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace orchard {

class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

class TripleConstantError : public std::runtime_error {
 public:
  TripleConstantError(const std::string& what, std::array<int, 3> triple)
      : std::runtime_error(what), triple_(triple) {}
  const std::array<int, 3>& triple() const { return triple_; }

 private:
  std::array<int, 3> triple_;
};

class GenericityError : public std::runtime_error {
 public:
  GenericityError(const std::string& what, std::vector<int> witness)
      : std::runtime_error(what), witness_(std::move(witness)) {}
  const std::vector<int>& witness() const { return witness_; }

 private:
  std::vector<int> witness_;
};

class GenerationError : public std::runtime_error {
 public:
  explicit GenerationError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace orchard
