#pragma once

#include <stdexcept>
#include <string>

namespace fgab {

// A mathematical precondition was violated (mismatched shapes, a map that is
// not well defined, a sequence that is not exact, ...).
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed user input: expression syntax, JSON schema.
class InputError : public std::invalid_argument {
 public:
  InputError(const std::string& what, std::size_t position = npos)
      : std::invalid_argument(what), position_(position) {}

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace fgab
