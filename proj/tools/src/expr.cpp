#include "fgab_cli/expr.hpp"

#include "fgab/error.hpp"

#include <cctype>
#include <string>

namespace fgab::cli {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  FgGroup parse() {
    skip_space();
    if (at_end()) fail("empty group expression");
    atom();
    for (skip_space(); !at_end(); skip_space()) {
      expect('+', "expected '+' between summands");
      atom();
    }
    return classify_cyclic_sum(orders_).group;
  }

 private:
  void atom() {
    skip_space();
    if (peek() == '0') {
      ++pos_;
      return;
    }
    expect('Z', "expected 'Z' or '0'");
    skip_space();
    if (peek() == '^') {
      ++pos_;
      const Integer k = integer();
      if (!k.fits_ulong_p()) fail("rank too large");
      orders_.insert(orders_.end(), k.get_ui(), Integer(0));
    } else if (peek() == '/') {
      ++pos_;
      const std::size_t at = (skip_space(), pos_);
      const Integer n = integer();
      if (n == 0) fail("Z/0 is not a finite cyclic group; use Z", at);
      orders_.push_back(n);
    } else {
      orders_.push_back(0);
    }
  }

  Integer integer() {
    skip_space();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a nonnegative integer", start);
    return Integer(std::string(text_.substr(start, pos_ - start)), 10);
  }

  void expect(char c, const char* message) {
    if (peek() != c) fail(message);
    ++pos_;
  }

  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  bool at_end() const { return pos_ >= text_.size(); }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& message) const { fail(message, pos_); }
  [[noreturn]] void fail(const std::string& message, std::size_t at) const {
    const std::string where =
        at >= text_.size() ? "end of input" : "'" + std::string(1, text_[at]) + "'";
    throw InputError("position " + std::to_string(at) + " (" + where + "): " + message +
                         "\n  " + std::string(text_) + "\n  " + std::string(at, ' ') + "^",
                     at);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  IntVector orders_;
};

}  // namespace

FgGroup parse_group(std::string_view text) { return Parser(text).parse(); }

}  // namespace fgab::cli
