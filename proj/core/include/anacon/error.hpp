#ifndef ANACON_ERROR_HPP
#define ANACON_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace anacon {

/// 1-based line/column into a source text.
struct SourcePosition {
  std::size_t line = 1;
  std::size_t column = 1;
};

/// Raised by every text frontend (symbolic CL, restricted English, contract
/// files, XML). what() is "line:column: detail".
class ParseError : public std::runtime_error {
 public:
  ParseError(SourcePosition position, const std::string& detail)
      : std::runtime_error(std::to_string(position.line) + ":" +
                           std::to_string(position.column) + ": " + detail),
        position_(position),
        detail_(detail) {}

  SourcePosition position() const noexcept { return position_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  SourcePosition position_;
  std::string detail_;
};

/// An offending character that no token starts with.
class LexicalError : public ParseError {
 public:
  using ParseError::ParseError;
};

/// A contract that parses but uses constructs the conflict engine refuses to
/// analyze (negation, general Kleene star).
class UnsupportedContract : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace anacon

#endif  // ANACON_ERROR_HPP
