#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace motion {

enum class ErrorKind {
  DuplicateLemma,
  UnknownZoneName,
  IllFormedEntry,
  UnlexicalizedClass,
  NotACoLVerb,
  UnknownLemma,
  UnknownLanguage,
  Infelicitous,
  AmbiguousRuleBase,
  EmptyApplicableSet,
  ParseError,
  IoError,
};

// Stable names; corpus files refer to errors by these (EXPECT-ERROR).
std::string_view to_string(ErrorKind kind);
std::optional<ErrorKind> parse_error_kind(std::string_view name);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, int line = 0);

  ErrorKind kind() const noexcept { return kind_; }
  // 1-based source line, 0 when the error is not tied to a file position.
  int line() const noexcept { return line_; }

 private:
  ErrorKind kind_;
  int line_;
};

}  // namespace motion
