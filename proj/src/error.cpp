#include "motion/error.hpp"

#include <array>
#include <utility>

namespace motion {

namespace {

constexpr std::array<std::pair<ErrorKind, std::string_view>, 12> kErrorNames{{
    {ErrorKind::DuplicateLemma, "DuplicateLemma"},
    {ErrorKind::UnknownZoneName, "UnknownZoneName"},
    {ErrorKind::IllFormedEntry, "IllFormedEntry"},
    {ErrorKind::UnlexicalizedClass, "UnlexicalizedClass"},
    {ErrorKind::NotACoLVerb, "NotACoLVerb"},
    {ErrorKind::UnknownLemma, "UnknownLemma"},
    {ErrorKind::UnknownLanguage, "UnknownLanguage"},
    {ErrorKind::Infelicitous, "Infelicitous"},
    {ErrorKind::AmbiguousRuleBase, "AmbiguousRuleBase"},
    {ErrorKind::EmptyApplicableSet, "EmptyApplicableSet"},
    {ErrorKind::ParseError, "ParseError"},
    {ErrorKind::IoError, "IoError"},
}};

std::string with_line(const std::string& message, int line) {
  if (line <= 0) return message;
  return "line " + std::to_string(line) + ": " + message;
}

}  // namespace

std::string_view to_string(ErrorKind kind) {
  for (const auto& [k, name] : kErrorNames)
    if (k == kind) return name;
  return "UnknownError";
}

std::optional<ErrorKind> parse_error_kind(std::string_view name) {
  for (const auto& [k, n] : kErrorNames)
    if (n == name) return k;
  return std::nullopt;
}

Error::Error(ErrorKind kind, const std::string& message, int line)
    : std::runtime_error(std::string(to_string(kind)) + ": " +
                         with_line(message, line)),
      kind_(kind),
      line_(line) {}

}  // namespace motion
