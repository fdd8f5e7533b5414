#pragma once

// Golden corpus runner.
//
//   CASE <id>
//   INPUT <verb> <prep> <ground> <lang>
//   EXPECT <location> <phase> <zone> <provenance>     (zero or more)
//   EXPECT-ROLE <location> <lref|ground> <role>        (zero or more)
//   EXPECT-ERROR <ErrorName>
//   END
//
// Fields are tab-separated when the line contains a tab, otherwise
// space-separated.

#include <istream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "motion/compose.hpp"
#include "motion/error.hpp"

namespace motion {

struct CorpusCase {
  std::string id;
  MotionComplex input;
  std::vector<TraceRecord> expected;
  std::vector<RoleRecord> expected_roles;
  std::optional<ErrorKind> expected_error;
  int line = 0;
};

std::vector<CorpusCase> parse_corpus(std::istream& in);
std::vector<CorpusCase> load_corpus_file(const std::string& path);

enum class CaseOutcome : std::uint8_t { Pass, Fail, Error };

std::string_view to_string(CaseOutcome o) noexcept;

struct CaseResult {
  std::string id;
  CaseOutcome outcome = CaseOutcome::Pass;
  std::string fired;           // empty when compose raised
  std::string error;           // error name when compose raised
  std::vector<std::string> diff;  // "- expected" / "+ actual" lines
};

struct CorpusReport {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t error = 0;
  std::vector<CaseResult> cases;  // corpus order
  std::map<std::string, std::size_t> histogram;  // fired rule id -> count

  std::size_t total() const noexcept { return cases.size(); }
  bool ok() const noexcept { return fail == 0 && error == 0; }
};

CaseResult run_case(const CorpusCase& c, const LexiconSet& lexicons, const RuleBase& rules);

// Cases are independent; `jobs` > 1 evaluates them on worker threads. The
// report does not depend on `jobs`.
CorpusReport run_corpus(const std::vector<CorpusCase>& cases, const LexiconSet& lexicons,
                        const RuleBase& rules, unsigned jobs = 1);

std::string render_report(const CorpusReport& report);

}  // namespace motion
