#pragma once

// Prioritized defeasible rule base for verb + preposition composition.
//
// Rule file (tab-separated, '#' comments):
//
//   VERSION <text>
//   R <id> <strict|defeasible> <priority> <guard> <conclusion>
//
// guard:       '*' or comma-separated atoms from
//              lrefrole=initial|medial|final  prepkind=pos|dir
//              preprole=initial|medial|final  zonecompat=yes|no  attained=yes|no
// conclusion:  identify | bind(pre|during|post), then optional
//              zone=<zone> and prov=verb|prep|interaction (space separated)

#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "motion/lexicon.hpp"
#include "motion/trace.hpp"
#include "motion/zone.hpp"

namespace motion {

enum class Strength : std::uint8_t { Defeasible, Strict };

std::string_view to_string(Strength s) noexcept;

// Features of a verb/preposition pair that rule guards test.
struct Features {
  LrefRole lref_role = LrefRole::Initial;
  PrepKind prep_kind = PrepKind::Positional;
  std::optional<LrefRole> prep_role;
  bool zone_compatible = false;
  bool attained = true;

  bool operator==(const Features&) const = default;
};

struct Guard {
  std::optional<LrefRole> lref_role;
  std::optional<PrepKind> prep_kind;
  std::optional<LrefRole> prep_role;
  std::optional<bool> zone_compatible;
  std::optional<bool> attained;

  bool holds(const Features& f) const noexcept;
  std::size_t atom_count() const noexcept;
  // True when every atom of *this also appears in `other`, i.e. *this is at
  // least as general.
  bool subsumes(const Guard& other) const noexcept;

  bool operator==(const Guard&) const = default;
};

enum class ConclusionKind : std::uint8_t { Identify, Bind };

struct Conclusion {
  ConclusionKind kind = ConclusionKind::Identify;
  Phase phase = Phase::Post;  // Bind only
  std::optional<Zone> zone;
  std::optional<Provenance> provenance;

  bool operator==(const Conclusion&) const = default;
};

struct CompositionRule {
  std::string id;
  Strength strength = Strength::Defeasible;
  int priority = 0;
  Guard guard;
  Conclusion conclusion;

  bool operator==(const CompositionRule&) const = default;
};

// Strict before defeasible, then higher priority first.
bool outranks(const CompositionRule& a, const CompositionRule& b) noexcept;
bool same_rank(const CompositionRule& a, const CompositionRule& b) noexcept;

class RuleBase {
 public:
  RuleBase() = default;
  explicit RuleBase(std::string version) : version_(std::move(version)) {}

  const std::string& version() const noexcept { return version_; }
  const std::vector<CompositionRule>& rules() const noexcept { return rules_; }

  // Throws IllFormedEntry on a duplicate id.
  void add(CompositionRule rule);
  // Returns false when no rule has that id.
  bool remove(std::string_view id);

  bool operator==(const RuleBase&) const = default;

 private:
  std::string version_;
  std::vector<CompositionRule> rules_;
};

RuleBase load_rulebase(std::istream& source);
RuleBase load_rulebase_file(const std::string& path);
std::string serialize_rulebase(const RuleBase& rules);

std::string format_guard(const Guard& guard);
std::string format_conclusion(const Conclusion& conclusion);
Guard parse_guard(std::string_view text, int line = 0);
Conclusion parse_conclusion(std::string_view text, int line = 0);

// All rules whose guard holds, best first; ties keep file order.
std::vector<CompositionRule> applicable_rules(const Features& features,
                                              const RuleBase& rules);

// Head of an ordered applicable list. Throws EmptyApplicableSet, or
// AmbiguousRuleBase when the top two share strength and priority.
const CompositionRule& resolve(const std::vector<CompositionRule>& applicable);

// Columns of the coverage grid.
enum class PrepSlot : std::uint8_t { Positional, DirInitial, DirMedial, DirFinal };

inline constexpr std::array<PrepSlot, 4> kAllPrepSlots{
    PrepSlot::Positional, PrepSlot::DirInitial, PrepSlot::DirMedial, PrepSlot::DirFinal};

std::string_view to_string(PrepSlot s) noexcept;  // "pos", "dir-initial", ...

struct GridCell {
  LrefRole lref_role;
  PrepSlot slot;
  auto operator<=>(const GridCell&) const = default;
};

std::string format_cell(const GridCell& cell);

struct CellTie {
  GridCell cell;
  Features features;
  std::string first;
  std::string second;
};

struct LintReport {
  std::vector<GridCell> gaps;  // some feature completion has no applicable rule
  std::vector<CellTie> ties;   // some feature completion has a tied top pair
  bool clean() const noexcept { return gaps.empty() && ties.empty(); }
};

// Enumerates the 3 x 4 grid of verb lref role x preposition kind/role; each
// cell is checked for every zonecompat value and, for directional-final,
// every attained value.
LintReport lint_rulebase(const RuleBase& rules);
std::string render_lint(const LintReport& report);

}  // namespace motion
