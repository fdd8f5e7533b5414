#pragma once

// Verb and preposition lexicons: entries, the line-oriented file format,
// and the verb-class / preposition-group classifiers.
//
// File format (UTF-8, tab-separated fields, '#' starts a comment):
//
//   LANG fr
//   V  <lemma>  <CoL|CoPs|ICoPs|CoPtu>  [<initial|medial|final>  <start>  <end>]  [gloss=...]
//   P  <lemma>  <pos|dir>  [<initial|medial|final>]  <zone>  [attained=true|false]

#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "motion/zone.hpp"

namespace motion {

enum class VerbCategory : std::uint8_t { CoL, CoPs, ICoPs, CoPtu };

std::string_view to_string(VerbCategory c) noexcept;
std::optional<VerbCategory> parse_category(std::string_view name) noexcept;

// Zone constraints of a change-of-location verb w.r.t. its lref.
struct ZoneShift {
  LrefRole lref_role;
  Zone start;
  Zone end;
  bool operator==(const ZoneShift&) const = default;
};

struct VerbEntry {
  std::string lemma;
  VerbCategory category = VerbCategory::CoL;
  std::optional<ZoneShift> shift;  // present iff category == CoL
  std::string gloss;

  bool operator==(const VerbEntry&) const = default;
};

enum class PrepKind : std::uint8_t { Positional, Directional };

std::string_view to_string(PrepKind k) noexcept;  // "pos", "dir"
std::optional<PrepKind> parse_prep_kind(std::string_view name) noexcept;

struct PrepEntry {
  std::string lemma;
  PrepKind kind = PrepKind::Positional;
  std::optional<LrefRole> role;  // Directional only
  Zone zone = Zone::Inside;
  std::optional<bool> attained;  // Directional-Final only
  std::string language;

  // Directional-Final entries default to attained; everything else asserts
  // its zone outright.
  bool reaches_zone() const noexcept { return attained.value_or(true); }

  bool operator==(const PrepEntry&) const = default;
};

// The lexicalized (start, end) verb classes. Medial-lref verbs are checked
// against a separate set of path classes: their zones are given w.r.t. the
// path location, which the mobile is inside of during the motion.
class ClassInventory {
 public:
  using ZonePair = std::pair<Zone, Zone>;

  ClassInventory() = default;
  ClassInventory(std::set<ZonePair> transitions, std::set<ZonePair> paths);

  static const ClassInventory& defaults();

  // Lines "CLASS <start> <end>" and "PATH <start> <end>", '#' comments.
  static ClassInventory parse(std::istream& in);

  bool has_transition(Zone start, Zone end) const;
  bool has_path(Zone start, Zone end) const;

  const std::set<ZonePair>& transitions() const noexcept { return transitions_; }
  const std::set<ZonePair>& paths() const noexcept { return paths_; }

 private:
  std::set<ZonePair> transitions_;
  std::set<ZonePair> paths_;
};

std::string class_identifier(Zone start, Zone end);  // "inside→proximal"

std::string classify_verb(const VerbEntry& entry,
                          const ClassInventory& inventory = ClassInventory::defaults());

// "pos/<zone>" or "dir/<role>/<zone>".
std::string classify_prep(const PrepEntry& entry);

class Lexicon {
 public:
  using VerbMap = std::map<std::string, VerbEntry, std::less<>>;
  using PrepMap = std::map<std::string, PrepEntry, std::less<>>;

  explicit Lexicon(std::string language = {});

  const std::string& language() const noexcept { return language_; }
  const VerbMap& verbs() const noexcept { return verbs_; }
  const PrepMap& preps() const noexcept { return preps_; }

  // Throws DuplicateLemma; `line` is only used for the message.
  void add_verb(VerbEntry entry, int line = 0);
  void add_prep(PrepEntry entry, int line = 0);

  bool operator==(const Lexicon&) const = default;

 private:
  std::string language_;
  VerbMap verbs_;
  PrepMap preps_;
};

const VerbEntry& lookup_verb(const Lexicon& lexicon, std::string_view lemma);
const PrepEntry& lookup_prep(const Lexicon& lexicon, std::string_view lemma);

// A "LANG" header, when present, must agree with `language`.
Lexicon load_lexicon(std::istream& source, std::string_view language,
                     const ClassInventory& inventory = ClassInventory::defaults());

// Takes the language from the file's LANG header, which is then mandatory.
Lexicon load_lexicon_file(const std::filesystem::path& path,
                          const ClassInventory& inventory = ClassInventory::defaults());

std::string serialize_lexicon(const Lexicon& lexicon);

// Lexicons keyed by language tag.
class LexiconSet {
 public:
  void add(Lexicon lexicon);
  const Lexicon& get(std::string_view language) const;  // throws UnknownLanguage
  bool contains(std::string_view language) const;
  const std::map<std::string, Lexicon, std::less<>>& all() const noexcept {
    return lexicons_;
  }

 private:
  std::map<std::string, Lexicon, std::less<>> lexicons_;
};

// Helpers shared by the line-oriented readers.
std::vector<std::string_view> split_fields(std::string_view line, char sep);
std::string_view trim(std::string_view s) noexcept;

}  // namespace motion
