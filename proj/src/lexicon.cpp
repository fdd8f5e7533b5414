#include "motion/lexicon.hpp"

#include <fstream>
#include <sstream>

#include "motion/error.hpp"

namespace motion {

namespace {

constexpr std::string_view kArrow = "→";

std::string strip_comment(std::string_view line) {
  auto hash = line.find('#');
  return std::string(trim(line.substr(0, hash)));
}

bool starts_with(std::string_view s, std::string_view prefix) {
  return s.substr(0, prefix.size()) == prefix;
}

Zone zone_field(std::string_view field, int line) {
  if (auto z = parse_zone(field)) return *z;
  throw Error(ErrorKind::UnknownZoneName,
              "unknown zone name '" + std::string(field) + "'", line);
}

LrefRole role_field(std::string_view field, int line) {
  if (auto r = parse_role(field)) return *r;
  throw Error(ErrorKind::IllFormedEntry,
              "expected initial|medial|final, got '" + std::string(field) + "'",
              line);
}

[[noreturn]] void ill_formed(const std::string& what, int line) {
  throw Error(ErrorKind::IllFormedEntry, what, line);
}

VerbEntry parse_verb(const std::vector<std::string_view>& f, int line) {
  std::vector<std::string_view> fields = f;
  VerbEntry entry;
  if (!fields.empty() && starts_with(fields.back(), "gloss=")) {
    entry.gloss = std::string(fields.back().substr(6));
    fields.pop_back();
  }
  if (fields.size() < 3) ill_formed("verb line needs a lemma and a category", line);
  entry.lemma = std::string(fields[1]);
  auto category = parse_category(fields[2]);
  if (!category)
    ill_formed("unknown verb category '" + std::string(fields[2]) + "'", line);
  entry.category = *category;

  if (entry.category == VerbCategory::CoL) {
    if (fields.size() != 6)
      ill_formed("CoL verb '" + entry.lemma + "' needs <lref_role> <start> <end>", line);
    entry.shift = ZoneShift{role_field(fields[3], line), zone_field(fields[4], line),
                            zone_field(fields[5], line)};
  } else if (fields.size() != 3) {
    ill_formed("only CoL verbs carry zone constraints ('" + entry.lemma + "')", line);
  }
  return entry;
}

PrepEntry parse_prep(const std::vector<std::string_view>& f, int line,
                     std::string_view language) {
  std::vector<std::string_view> fields = f;
  PrepEntry entry;
  entry.language = std::string(language);
  if (!fields.empty() && starts_with(fields.back(), "attained=")) {
    auto value = fields.back().substr(9);
    if (value == "true")
      entry.attained = true;
    else if (value == "false")
      entry.attained = false;
    else
      ill_formed("attained must be true or false", line);
    fields.pop_back();
  }
  if (fields.size() < 4) ill_formed("prep line needs lemma, kind and zone", line);
  entry.lemma = std::string(fields[1]);
  auto kind = parse_prep_kind(fields[2]);
  if (!kind) ill_formed("unknown prep kind '" + std::string(fields[2]) + "'", line);
  entry.kind = *kind;

  if (entry.kind == PrepKind::Positional) {
    if (fields.size() != 4)
      ill_formed("positional prep '" + entry.lemma + "' takes no role", line);
    entry.zone = zone_field(fields[3], line);
  } else {
    if (fields.size() != 5)
      ill_formed("directional prep '" + entry.lemma + "' needs <role> <zone>", line);
    entry.role = role_field(fields[3], line);
    entry.zone = zone_field(fields[4], line);
  }
  return entry;
}

template <typename Fn>
auto at_line(int line, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    if (e.line() != 0) throw;
    // Re-tag classifier errors with the offending line.
    std::string what = e.what();
    auto colon = what.find(": ");
    throw Error(e.kind(), colon == std::string::npos ? what : what.substr(colon + 2),
                line);
  }
}

}  // namespace

std::string_view to_string(VerbCategory c) noexcept {
  switch (c) {
    case VerbCategory::CoL: return "CoL";
    case VerbCategory::CoPs: return "CoPs";
    case VerbCategory::ICoPs: return "ICoPs";
    case VerbCategory::CoPtu: return "CoPtu";
  }
  return "?";
}

std::optional<VerbCategory> parse_category(std::string_view name) noexcept {
  if (name == "CoL") return VerbCategory::CoL;
  if (name == "CoPs") return VerbCategory::CoPs;
  if (name == "ICoPs") return VerbCategory::ICoPs;
  if (name == "CoPtu") return VerbCategory::CoPtu;
  return std::nullopt;
}

std::string_view to_string(PrepKind k) noexcept {
  return k == PrepKind::Positional ? "pos" : "dir";
}

std::optional<PrepKind> parse_prep_kind(std::string_view name) noexcept {
  if (name == "pos") return PrepKind::Positional;
  if (name == "dir") return PrepKind::Directional;
  return std::nullopt;
}

std::string_view trim(std::string_view s) noexcept {
  const auto* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_fields(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos <= line.size()) {
    auto next = line.find(sep, pos);
    if (next == std::string_view::npos) next = line.size();
    auto field = trim(line.substr(pos, next - pos));
    if (!field.empty()) out.push_back(field);
    pos = next + 1;
  }
  return out;
}

// ---- class inventory ------------------------------------------------------

ClassInventory::ClassInventory(std::set<ZonePair> transitions, std::set<ZonePair> paths)
    : transitions_(std::move(transitions)), paths_(std::move(paths)) {}

const ClassInventory& ClassInventory::defaults() {
  using Z = Zone;
  static const ClassInventory inventory{
      {
          {Z::Inside, Z::Contact},
          {Z::Inside, Z::Proximal},  // sortir
          {Z::Inside, Z::Distal},    // partir
          {Z::Contact, Z::Inside},
          {Z::Proximal, Z::Inside},  // entrer
          {Z::Distal, Z::Proximal},  // s'approcher
          {Z::Proximal, Z::Contact},  // atterrir
          {Z::Contact, Z::Proximal},
          {Z::Distal, Z::Inside},  // arriver
          {Z::Proximal, Z::Distal},
      },
      {{Z::Contact, Z::Contact}},  // passer, traverser
  };
  return inventory;
}

ClassInventory ClassInventory::parse(std::istream& in) {
  std::set<ZonePair> transitions, paths;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    auto text = strip_comment(raw);
    if (text.empty()) continue;
    auto fields = split_fields(text, text.find('\t') != std::string::npos ? '\t' : ' ');
    if (fields.size() != 3 || (fields[0] != "CLASS" && fields[0] != "PATH"))
      ill_formed("expected 'CLASS|PATH <start> <end>'", line);
    ZonePair pair{zone_field(fields[1], line), zone_field(fields[2], line)};
    if (fields[0] == "CLASS") {
      if (pair.first == pair.second)
        ill_formed("a CLASS must change zone", line);
      transitions.insert(pair);
    } else {
      // The mobile is inside the path location during the motion.
      if (!zones_adjacent(pair.first, Zone::Inside) ||
          !zones_adjacent(pair.second, Zone::Inside))
        ill_formed("PATH zones must be adjacent to inside", line);
      paths.insert(pair);
    }
  }
  return ClassInventory(std::move(transitions), std::move(paths));
}

bool ClassInventory::has_transition(Zone start, Zone end) const {
  return transitions_.count({start, end}) != 0;
}

bool ClassInventory::has_path(Zone start, Zone end) const {
  return paths_.count({start, end}) != 0;
}

std::string class_identifier(Zone start, Zone end) {
  std::string id(to_string(start));
  id.append(kArrow).append(to_string(end));
  return id;
}

std::string classify_verb(const VerbEntry& entry, const ClassInventory& inventory) {
  if (entry.category != VerbCategory::CoL)
    throw Error(ErrorKind::NotACoLVerb, "'" + entry.lemma + "' is " +
                                            std::string(to_string(entry.category)));
  if (!entry.shift)
    throw Error(ErrorKind::IllFormedEntry, "CoL verb '" + entry.lemma + "' has no zones");
  const auto& s = *entry.shift;
  const bool lexicalized = s.lref_role == LrefRole::Medial
                               ? inventory.has_path(s.start, s.end)
                               : s.start != s.end && inventory.has_transition(s.start, s.end);
  if (!lexicalized)
    throw Error(ErrorKind::UnlexicalizedClass,
                "'" + entry.lemma + "' (" + std::string(to_string(s.lref_role)) + ", " +
                    class_identifier(s.start, s.end) + ") is not a configured class");
  return class_identifier(s.start, s.end);
}

std::string classify_prep(const PrepEntry& entry) {
  auto fail = [&](const char* why) {
    throw Error(ErrorKind::IllFormedEntry, "prep '" + entry.lemma + "': " + why);
  };
  if (entry.kind == PrepKind::Positional) {
    if (entry.role) fail("positional entries carry no role");
    if (entry.attained) fail("positional entries carry no attained flag");
    return "pos/" + std::string(to_string(entry.zone));
  }
  if (!entry.role) fail("directional entries need a role");
  if (entry.attained && *entry.role != LrefRole::Final)
    fail("only directional-final entries carry an attained flag");
  return "dir/" + std::string(to_string(*entry.role)) + "/" +
         std::string(to_string(entry.zone));
}

// ---- lexicon ----------------------------------------------------------------

Lexicon::Lexicon(std::string language) : language_(std::move(language)) {}

void Lexicon::add_verb(VerbEntry entry, int line) {
  const std::string lemma = entry.lemma;
  if (!verbs_.try_emplace(lemma, std::move(entry)).second)
    throw Error(ErrorKind::DuplicateLemma, "verb '" + lemma + "' defined twice", line);
}

void Lexicon::add_prep(PrepEntry entry, int line) {
  const std::string lemma = entry.lemma;
  if (!preps_.try_emplace(lemma, std::move(entry)).second)
    throw Error(ErrorKind::DuplicateLemma, "prep '" + lemma + "' defined twice", line);
}

const VerbEntry& lookup_verb(const Lexicon& lexicon, std::string_view lemma) {
  auto it = lexicon.verbs().find(lemma);
  if (it == lexicon.verbs().end())
    throw Error(ErrorKind::UnknownLemma, "no verb '" + std::string(lemma) +
                                             "' in the " + lexicon.language() + " lexicon");
  return it->second;
}

const PrepEntry& lookup_prep(const Lexicon& lexicon, std::string_view lemma) {
  auto it = lexicon.preps().find(lemma);
  if (it == lexicon.preps().end())
    throw Error(ErrorKind::UnknownLemma, "no preposition '" + std::string(lemma) +
                                             "' in the " + lexicon.language() + " lexicon");
  return it->second;
}

Lexicon load_lexicon(std::istream& source, std::string_view language,
                     const ClassInventory& inventory) {
  Lexicon lexicon{std::string(language)};
  std::string raw;
  int line = 0;
  bool seen_entry = false;
  while (std::getline(source, raw)) {
    ++line;
    auto text = strip_comment(raw);
    if (text.empty()) continue;
    auto fields = split_fields(text, '\t');

    if (fields[0] == "LANG") {
      if (fields.size() != 2) ill_formed("expected 'LANG <tag>'", line);
      if (seen_entry) ill_formed("LANG must precede all entries", line);
      if (fields[1] != language)
        ill_formed("file declares LANG " + std::string(fields[1]) + " but " +
                       std::string(language) + " was requested",
                   line);
      continue;
    }
    seen_entry = true;
    if (fields[0] == "V") {
      auto entry = parse_verb(fields, line);
      if (entry.category == VerbCategory::CoL)
        at_line(line, [&] { return classify_verb(entry, inventory); });
      lexicon.add_verb(std::move(entry), line);
    } else if (fields[0] == "P") {
      auto entry = parse_prep(fields, line, language);
      at_line(line, [&] { return classify_prep(entry); });
      lexicon.add_prep(std::move(entry), line);
    } else {
      ill_formed("unknown record type '" + std::string(fields[0]) + "'", line);
    }
  }
  return lexicon;
}

Lexicon load_lexicon_file(const std::filesystem::path& path,
                          const ClassInventory& inventory) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot read " + path.string());
  std::string raw, language;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    auto text = strip_comment(raw);
    if (text.empty()) continue;
    auto fields = split_fields(text, '\t');
    if (fields.size() == 2 && fields[0] == "LANG") language = std::string(fields[1]);
    break;
  }
  if (language.empty())
    throw Error(ErrorKind::IllFormedEntry,
                path.string() + ": first record must be 'LANG <tag>'", line);
  in.clear();
  in.seekg(0);
  return load_lexicon(in, language, inventory);
}

std::string serialize_lexicon(const Lexicon& lexicon) {
  std::ostringstream out;
  out << "LANG\t" << lexicon.language() << '\n';
  for (const auto& [lemma, v] : lexicon.verbs()) {
    out << "V\t" << lemma << '\t' << to_string(v.category);
    if (v.shift)
      out << '\t' << to_string(v.shift->lref_role) << '\t' << to_string(v.shift->start)
          << '\t' << to_string(v.shift->end);
    if (!v.gloss.empty()) out << "\tgloss=" << v.gloss;
    out << '\n';
  }
  for (const auto& [lemma, p] : lexicon.preps()) {
    out << "P\t" << lemma << '\t' << to_string(p.kind);
    if (p.role) out << '\t' << to_string(*p.role);
    out << '\t' << to_string(p.zone);
    if (p.attained) out << "\tattained=" << (*p.attained ? "true" : "false");
    out << '\n';
  }
  return out.str();
}

void LexiconSet::add(Lexicon lexicon) {
  const std::string language = lexicon.language();
  if (!lexicons_.try_emplace(language, std::move(lexicon)).second)
    throw Error(ErrorKind::IllFormedEntry, "two lexicons for language '" + language + "'");
}

const Lexicon& LexiconSet::get(std::string_view language) const {
  auto it = lexicons_.find(language);
  if (it == lexicons_.end())
    throw Error(ErrorKind::UnknownLanguage,
                "no lexicon loaded for language '" + std::string(language) + "'");
  return it->second;
}

bool LexiconSet::contains(std::string_view language) const {
  return lexicons_.find(language) != lexicons_.end();
}

}  // namespace motion
