#include "motion/rules.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "motion/error.hpp"

namespace motion {

namespace {

[[noreturn]] void bad_rule(const std::string& what, int line) {
  throw Error(ErrorKind::IllFormedEntry, what, line);
}

std::optional<bool> parse_yes_no(std::string_view v) {
  if (v == "yes") return true;
  if (v == "no") return false;
  return std::nullopt;
}

std::string_view yes_no(bool b) { return b ? "yes" : "no"; }

Features cell_features(const GridCell& cell, bool zone_compatible, bool attained) {
  Features f;
  f.lref_role = cell.lref_role;
  f.zone_compatible = zone_compatible;
  f.attained = attained;
  switch (cell.slot) {
    case PrepSlot::Positional: f.prep_kind = PrepKind::Positional; break;
    case PrepSlot::DirInitial: f.prep_kind = PrepKind::Directional; f.prep_role = LrefRole::Initial; break;
    case PrepSlot::DirMedial: f.prep_kind = PrepKind::Directional; f.prep_role = LrefRole::Medial; break;
    case PrepSlot::DirFinal: f.prep_kind = PrepKind::Directional; f.prep_role = LrefRole::Final; break;
  }
  return f;
}

}  // namespace

std::string_view to_string(Strength s) noexcept {
  return s == Strength::Strict ? "strict" : "defeasible";
}

bool Guard::holds(const Features& f) const noexcept {
  if (lref_role && *lref_role != f.lref_role) return false;
  if (prep_kind && *prep_kind != f.prep_kind) return false;
  if (prep_role && prep_role != f.prep_role) return false;
  if (zone_compatible && *zone_compatible != f.zone_compatible) return false;
  if (attained && *attained != f.attained) return false;
  return true;
}

std::size_t Guard::atom_count() const noexcept {
  return static_cast<std::size_t>(lref_role.has_value()) + prep_kind.has_value() +
         prep_role.has_value() + zone_compatible.has_value() + attained.has_value();
}

bool Guard::subsumes(const Guard& other) const noexcept {
  auto covered = [](const auto& mine, const auto& theirs) {
    return !mine || mine == theirs;
  };
  return covered(lref_role, other.lref_role) && covered(prep_kind, other.prep_kind) &&
         covered(prep_role, other.prep_role) &&
         covered(zone_compatible, other.zone_compatible) &&
         covered(attained, other.attained);
}

bool outranks(const CompositionRule& a, const CompositionRule& b) noexcept {
  if (a.strength != b.strength) return a.strength == Strength::Strict;
  return a.priority > b.priority;
}

bool same_rank(const CompositionRule& a, const CompositionRule& b) noexcept {
  return a.strength == b.strength && a.priority == b.priority;
}

void RuleBase::add(CompositionRule rule) {
  auto clash = std::find_if(rules_.begin(), rules_.end(),
                            [&](const CompositionRule& r) { return r.id == rule.id; });
  if (clash != rules_.end())
    throw Error(ErrorKind::IllFormedEntry, "rule id '" + rule.id + "' used twice");
  rules_.push_back(std::move(rule));
}

bool RuleBase::remove(std::string_view id) {
  auto it = std::find_if(rules_.begin(), rules_.end(),
                         [&](const CompositionRule& r) { return r.id == id; });
  if (it == rules_.end()) return false;
  rules_.erase(it);
  return true;
}

// ---- text format ------------------------------------------------------------

Guard parse_guard(std::string_view text, int line) {
  Guard g;
  text = trim(text);
  if (text == "*") return g;
  for (auto atom : split_fields(text, ',')) {
    auto eq = atom.find('=');
    if (eq == std::string_view::npos) bad_rule("guard atom without '='", line);
    auto key = trim(atom.substr(0, eq));
    auto value = trim(atom.substr(eq + 1));
    bool ok = true;
    if (key == "lrefrole") {
      auto r = parse_role(value);
      ok = r.has_value() && !g.lref_role;
      g.lref_role = r;
    } else if (key == "prepkind") {
      auto k = parse_prep_kind(value);
      ok = k.has_value() && !g.prep_kind;
      g.prep_kind = k;
    } else if (key == "preprole") {
      auto r = parse_role(value);
      ok = r.has_value() && !g.prep_role;
      g.prep_role = r;
    } else if (key == "zonecompat") {
      auto b = parse_yes_no(value);
      ok = b.has_value() && !g.zone_compatible;
      g.zone_compatible = b;
    } else if (key == "attained") {
      auto b = parse_yes_no(value);
      ok = b.has_value() && !g.attained;
      g.attained = b;
    } else {
      ok = false;
    }
    if (!ok) bad_rule("bad guard atom '" + std::string(atom) + "'", line);
  }
  return g;
}

std::string format_guard(const Guard& g) {
  std::vector<std::string> atoms;
  if (g.lref_role) atoms.push_back("lrefrole=" + std::string(to_string(*g.lref_role)));
  if (g.prep_kind) atoms.push_back("prepkind=" + std::string(to_string(*g.prep_kind)));
  if (g.prep_role) atoms.push_back("preprole=" + std::string(to_string(*g.prep_role)));
  if (g.zone_compatible)
    atoms.push_back("zonecompat=" + std::string(yes_no(*g.zone_compatible)));
  if (g.attained) atoms.push_back("attained=" + std::string(yes_no(*g.attained)));
  if (atoms.empty()) return "*";
  std::string out = atoms.front();
  for (std::size_t i = 1; i < atoms.size(); ++i) out.append(",").append(atoms[i]);
  return out;
}

Conclusion parse_conclusion(std::string_view text, int line) {
  auto words = split_fields(text, ' ');
  if (words.empty()) bad_rule("empty conclusion", line);
  Conclusion c;
  auto head = words.front();
  if (head == "identify") {
    c.kind = ConclusionKind::Identify;
  } else if (head.substr(0, 5) == "bind(" && head.back() == ')') {
    auto phase = parse_phase(head.substr(5, head.size() - 6));
    if (!phase) bad_rule("bad phase in '" + std::string(head) + "'", line);
    c.kind = ConclusionKind::Bind;
    c.phase = *phase;
  } else {
    bad_rule("conclusion must be identify or bind(<phase>)", line);
  }
  for (std::size_t i = 1; i < words.size(); ++i) {
    auto w = words[i];
    if (w.substr(0, 5) == "zone=") {
      auto z = parse_zone(w.substr(5));
      if (!z)
        throw Error(ErrorKind::UnknownZoneName,
                    "unknown zone name '" + std::string(w.substr(5)) + "'", line);
      c.zone = z;
    } else if (w.substr(0, 5) == "prov=") {
      c.provenance = parse_provenance(w.substr(5));
      if (!c.provenance) bad_rule("bad provenance '" + std::string(w) + "'", line);
    } else {
      bad_rule("unexpected conclusion option '" + std::string(w) + "'", line);
    }
  }
  return c;
}

std::string format_conclusion(const Conclusion& c) {
  std::string out = c.kind == ConclusionKind::Identify
                        ? std::string("identify")
                        : "bind(" + std::string(to_string(c.phase)) + ")";
  if (c.zone) out.append(" zone=").append(to_string(*c.zone));
  if (c.provenance) out.append(" prov=").append(to_string(*c.provenance));
  return out;
}

RuleBase load_rulebase(std::istream& source) {
  RuleBase base;
  std::string raw;
  int line = 0;
  while (std::getline(source, raw)) {
    ++line;
    auto text = trim(std::string_view(raw).substr(0, raw.find('#')));
    if (text.empty()) continue;
    auto fields = split_fields(text, '\t');
    if (fields[0] == "VERSION") {
      if (fields.size() != 2) bad_rule("expected 'VERSION <text>'", line);
      base = RuleBase(std::string(fields[1]));
      continue;
    }
    if (fields[0] != "R") bad_rule("unknown record type '" + std::string(fields[0]) + "'", line);
    if (fields.size() != 6) bad_rule("rule needs id, strength, priority, guard, conclusion", line);

    CompositionRule rule;
    rule.id = std::string(fields[1]);
    if (fields[2] == "strict")
      rule.strength = Strength::Strict;
    else if (fields[2] == "defeasible")
      rule.strength = Strength::Defeasible;
    else
      bad_rule("strength must be strict or defeasible", line);
    auto p = fields[3];
    auto [ptr, ec] = std::from_chars(p.data(), p.data() + p.size(), rule.priority);
    if (ec != std::errc{} || ptr != p.data() + p.size())
      bad_rule("priority must be an integer", line);
    rule.guard = parse_guard(fields[4], line);
    rule.conclusion = parse_conclusion(fields[5], line);
    try {
      base.add(std::move(rule));
    } catch (const Error& e) {
      throw Error(e.kind(), "rule id '" + std::string(fields[1]) + "' used twice", line);
    }
  }
  return base;
}

RuleBase load_rulebase_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot read " + path);
  return load_rulebase(in);
}

std::string serialize_rulebase(const RuleBase& rules) {
  std::ostringstream out;
  if (!rules.version().empty()) out << "VERSION\t" << rules.version() << '\n';
  for (const auto& r : rules.rules())
    out << "R\t" << r.id << '\t' << to_string(r.strength) << '\t' << r.priority << '\t'
        << format_guard(r.guard) << '\t' << format_conclusion(r.conclusion) << '\n';
  return out.str();
}

// ---- selection --------------------------------------------------------------

std::vector<CompositionRule> applicable_rules(const Features& features,
                                              const RuleBase& rules) {
  std::vector<CompositionRule> out;
  for (const auto& r : rules.rules())
    if (r.guard.holds(features)) out.push_back(r);
  std::stable_sort(out.begin(), out.end(), outranks);
  return out;
}

const CompositionRule& resolve(const std::vector<CompositionRule>& applicable) {
  if (applicable.empty())
    throw Error(ErrorKind::EmptyApplicableSet, "no rule applies");
  if (applicable.size() > 1 && same_rank(applicable[0], applicable[1]))
    throw Error(ErrorKind::AmbiguousRuleBase,
                "rules '" + applicable[0].id + "' and '" + applicable[1].id + "' tie at " +
                    std::string(to_string(applicable[0].strength)) + " priority " +
                    std::to_string(applicable[0].priority));
  return applicable.front();
}

// ---- lint -------------------------------------------------------------------

std::string_view to_string(PrepSlot s) noexcept {
  switch (s) {
    case PrepSlot::Positional: return "pos";
    case PrepSlot::DirInitial: return "dir-initial";
    case PrepSlot::DirMedial: return "dir-medial";
    case PrepSlot::DirFinal: return "dir-final";
  }
  return "?";
}

std::string format_cell(const GridCell& cell) {
  return "lrefrole=" + std::string(to_string(cell.lref_role)) + " x " +
         std::string(to_string(cell.slot));
}

LintReport lint_rulebase(const RuleBase& rules) {
  LintReport report;
  for (LrefRole role : kAllRoles) {
    for (PrepSlot slot : kAllPrepSlots) {
      const GridCell cell{role, slot};
      bool gap = false;
      std::optional<CellTie> tie;
      const std::vector<bool> attained_values =
          slot == PrepSlot::DirFinal ? std::vector<bool>{true, false} : std::vector<bool>{true};
      for (bool compat : {true, false}) {
        for (bool attained : attained_values) {
          const auto features = cell_features(cell, compat, attained);
          const auto applicable = applicable_rules(features, rules);
          if (applicable.empty()) gap = true;
          if (!tie && applicable.size() > 1 && same_rank(applicable[0], applicable[1]))
            tie = CellTie{cell, features, applicable[0].id, applicable[1].id};
        }
      }
      if (gap) report.gaps.push_back(cell);
      if (tie) report.ties.push_back(*tie);
    }
  }
  return report;
}

std::string render_lint(const LintReport& report) {
  std::ostringstream out;
  out << "rulebase grid: " << kAllRoles.size() * kAllPrepSlots.size() << " cells, "
      << report.gaps.size() << " gap(s), " << report.ties.size() << " possible tie(s)\n";
  for (const auto& cell : report.gaps) out << "  gap  " << format_cell(cell) << '\n';
  for (const auto& t : report.ties)
    out << "  tie  " << format_cell(t.cell) << " zonecompat=" << yes_no(t.features.zone_compatible)
        << " attained=" << yes_no(t.features.attained) << ": " << t.first << " / " << t.second
        << '\n';
  return out.str();
}

}  // namespace motion
