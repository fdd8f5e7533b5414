#include "motion/compose.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "motion/error.hpp"

namespace motion {

namespace {

const ZoneShift& shift_of(const VerbEntry& verb) {
  if (verb.category != VerbCategory::CoL || !verb.shift)
    throw Error(ErrorKind::NotACoLVerb, "'" + verb.lemma + "' is " +
                                            std::string(to_string(verb.category)) +
                                            ", only CoL verbs compose");
  return *verb.shift;
}

void project_verb_onto(SpatiotemporalTrace& trace, const ZoneShift& shift,
                       const std::string& location) {
  trace.bind(location, BindingKind::Lref, shift.lref_role);
  trace.assign(location, Phase::Pre, shift.start, Provenance::Verb);
  if (shift.lref_role == LrefRole::Medial)
    trace.assign(location, Phase::During, Zone::Inside, Provenance::Verb);
  trace.assign(location, Phase::Post, shift.end, Provenance::Verb);
}

// Applies one rule's conclusion; nullopt when the result is inconsistent.
std::optional<SpatiotemporalTrace> conclude(const CompositionRule& rule,
                                            const MotionComplex& complex,
                                            const VerbEntry& verb, const PrepEntry& prep) {
  const ZoneShift& shift = *verb.shift;
  SpatiotemporalTrace trace(complex.mobile);
  const auto& c = rule.conclusion;

  if (c.kind == ConclusionKind::Identify) {
    project_verb_onto(trace, shift, complex.ground);
    trace.bind(complex.ground, BindingKind::Ground, shift.lref_role);
    auto [phase, zone] = prep_anchor(prep);
    if (c.zone) zone = *c.zone;
    const auto prov = c.provenance.value_or(
        infer_provenance(trace, complex.ground, phase, zone, verb, prep));
    if (!trace.assign(complex.ground, phase, zone, prov)) return std::nullopt;
  } else {
    const std::string lref = implicit_lref_id(verb.lemma);
    if (lref == complex.ground) return std::nullopt;
    project_verb_onto(trace, shift, lref);
    trace.bind(complex.ground, BindingKind::Ground, role_of(c.phase));
    const Zone zone = c.zone.value_or(prep_anchor(prep).second);
    const auto prov = c.provenance.value_or(
        infer_provenance(trace, complex.ground, c.phase, zone, verb, prep));
    if (!trace.assign(complex.ground, c.phase, zone, prov)) return std::nullopt;
  }

  if (!validate_trace(trace).ok()) return std::nullopt;
  return trace;
}

std::string cell_text(const std::optional<Assignment>& a) {
  if (!a) return "-";
  return std::string(to_string(a->zone)) + " [" + std::string(display_name(a->provenance)) + "]";
}

}  // namespace

std::string_view to_string(DefeatReason r) noexcept {
  switch (r) {
    case DefeatReason::LowerPriority: return "lower priority";
    case DefeatReason::GuardSubsumed: return "guard subsumed";
    case DefeatReason::Inconsistent: return "inconsistent conclusion";
  }
  return "?";
}

std::string implicit_lref_id(std::string_view verb_lemma) {
  return "lref#" + std::string(verb_lemma);
}

SpatiotemporalTrace verb_projection(const VerbEntry& verb, const std::string& lref_id,
                                    const std::string& mobile) {
  SpatiotemporalTrace trace(mobile);
  project_verb_onto(trace, shift_of(verb), lref_id);
  return trace;
}

std::pair<Phase, Zone> prep_anchor(const PrepEntry& prep) {
  if (prep.kind == PrepKind::Positional) return {Phase::Post, prep.zone};
  const Phase phase = phase_of(prep.role.value_or(LrefRole::Final));
  const bool unattained = prep.role == LrefRole::Final && !prep.reaches_zone();
  return {phase, unattained ? Zone::Proximal : prep.zone};
}

std::vector<std::pair<Phase, Zone>> prep_projection(const PrepEntry& prep) {
  if (prep.kind == PrepKind::Positional) return {};
  return {prep_anchor(prep)};
}

Features features_of(const VerbEntry& verb, const PrepEntry& prep) {
  const ZoneShift& shift = shift_of(verb);
  Features f;
  f.lref_role = shift.lref_role;
  f.prep_kind = prep.kind;
  f.prep_role = prep.kind == PrepKind::Directional ? prep.role : std::nullopt;
  f.attained = prep.reaches_zone();

  const std::string probe = "lref";
  SpatiotemporalTrace merged;
  project_verb_onto(merged, shift, probe);
  const auto [phase, zone] = prep_anchor(prep);
  f.zone_compatible = merged.assign(probe, phase, zone, Provenance::Preposition) &&
                      validate_trace(merged).ok();
  return f;
}

Provenance infer_provenance(const SpatiotemporalTrace& trace, const std::string& location,
                            Phase phase, Zone zone, const VerbEntry& verb,
                            const PrepEntry& prep) {
  if (trace.has_binding(location, BindingKind::Lref)) {
    const auto own = verb_projection(verb, location).at(location, phase);
    if (own && own->zone == zone) return Provenance::Verb;
  }
  if (trace.has_binding(location, BindingKind::Ground)) {
    for (const auto& [p, z] : prep_projection(prep))
      if (p == phase && z == zone) return Provenance::Preposition;
  }
  return Provenance::Interaction;
}

Derivation compose(const MotionComplex& complex, const Lexicon& lexicon,
                   const RuleBase& rules) {
  if (complex.verb.empty() || complex.prep.empty() || complex.ground.empty() ||
      complex.mobile.empty() || complex.language.empty())
    throw Error(ErrorKind::IllFormedEntry, "motion complex fields must be nonempty");
  if (!lexicon.language().empty() && lexicon.language() != complex.language)
    throw Error(ErrorKind::UnknownLanguage, "complex is '" + complex.language +
                                                "' but the lexicon is '" +
                                                lexicon.language() + "'");

  const VerbEntry& verb = lookup_verb(lexicon, complex.verb);
  shift_of(verb);
  const PrepEntry& prep = lookup_prep(lexicon, complex.prep);

  Derivation d;
  d.complex = complex;
  d.features = features_of(verb, prep);
  const auto applicable = applicable_rules(d.features, rules);
  if (applicable.empty())
    throw Error(ErrorKind::EmptyApplicableSet,
                "no rule applies to " + complex.verb + " + " + complex.prep);

  std::size_t fired = applicable.size();
  for (std::size_t i = 0; i < applicable.size(); ++i) {
    resolve(std::vector<CompositionRule>(applicable.begin() + static_cast<std::ptrdiff_t>(i),
                                         applicable.end()));
    if (auto trace = conclude(applicable[i], complex, verb, prep)) {
      d.trace = std::move(*trace);
      fired = i;
      break;
    }
    d.defeated.push_back({applicable[i].id, DefeatReason::Inconsistent});
  }
  if (fired == applicable.size())
    throw Error(ErrorKind::Infelicitous, complex.verb + " + " + complex.prep + " + " +
                                             complex.ground +
                                             ": no applicable rule yields a consistent trace");

  d.fired = applicable[fired];
  for (std::size_t i = fired + 1; i < applicable.size(); ++i) {
    const auto& r = applicable[i];
    const bool subsumed = r.guard.subsumes(d.fired.guard) && r.guard != d.fired.guard;
    d.defeated.push_back(
        {r.id, subsumed ? DefeatReason::GuardSubsumed : DefeatReason::LowerPriority});
  }
  return d;
}

Derivation compose(const MotionComplex& complex, const LexiconSet& lexicons,
                   const RuleBase& rules) {
  return compose(complex, lexicons.get(complex.language), rules);
}

std::string explain(const Derivation& d) {
  std::ostringstream out;
  const auto& c = d.complex;
  const auto& f = d.features;
  out << "complex: " << c.verb << " + " << c.prep << " + " << c.ground << " [" << c.language
      << "], mobile " << d.trace.mobile() << '\n';
  out << "features: lrefrole=" << to_string(f.lref_role) << " prepkind=" << to_string(f.prep_kind);
  if (f.prep_role) out << " preprole=" << to_string(*f.prep_role);
  out << " zonecompat=" << (f.zone_compatible ? "yes" : "no")
      << " attained=" << (f.attained ? "yes" : "no") << '\n';
  out << "fired: " << d.fired.id << " (" << to_string(d.fired.strength) << ", priority "
      << d.fired.priority << ") " << format_conclusion(d.fired.conclusion) << '\n';
  if (d.defeated.empty()) {
    out << "defeated: none\n";
  } else {
    out << "defeated:\n";
    for (const auto& r : d.defeated) out << "  " << r.id << ": " << to_string(r.reason) << '\n';
  }

  out << "roles:\n";
  for (const auto& [id, bindings] : d.trace.locations()) {
    const bool lref = d.trace.has_binding(id, BindingKind::Lref);
    const bool ground = d.trace.has_binding(id, BindingKind::Ground);
    const LrefRole role = bindings.front().role;
    out << "  " << id << ": ";
    if (lref && ground)
      out << "ground identified with lref (" << to_string(role) << " location)";
    else if (lref)
      out << "implicit lref (" << to_string(role) << " location)";
    else
      out << "ground bound as " << to_string(role) << " location";
    out << '\n';
  }

  std::size_t width = 8;
  for (const auto& [id, _] : d.trace.locations()) width = std::max(width, id.size());
  width += 2;
  constexpr int kCol = 24;
  out << "zones:\n  " << std::left << std::setw(static_cast<int>(width)) << "location";
  for (Phase p : kAllPhases) out << std::setw(kCol) << to_string(p);
  out << '\n';
  for (const auto& [id, _] : d.trace.locations()) {
    out << "  " << std::setw(static_cast<int>(width)) << id;
    for (Phase p : kAllPhases) out << std::setw(kCol) << cell_text(d.trace.at(id, p));
    out << '\n';
  }

  out << "records:\n" << serialize_trace(d.trace);
  return out.str();
}

}  // namespace motion
