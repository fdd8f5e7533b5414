#include "motion/trace.hpp"

#include <algorithm>
#include <sstream>

namespace motion {

std::string_view to_string(Provenance p) noexcept {
  switch (p) {
    case Provenance::Verb: return "verb";
    case Provenance::Preposition: return "prep";
    case Provenance::Interaction: return "interaction";
  }
  return "?";
}

std::string_view display_name(Provenance p) noexcept {
  switch (p) {
    case Provenance::Verb: return "Verb";
    case Provenance::Preposition: return "Preposition";
    case Provenance::Interaction: return "Interaction";
  }
  return "?";
}

std::optional<Provenance> parse_provenance(std::string_view name) noexcept {
  if (name == "verb") return Provenance::Verb;
  if (name == "prep") return Provenance::Preposition;
  if (name == "interaction") return Provenance::Interaction;
  return std::nullopt;
}

std::string_view to_string(BindingKind b) noexcept {
  return b == BindingKind::Lref ? "lref" : "ground";
}

std::optional<BindingKind> parse_binding(std::string_view name) noexcept {
  if (name == "lref") return BindingKind::Lref;
  if (name == "ground") return BindingKind::Ground;
  return std::nullopt;
}

std::string_view to_string(TraceInvariant inv) noexcept {
  switch (inv) {
    case TraceInvariant::Continuity: return "continuity";
    case TraceInvariant::MultipleLref: return "multiple-lref";
    case TraceInvariant::MultipleGround: return "multiple-ground";
  }
  return "?";
}

SpatiotemporalTrace::SpatiotemporalTrace(std::string mobile)
    : mobile_(std::move(mobile)) {}

void SpatiotemporalTrace::add_location(const std::string& id) {
  locations_.try_emplace(id);
}

void SpatiotemporalTrace::bind(const std::string& location, BindingKind kind,
                               LrefRole role) {
  auto& bindings = locations_[location];
  const RoleBinding b{kind, role};
  if (std::find(bindings.begin(), bindings.end(), b) == bindings.end()) {
    bindings.push_back(b);
    std::sort(bindings.begin(), bindings.end());
  }
}

bool SpatiotemporalTrace::assign(const std::string& location, Phase phase,
                                 Zone zone, Provenance provenance) {
  add_location(location);
  auto [it, inserted] =
      assignments_.try_emplace({location, phase}, Assignment{zone, provenance});
  return inserted || it->second.zone == zone;
}

std::optional<Assignment> SpatiotemporalTrace::at(std::string_view location,
                                                  Phase phase) const {
  auto it = assignments_.find({std::string(location), phase});
  if (it == assignments_.end()) return std::nullopt;
  return it->second;
}

bool SpatiotemporalTrace::has_binding(std::string_view location,
                                      BindingKind kind) const {
  auto it = locations_.find(location);
  if (it == locations_.end()) return false;
  return std::any_of(it->second.begin(), it->second.end(),
                     [kind](const RoleBinding& b) { return b.kind == kind; });
}

std::optional<std::string> SpatiotemporalTrace::bound_as(BindingKind kind) const {
  for (const auto& [id, bindings] : locations_)
    for (const auto& b : bindings)
      if (b.kind == kind) return id;
  return std::nullopt;
}

std::vector<TraceRecord> SpatiotemporalTrace::records() const {
  std::vector<TraceRecord> out;
  out.reserve(assignments_.size());
  for (const auto& [key, a] : assignments_)
    out.push_back({key.first, key.second, a.zone, a.provenance});
  return out;
}

std::vector<RoleRecord> SpatiotemporalTrace::roles() const {
  std::vector<RoleRecord> out;
  for (const auto& [id, bindings] : locations_)
    for (const auto& b : bindings) out.push_back({id, b.kind, b.role});
  return out;
}

ValidationResult validate_trace(const SpatiotemporalTrace& trace) {
  ValidationResult result;

  std::vector<std::string> lrefs, grounds;
  for (const auto& [id, bindings] : trace.locations()) {
    bool lref = false, ground = false;
    for (const auto& b : bindings) {
      lref |= b.kind == BindingKind::Lref;
      ground |= b.kind == BindingKind::Ground;
    }
    if (lref) lrefs.push_back(id);
    if (ground) grounds.push_back(id);
  }
  if (lrefs.size() > 1)
    result.violations.push_back({TraceInvariant::MultipleLref, lrefs[1], {},
                                 "locations '" + lrefs[0] + "' and '" +
                                     lrefs[1] + "' are both bound as lref"});
  if (grounds.size() > 1)
    result.violations.push_back({TraceInvariant::MultipleGround, grounds[1], {},
                                 "locations '" + grounds[0] + "' and '" +
                                     grounds[1] + "' are both bound as ground"});

  // Only consecutive *defined* phases are checked; an undefined During
  // phase connects any Pre/Post pair.
  for (const auto& [id, bindings] : trace.locations()) {
    std::optional<std::pair<Phase, Zone>> previous;
    for (Phase phase : kAllPhases) {
      auto a = trace.at(id, phase);
      if (!a) continue;
      if (previous) {
        const bool through_during =
            phase == Phase::Post && previous->first == Phase::Pre;
        if (!through_during && !zones_adjacent(previous->second, a->zone)) {
          std::ostringstream msg;
          msg << "location '" << id << "' jumps from "
              << to_string(previous->second) << " at "
              << to_string(previous->first) << " to " << to_string(a->zone)
              << " at " << to_string(phase) << " (distance "
              << zone_distance(previous->second, a->zone) << ")";
          result.violations.push_back(
              {TraceInvariant::Continuity, id, {previous->first, phase}, msg.str()});
        }
      }
      previous = {phase, a->zone};
    }
  }
  return result;
}

std::string format_record(const TraceRecord& r) {
  std::string line = r.location;
  line.append(" ").append(to_string(r.phase));
  line.append(" ").append(to_string(r.zone));
  line.append(" ").append(to_string(r.provenance));
  return line;
}

std::string format_role(const RoleRecord& r) {
  std::string line = "ROLE ";
  line.append(r.location);
  line.append(" ").append(to_string(r.kind));
  line.append(" ").append(to_string(r.role));
  return line;
}

std::string serialize_trace(const SpatiotemporalTrace& trace) {
  std::string out;
  for (const auto& role : trace.roles()) out.append(format_role(role)).append("\n");
  for (const auto& rec : trace.records()) out.append(format_record(rec)).append("\n");
  return out;
}

}  // namespace motion
