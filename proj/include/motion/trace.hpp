#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "motion/zone.hpp"

namespace motion {

// Which constituent an assignment comes from. Interaction marks information
// carried by neither the verb entry nor the preposition entry alone.
enum class Provenance : std::uint8_t { Verb, Preposition, Interaction };

std::string_view to_string(Provenance p) noexcept;  // "verb", "prep", "interaction"
std::string_view display_name(Provenance p) noexcept;  // "Verb", "Preposition", ...
std::optional<Provenance> parse_provenance(std::string_view name) noexcept;

enum class BindingKind : std::uint8_t { Lref, Ground };

std::string_view to_string(BindingKind b) noexcept;  // "lref", "ground"
std::optional<BindingKind> parse_binding(std::string_view name) noexcept;

struct RoleBinding {
  BindingKind kind;
  LrefRole role;
  auto operator<=>(const RoleBinding&) const = default;
};

struct Assignment {
  Zone zone;
  Provenance provenance;
  bool operator==(const Assignment&) const = default;
};

// One (location, phase, zone, provenance) tuple.
struct TraceRecord {
  std::string location;
  Phase phase;
  Zone zone;
  Provenance provenance;
  auto operator<=>(const TraceRecord&) const = default;
};

struct RoleRecord {
  std::string location;
  BindingKind kind;
  LrefRole role;
  auto operator<=>(const RoleRecord&) const = default;
};

class SpatiotemporalTrace {
 public:
  using LocationMap = std::map<std::string, std::vector<RoleBinding>, std::less<>>;
  using AssignmentMap = std::map<std::pair<std::string, Phase>, Assignment>;

  explicit SpatiotemporalTrace(std::string mobile = "mobile");

  const std::string& mobile() const noexcept { return mobile_; }
  const LocationMap& locations() const noexcept { return locations_; }
  const AssignmentMap& assignments() const noexcept { return assignments_; }

  void add_location(const std::string& id);
  void bind(const std::string& location, BindingKind kind, LrefRole role);

  // Returns false, leaving the trace untouched, when (location, phase)
  // already carries a different zone. Re-asserting the same zone keeps the
  // first provenance.
  bool assign(const std::string& location, Phase phase, Zone zone,
              Provenance provenance);

  std::optional<Assignment> at(std::string_view location, Phase phase) const;
  bool has_binding(std::string_view location, BindingKind kind) const;
  std::optional<std::string> bound_as(BindingKind kind) const;

  // Key-ordered: location name, then phase order.
  std::vector<TraceRecord> records() const;
  std::vector<RoleRecord> roles() const;

  bool operator==(const SpatiotemporalTrace&) const = default;

 private:
  std::string mobile_;
  LocationMap locations_;
  AssignmentMap assignments_;
};

enum class TraceInvariant : std::uint8_t {
  Continuity,
  MultipleLref,
  MultipleGround,
};

std::string_view to_string(TraceInvariant inv) noexcept;

struct Violation {
  TraceInvariant invariant;
  std::string location;
  std::vector<Phase> phases;
  std::string message;
};

struct ValidationResult {
  std::vector<Violation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

ValidationResult validate_trace(const SpatiotemporalTrace& trace);

// "ROLE <location> <lref|ground> <role>" lines, then one
// "<location> <phase> <zone> <provenance>" line per assignment.
std::string serialize_trace(const SpatiotemporalTrace& trace);
std::string format_record(const TraceRecord& record);
std::string format_role(const RoleRecord& role);

}  // namespace motion
