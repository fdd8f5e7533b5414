#pragma once

// Four-zone qualitative structure around a location, motion phases, and the
// lref roles that anchor a verb's reference location to a phase.

#include <array>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string_view>
#include <vector>

namespace motion {

// Linear adjacency order: Inside < Contact < Proximal < Distal.
enum class Zone : std::uint8_t { Inside, Contact, Proximal, Distal };

enum class Phase : std::uint8_t { Pre, During, Post };

enum class LrefRole : std::uint8_t { Initial, Medial, Final };

inline constexpr std::array<Zone, 4> kAllZones{Zone::Inside, Zone::Contact,
                                               Zone::Proximal, Zone::Distal};
inline constexpr std::array<Phase, 3> kAllPhases{Phase::Pre, Phase::During,
                                                 Phase::Post};
inline constexpr std::array<LrefRole, 3> kAllRoles{
    LrefRole::Initial, LrefRole::Medial, LrefRole::Final};

constexpr int zone_index(Zone z) noexcept { return static_cast<int>(z); }

constexpr int zone_distance(Zone a, Zone b) noexcept {
  const int d = zone_index(a) - zone_index(b);
  return d < 0 ? -d : d;
}

constexpr bool zones_adjacent(Zone a, Zone b) noexcept {
  return zone_distance(a, b) <= 1;
}

// Monotone walk from start to end, both inclusive.
std::vector<Zone> interpolate_zones(Zone start, Zone end);

constexpr Phase phase_of(LrefRole role) noexcept {
  switch (role) {
    case LrefRole::Initial: return Phase::Pre;
    case LrefRole::Medial: return Phase::During;
    case LrefRole::Final: return Phase::Post;
  }
  return Phase::Pre;
}

constexpr LrefRole role_of(Phase phase) noexcept {
  switch (phase) {
    case Phase::Pre: return LrefRole::Initial;
    case Phase::During: return LrefRole::Medial;
    case Phase::Post: return LrefRole::Final;
  }
  return LrefRole::Initial;
}

std::string_view to_string(Zone z) noexcept;
std::string_view to_string(Phase p) noexcept;
std::string_view to_string(LrefRole r) noexcept;

// Exact, case-sensitive names ("inside", "pre", "initial", ...).
std::optional<Zone> parse_zone(std::string_view name) noexcept;
std::optional<Phase> parse_phase(std::string_view name) noexcept;
std::optional<LrefRole> parse_role(std::string_view name) noexcept;

}  // namespace motion
