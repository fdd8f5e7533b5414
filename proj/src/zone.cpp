#include "motion/zone.hpp"

namespace motion {

namespace {

constexpr std::array<std::string_view, 4> kZoneNames{"inside", "contact",
                                                     "proximal", "distal"};
constexpr std::array<std::string_view, 3> kPhaseNames{"pre", "during", "post"};
constexpr std::array<std::string_view, 3> kRoleNames{"initial", "medial",
                                                     "final"};

template <typename Enum, std::size_t N>
std::optional<Enum> lookup(const std::array<std::string_view, N>& names,
                           std::string_view name) noexcept {
  for (std::size_t i = 0; i < N; ++i)
    if (names[i] == name) return static_cast<Enum>(i);
  return std::nullopt;
}

}  // namespace

std::vector<Zone> interpolate_zones(Zone start, Zone end) {
  std::vector<Zone> walk;
  walk.reserve(static_cast<std::size_t>(zone_distance(start, end)) + 1);
  const int step = zone_index(end) >= zone_index(start) ? 1 : -1;
  for (int i = zone_index(start);; i += step) {
    walk.push_back(static_cast<Zone>(i));
    if (i == zone_index(end)) break;
  }
  return walk;
}

std::string_view to_string(Zone z) noexcept {
  return kZoneNames[static_cast<std::size_t>(z)];
}
std::string_view to_string(Phase p) noexcept {
  return kPhaseNames[static_cast<std::size_t>(p)];
}
std::string_view to_string(LrefRole r) noexcept {
  return kRoleNames[static_cast<std::size_t>(r)];
}

std::optional<Zone> parse_zone(std::string_view name) noexcept {
  return lookup<Zone>(kZoneNames, name);
}
std::optional<Phase> parse_phase(std::string_view name) noexcept {
  return lookup<Phase>(kPhaseNames, name);
}
std::optional<LrefRole> parse_role(std::string_view name) noexcept {
  return lookup<LrefRole>(kRoleNames, name);
}

}  // namespace motion
