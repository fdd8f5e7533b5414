#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "motion/lexicon.hpp"
#include "motion/rules.hpp"
#include "motion/trace.hpp"

namespace motion {

struct MotionComplex {
  std::string verb;
  std::string prep;
  std::string ground;
  std::string mobile = "mobile";
  std::string language;

  bool operator==(const MotionComplex&) const = default;
};

enum class DefeatReason : std::uint8_t { LowerPriority, GuardSubsumed, Inconsistent };

std::string_view to_string(DefeatReason r) noexcept;

struct DefeatedRule {
  std::string id;
  DefeatReason reason;
  bool operator==(const DefeatedRule&) const = default;
};

struct Derivation {
  MotionComplex complex;
  Features features;
  CompositionRule fired;
  std::vector<DefeatedRule> defeated;
  SpatiotemporalTrace trace;
};

// Name given to a verb's lref when it is not identified with the ground.
std::string implicit_lref_id(std::string_view verb_lemma);

// The trace a CoL verb produces on its own, with its lref at `lref_id`.
SpatiotemporalTrace verb_projection(const VerbEntry& verb, const std::string& lref_id,
                                    const std::string& mobile = "mobile");

// Phase-anchored constraints a preposition asserts about its ground on its
// own. Positional prepositions assert a static relation only, so none.
std::vector<std::pair<Phase, Zone>> prep_projection(const PrepEntry& prep);

// Where the preposition's zone lands when its ground is the lref: the
// end state for positional entries, the role phase for directional ones.
// Unattained directional-final entries only commit to proximal.
std::pair<Phase, Zone> prep_anchor(const PrepEntry& prep);

// zonecompat is true when the prep anchor merges into the verb projection
// without a zone clash or a continuity break.
Features features_of(const VerbEntry& verb, const PrepEntry& prep);

// Verb if the verb alone yields the tuple on a location bound as lref,
// Preposition if the prep alone yields it on the ground, else Interaction.
Provenance infer_provenance(const SpatiotemporalTrace& trace, const std::string& location,
                            Phase phase, Zone zone, const VerbEntry& verb,
                            const PrepEntry& prep);

Derivation compose(const MotionComplex& complex, const Lexicon& lexicon,
                   const RuleBase& rules);
Derivation compose(const MotionComplex& complex, const LexiconSet& lexicons,
                   const RuleBase& rules);

std::string explain(const Derivation& derivation);

}  // namespace motion
