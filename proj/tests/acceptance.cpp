// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "motion/compose.hpp"
#include "motion/error.hpp"
#include "support.hpp"

using namespace motion;
using motion::testing::compose_seed;
using motion::testing::seed_en;
using motion::testing::seed_fr;
using motion::testing::seed_lexicons;
using motion::testing::shipped_rules;

namespace {

struct Check {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

using Records = std::vector<TraceRecord>;
using Roles = std::vector<RoleRecord>;

// Zone tuples and roles with location names abstracted to their role, so
// traces of the two languages can be compared.
struct Shape {
  std::set<std::tuple<std::string, Phase, Zone>> tuples;
  std::set<std::tuple<std::string, BindingKind, LrefRole>> roles;
  bool operator==(const Shape&) const = default;
};

Shape shape_of(const Derivation& d) {
  auto name = [&](const std::string& loc) {
    if (loc == d.complex.ground) return std::string("<ground>");
    if (loc == implicit_lref_id(d.complex.verb)) return std::string("<lref>");
    return loc;
  };
  Shape s;
  for (const auto& r : d.trace.records()) s.tuples.insert({name(r.location), r.phase, r.zone});
  for (const auto& r : d.trace.roles()) s.roles.insert({name(r.location), r.kind, r.role});
  return s;
}

// Tuples present in `a` but not in `b`, by (location, phase, zone).
std::set<std::tuple<std::string, Phase, Zone>> tuple_diff(const Shape& a, const Shape& b) {
  std::set<std::tuple<std::string, Phase, Zone>> out;
  std::set_difference(a.tuples.begin(), a.tuples.end(), b.tuples.begin(), b.tuples.end(),
                      std::inserter(out, out.end()));
  return out;
}

// 1. sortir + dans + jardin
void worked_example(Check& c) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto d = compose_seed("sortir", "dans", "jardin", "fr");
  const auto elapsed = std::chrono::steady_clock::now() - t0;
  c.expect(d.trace.records() ==
               Records{{"jardin", Phase::Post, Zone::Inside, Provenance::Interaction},
                       {"lref#sortir", Phase::Pre, Zone::Inside, Provenance::Verb},
                       {"lref#sortir", Phase::Post, Zone::Proximal, Provenance::Verb}},
           "tuples:\n" + serialize_trace(d.trace));
  c.expect(d.trace.roles() == Roles{{"jardin", BindingKind::Ground, LrefRole::Final},
                                    {"lref#sortir", BindingKind::Lref, LrefRole::Initial}},
           "role bindings");
  c.expect(elapsed < std::chrono::seconds(1), "took longer than 1s");
}

// 2. go-out + into + garden vs sortir + dans + jardin
void cross_lingual(Check& c) {
  const auto fr = compose_seed("sortir", "dans", "jardin", "fr");
  const auto en = compose_seed("go-out", "into", "garden", "en");
  c.expect(shape_of(fr) == shape_of(en), "role bindings / zone tuples differ");
  std::size_t en_interaction = 0, fr_interaction = 0;
  for (const auto& r : en.trace.records())
    en_interaction += r.location == "garden" && r.provenance == Provenance::Interaction;
  for (const auto& r : fr.trace.records())
    fr_interaction += r.location == "jardin" && r.provenance == Provenance::Interaction;
  c.expect(en_interaction == 0, "English ground carries Interaction tags");
  c.expect(fr_interaction == 1, "French ground lacks the Interaction tag");
  c.expect(en.trace.at("garden", Phase::Post) ==
               Assignment{Zone::Inside, Provenance::Preposition},
           "garden post should be inside [Preposition]");
}

// 3. sortir/partir, entrer/atterrir
void minimal_pairs(Check& c) {
  using T = std::tuple<std::string, Phase, Zone>;
  using TS = std::set<T>;
  const auto sortir = shape_of(compose_seed("sortir", "dans", "jardin", "fr"));
  const auto partir = shape_of(compose_seed("partir", "dans", "jardin", "fr"));
  c.expect(sortir.roles == partir.roles, "sortir/partir role bindings differ");
  c.expect(tuple_diff(sortir, partir) == TS{{"<lref>", Phase::Post, Zone::Proximal}},
           "sortir-only tuples");
  c.expect(tuple_diff(partir, sortir) == TS{{"<lref>", Phase::Post, Zone::Distal}},
           "partir-only tuples");

  const auto entrer = shape_of(compose_seed("entrer", "dans", "jardin", "fr"));
  const auto atterrir = shape_of(compose_seed("atterrir", "sur", "jardin", "fr"));
  c.expect(entrer.roles == atterrir.roles, "entrer/atterrir role bindings differ");
  c.expect(tuple_diff(entrer, atterrir) == TS{{"<ground>", Phase::Post, Zone::Inside}},
           "entrer-only tuples");
  c.expect(tuple_diff(atterrir, entrer) == TS{{"<ground>", Phase::Post, Zone::Contact}},
           "atterrir-only tuples");
}

// 4. zone algebra
void zone_algebra(Check& c) {
  for (Zone a : kAllZones)
    for (Zone b : kAllZones) {
      c.expect(zone_distance(a, b) == zone_distance(b, a), "symmetry");
      c.expect((zone_distance(a, b) == 0) == (a == b), "identity of indiscernibles");
      for (Zone m : kAllZones)
        c.expect(zone_distance(a, m) <= zone_distance(a, b) + zone_distance(b, m),
                 "triangle inequality");
      auto back = interpolate_zones(b, a);
      std::reverse(back.begin(), back.end());
      c.expect(back == interpolate_zones(a, b), "interpolation reversal");
    }

  struct Bad {
    std::optional<Zone> pre, during, post;
  };
  const std::vector<Bad> discontinuous{
      {Zone::Inside, Zone::Distal, Zone::Inside},
      {Zone::Inside, Zone::Proximal, std::nullopt},
      {std::nullopt, Zone::Inside, Zone::Proximal},
      {Zone::Distal, Zone::Contact, Zone::Contact},
      {Zone::Contact, Zone::Contact, Zone::Distal},
      {Zone::Proximal, Zone::Inside, Zone::Proximal},
      {std::nullopt, Zone::Distal, Zone::Inside},
      {Zone::Inside, Zone::Contact, Zone::Distal},
  };
  for (const auto& b : discontinuous) {
    SpatiotemporalTrace t;
    t.bind("loc", BindingKind::Ground, LrefRole::Final);
    if (b.pre) t.assign("loc", Phase::Pre, *b.pre, Provenance::Verb);
    if (b.during) t.assign("loc", Phase::During, *b.during, Provenance::Verb);
    if (b.post) t.assign("loc", Phase::Post, *b.post, Provenance::Verb);
    c.expect(!validate_trace(t).ok(), "accepted a discontinuous trace:\n" + serialize_trace(t));
  }
  SpatiotemporalTrace two;
  two.bind("a", BindingKind::Lref, LrefRole::Initial);
  two.bind("b", BindingKind::Lref, LrefRole::Final);
  c.expect(!validate_trace(two).ok(), "accepted two lref locations");
}

// 5. rule-base totality
void totality(Check& c) {
  const auto report = lint_rulebase(shipped_rules());
  c.expect(report.gaps.empty(), render_lint(report));
  c.expect(report.ties.empty(), render_lint(report));
}

// 6. brute-force sweep, twice
std::map<std::string, std::string> sweep() {
  std::map<std::string, std::string> outcome;
  for (const auto* lex : {&seed_fr(), &seed_en()})
    for (const auto& [v, verb] : lex->verbs()) {
      if (verb.category != VerbCategory::CoL) continue;
      for (const auto& [p, _] : lex->preps()) {
        const std::string key = lex->language() + ":" + v + "+" + p;
        try {
          const auto d = compose_seed(v, p, "ground", lex->language());
          outcome[key] = validate_trace(d.trace).ok() ? "ok " + serialize_trace(d.trace)
                                                      : "INVALID";
        } catch (const Error& e) {
          outcome[key] = std::string(to_string(e.kind()));
        }
      }
    }
  return outcome;
}

void oracle_sweep(Check& c) {
  const auto first = sweep();
  const auto second = sweep();
  c.expect(first == second, "outcome partition differs between runs");
  std::size_t infelicitous = 0;
  for (const auto& [key, result] : first) {
    const bool ok = result.rfind("ok ", 0) == 0;
    infelicitous += result == "Infelicitous";
    c.expect(ok || result == "Infelicitous", key + " -> " + result);
  }
  c.expect(first.size() >= 100, "sweep too small: " + std::to_string(first.size()));
  std::cout << "    swept " << first.size() << " pairs, " << infelicitous << " infelicitous\n";
}

// 7. nonmonotonicity
void nonmonotonicity(Check& c) {
  const auto complex = testing::complex("sortir", "dans", "jardin", "fr");
  const auto base = compose(complex, seed_lexicons(), shipped_rules());

  RuleBase extended = shipped_rules();
  CompositionRule override_rule;
  override_rule.id = "X1";
  override_rule.strength = Strength::Strict;
  override_rule.guard = parse_guard("lrefrole=initial,prepkind=pos");
  override_rule.conclusion = parse_conclusion("bind(pre) prov=interaction");
  extended.add(override_rule);
  const auto flipped = compose(complex, seed_lexicons(), extended);

  c.expect(base.fired.strength == Strength::Defeasible, "default conclusion is not defeasible");
  c.expect(flipped.fired.id == "X1", "override did not fire");
  c.expect(base.trace.at("jardin", Phase::Post).has_value() &&
               !flipped.trace.at("jardin", Phase::Post).has_value(),
           "post-phase conclusion not retracted");
  c.expect(flipped.trace.at("jardin", Phase::Pre) ==
               Assignment{Zone::Inside, Provenance::Interaction},
           "override conclusion missing");
}

// 8. round trip
void round_trip(Check& c) {
  for (const auto* lex : {&seed_fr(), &seed_en()}) {
    std::istringstream in(serialize_lexicon(*lex));
    c.expect(load_lexicon(in, lex->language()) == *lex, "lexicon " + lex->language());
  }
  std::istringstream in(serialize_rulebase(shipped_rules()));
  c.expect(load_rulebase(in) == shipped_rules(), "rule base");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"1 worked example sortir+dans+jardin", worked_example},
      {"2 cross-lingual contrast go-out+into+garden", cross_lingual},
      {"3 minimal pairs sortir/partir, entrer/atterrir", minimal_pairs},
      {"4 zone algebra exhaustive checks", zone_algebra},
      {"5 rule-base totality (12-cell grid)", totality},
      {"6 oracle sweep over seed lexicons", oracle_sweep},
      {"7 nonmonotonicity witness", nonmonotonicity},
      {"8 lexicon and rule-base round trip", round_trip},
  };

  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Check check;
    try {
      run(check);
    } catch (const std::exception& e) {
      check.failures.push_back(std::string("exception: ") + e.what());
    }
    std::cout << (check.failures.empty() ? "PASS " : "FAIL ") << name << '\n';
    for (const auto& f : check.failures) std::cout << "    " << f << '\n';
    failed += !check.failures.empty();
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
            << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
