#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "motion/compose.hpp"
#include "motion/lexicon.hpp"
#include "motion/rules.hpp"

namespace motion::testing {

inline std::string data_file(const std::string& name) {
  return std::string(MOTION_DATA_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline const Lexicon& seed_fr() {
  static const Lexicon lex = load_lexicon_file(data_file("lexicon-fr.txt"));
  return lex;
}

inline const Lexicon& seed_en() {
  static const Lexicon lex = load_lexicon_file(data_file("lexicon-en.txt"));
  return lex;
}

inline const LexiconSet& seed_lexicons() {
  static const LexiconSet set = [] {
    LexiconSet s;
    s.add(seed_fr());
    s.add(seed_en());
    return s;
  }();
  return set;
}

inline const RuleBase& shipped_rules() {
  static const RuleBase rules = load_rulebase_file(data_file("rules.txt"));
  return rules;
}

inline MotionComplex complex(std::string verb, std::string prep, std::string ground,
                             std::string language) {
  MotionComplex c;
  c.verb = std::move(verb);
  c.prep = std::move(prep);
  c.ground = std::move(ground);
  c.language = std::move(language);
  return c;
}

inline Derivation compose_seed(const std::string& verb, const std::string& prep,
                               const std::string& ground, const std::string& language) {
  return compose(complex(verb, prep, ground, language), seed_lexicons(), shipped_rules());
}

}  // namespace motion::testing
