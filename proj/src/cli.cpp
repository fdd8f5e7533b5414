#include "motion/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <set>

#include "motion/compose.hpp"
#include "motion/corpus.hpp"
#include "motion/lexicon.hpp"
#include "motion/rules.hpp"

#ifndef MOTION_DATA_DIR
#define MOTION_DATA_DIR "data"
#endif

namespace motion::cli {

namespace {

struct CommonOptions {
  std::vector<std::string> lexicons;
  std::string rules;
  std::string classes;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--lexicon", opts.lexicons,
                  "Lexicon file (repeatable, one per language; default: shipped fr and en)");
  cmd->add_option("--rules", opts.rules, "Rule-base file (default: shipped rules)");
  cmd->add_option("--classes", opts.classes,
                  "Verb class inventory (default: built-in 10-class inventory)");
}

std::string data_path(const char* name) { return std::string(MOTION_DATA_DIR) + "/" + name; }

ClassInventory load_inventory(const CommonOptions& opts) {
  if (opts.classes.empty()) return ClassInventory::defaults();
  std::ifstream in(opts.classes);
  if (!in) throw Error(ErrorKind::IoError, "cannot read " + opts.classes);
  return ClassInventory::parse(in);
}

std::vector<std::string> lexicon_paths(const CommonOptions& opts) {
  if (!opts.lexicons.empty()) return opts.lexicons;
  return {data_path("lexicon-fr.txt"), data_path("lexicon-en.txt")};
}

std::string rules_path(const CommonOptions& opts) {
  return opts.rules.empty() ? data_path("rules.txt") : opts.rules;
}

LexiconSet load_lexicons(const CommonOptions& opts) {
  const auto inventory = load_inventory(opts);
  LexiconSet set;
  for (const auto& path : lexicon_paths(opts)) {
    try {
      set.add(load_lexicon_file(path, inventory));
    } catch (const Error& e) {
      throw Error(e.kind(), path + ": " + e.what());
    }
  }
  return set;
}

int report_error(const Error& e, std::ostream& err) {
  err << "error: " << e.what() << '\n';
  return exit_code_for(e.kind());
}

int run_query(const CommonOptions& opts, const MotionComplex& complex,
              const std::string& format, std::ostream& out, std::ostream& err) {
  LexiconSet lexicons;
  RuleBase rules;
  try {
    lexicons = load_lexicons(opts);
    rules = load_rulebase_file(rules_path(opts));
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return LoadFailure;
  }
  try {
    const auto d = compose(complex, lexicons, rules);
    out << (format == "records" ? serialize_trace(d.trace) : explain(d));
    return Success;
  } catch (const Error& e) {
    return report_error(e, err);
  }
}

int run_corpus_cmd(const CommonOptions& opts, const std::string& path, unsigned jobs,
                   std::ostream& out, std::ostream& err) {
  LexiconSet lexicons;
  RuleBase rules;
  std::vector<CorpusCase> cases;
  try {
    lexicons = load_lexicons(opts);
    rules = load_rulebase_file(rules_path(opts));
    cases = load_corpus_file(path);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return LoadFailure;
  }
  const auto report = run_corpus(cases, lexicons, rules, jobs);
  out << render_report(report);
  return report.ok() ? Success : CheckFailed;
}

int run_lint(const CommonOptions& opts, std::ostream& out, std::ostream& err) {
  bool load_failed = false;
  ClassInventory inventory;
  try {
    inventory = load_inventory(opts);
  } catch (const Error& e) {
    err << "error: " << opts.classes << ": " << e.what() << '\n';
    return LoadFailure;
  }

  for (const auto& path : lexicon_paths(opts)) {
    try {
      const auto lex = load_lexicon_file(path, inventory);
      std::set<std::string> classes, groups;
      std::size_t col = 0;
      for (const auto& [_, v] : lex.verbs())
        if (v.category == VerbCategory::CoL) {
          ++col;
          classes.insert(classify_verb(v, inventory));
        }
      for (const auto& [_, p] : lex.preps()) groups.insert(classify_prep(p));
      out << "lexicon " << path << " [" << lex.language() << "]: " << lex.verbs().size()
          << " verbs (" << col << " CoL, " << classes.size() << " classes), "
          << lex.preps().size() << " preps (" << groups.size() << " groups): ok\n";
    } catch (const Error& e) {
      err << "lexicon " << path << ": " << e.what() << '\n';
      load_failed = true;
    }
  }

  const auto path = rules_path(opts);
  RuleBase rules;
  try {
    rules = load_rulebase_file(path);
  } catch (const Error& e) {
    err << "rules " << path << ": " << e.what() << '\n';
    return LoadFailure;
  }
  const auto report = lint_rulebase(rules);
  out << "rules " << path << " (version " << (rules.version().empty() ? "-" : rules.version())
      << ", " << rules.rules().size() << " rules)\n"
      << render_lint(report);
  if (load_failed) return LoadFailure;
  return report.clean() ? Success : CheckFailed;
}

}  // namespace

int exit_code_for(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::UnknownLemma: return UnknownLemma;
    case ErrorKind::NotACoLVerb: return NotACoLVerb;
    case ErrorKind::Infelicitous: return Infelicitous;
    case ErrorKind::AmbiguousRuleBase: return AmbiguousRuleBase;
    case ErrorKind::EmptyApplicableSet: return CheckFailed;
    case ErrorKind::DuplicateLemma:
    case ErrorKind::UnknownZoneName:
    case ErrorKind::IllFormedEntry:
    case ErrorKind::UnlexicalizedClass:
    case ErrorKind::UnknownLanguage:
    case ErrorKind::ParseError:
    case ErrorKind::IoError: return LoadFailure;
  }
  return Internal;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spatiotemporal composition of motion verbs and spatial prepositions",
               "motionsem"};
  app.require_subcommand(1);

  CommonOptions opts;
  MotionComplex complex;
  complex.language = "fr";
  std::string format = "text";
  auto* query = app.add_subcommand("query", "Compose one verb + preposition + ground");
  query->add_option("verb", complex.verb, "Verb lemma")->required();
  query->add_option("prep", complex.prep, "Preposition lemma")->required();
  query->add_option("ground", complex.ground, "Ground location identifier")->required();
  query->add_option("--lang", complex.language, "Language tag")->capture_default_str();
  query->add_option("--mobile", complex.mobile, "Mobile entity identifier")
      ->capture_default_str();
  query->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "records"}))
      ->capture_default_str();
  add_common(query, opts);

  std::string corpus_path;
  unsigned jobs = 1;
  auto* corpus = app.add_subcommand("corpus", "Run a golden corpus file");
  corpus->add_option("corpus", corpus_path, "Corpus file")->required();
  corpus->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  add_common(corpus, opts);

  auto* lint = app.add_subcommand("lint", "Validate lexicons and check rule-base coverage");
  add_common(lint, opts);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? Success : Usage;
  }

  try {
    if (*query) return run_query(opts, complex, format, out, err);
    if (*corpus) return run_corpus_cmd(opts, corpus_path, jobs, out, err);
    if (*lint) return run_lint(opts, out, err);
  } catch (const Error& e) {
    return report_error(e, err);
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return Internal;
  }
  return Usage;
}

}  // namespace motion::cli
