#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "motion/cli.hpp"
#include "support.hpp"

using namespace motion;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("motionsem-test-" + name);
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST_CASE("query sortir dans jardin") {
  const auto r = run({"query", "sortir", "dans", "jardin", "--lang", "fr"});
  CHECK(r.code == cli::Success);
  CHECK(r.out.find("jardin post inside interaction") != std::string::npos);
  CHECK(run({"query", "sortir", "dans", "jardin"}).out == r.out);  // byte-identical
}

TEST_CASE("query go-out into garden") {
  const auto r = run({"query", "go-out", "into", "garden", "--lang", "en"});
  CHECK(r.code == cli::Success);
  CHECK(r.out.find("garden post inside prep") != std::string::npos);
}

TEST_CASE("query records format") {
  const auto r = run({"query", "entrer", "dans", "jardin", "--format", "records"});
  CHECK(r.code == cli::Success);
  CHECK(r.out ==
        "ROLE jardin lref final\n"
        "ROLE jardin ground final\n"
        "jardin pre proximal verb\n"
        "jardin post inside verb\n");
}

TEST_CASE("query exit codes") {
  CHECK(run({"query", "sortir", "zzz", "jardin"}).code == cli::UnknownLemma);
  CHECK(run({"query", "voyager", "dans", "jardin"}).code == cli::NotACoLVerb);
  CHECK(run({"query", "sortir", "dans", "jardin", "--lang", "de"}).code == cli::LoadFailure);
  CHECK(run({"query", "sortir", "dans", "jardin", "--rules", "/nonexistent"}).code ==
        cli::LoadFailure);
  CHECK(run({"query", "sortir", "dans"}).code == cli::Usage);
  CHECK(run({}).code == cli::Usage);
  CHECK(run({"query", "sortir", "dans", "jardin", "--format", "xml"}).code == cli::Usage);

  const auto tied = temp_file(
      "tied.txt", testing::read_file(testing::data_file("rules.txt")) +
                      "R\tD2i-bis\tdefeasible\t10\tlrefrole=initial,prepkind=pos\tbind(pre)\n");
  CHECK(run({"query", "sortir", "dans", "jardin", "--rules", tied}).code ==
        cli::AmbiguousRuleBase);

  const auto identify = temp_file("identify.txt", "R\tI\tstrict\t0\t*\tidentify\n");
  CHECK(run({"query", "sortir", "dans", "jardin", "--rules", identify}).code ==
        cli::Infelicitous);
}

TEST_CASE("exit code table has no zero for errors") {
  for (auto kind : {ErrorKind::DuplicateLemma, ErrorKind::UnknownZoneName, ErrorKind::IllFormedEntry,
                    ErrorKind::UnlexicalizedClass, ErrorKind::NotACoLVerb, ErrorKind::UnknownLemma,
                    ErrorKind::UnknownLanguage, ErrorKind::Infelicitous,
                    ErrorKind::AmbiguousRuleBase, ErrorKind::EmptyApplicableSet,
                    ErrorKind::ParseError, ErrorKind::IoError})
    CHECK(cli::exit_code_for(kind) != cli::Success);
  CHECK(cli::exit_code_for(ErrorKind::UnknownLemma) != cli::exit_code_for(ErrorKind::Infelicitous));
  CHECK(cli::exit_code_for(ErrorKind::Infelicitous) !=
        cli::exit_code_for(ErrorKind::AmbiguousRuleBase));
}

TEST_CASE("corpus subcommand") {
  const auto golden = testing::data_file("corpus/golden.txt");
  const auto ok = run({"corpus", golden});
  CHECK(ok.code == cli::Success);
  CHECK(ok.out.find(" fail, 0 error") != std::string::npos);
  CHECK(run({"corpus", golden, "--jobs", "4"}).out == ok.out);

  auto text = testing::read_file(golden);
  const std::string good = "EXPECT\tjardin\tpost\tinside\tinteraction";
  text.replace(text.find(good), good.size(), "EXPECT\tjardin\tpost\tdistal\tinteraction");
  const auto bad = run({"corpus", temp_file("bad-corpus.txt", text)});
  CHECK(bad.code == cli::CheckFailed);
  CHECK(bad.out.find("FAIL sortir-dans") != std::string::npos);
  CHECK(bad.out.find("- jardin post distal interaction") != std::string::npos);

  CHECK(run({"corpus", temp_file("empty.txt", "")}).code == cli::Success);
  CHECK(run({"corpus", temp_file("broken.txt", "CASE a\n")}).code == cli::LoadFailure);
}

TEST_CASE("lint subcommand") {
  const auto ok = run({"lint"});
  CHECK(ok.code == cli::Success);
  CHECK(ok.out.find("0 gap(s), 0 possible tie(s)") != std::string::npos);

  std::string rules;
  std::istringstream in(testing::read_file(testing::data_file("rules.txt")));
  for (std::string line; std::getline(in, line);)
    if (line.find("prepkind=pos") == std::string::npos) rules += line + "\n";
  const auto gaps = run({"lint", "--rules", temp_file("no-pos.txt", rules)});
  CHECK(gaps.code == cli::CheckFailed);
  CHECK(gaps.out.find("3 gap(s)") != std::string::npos);
  CHECK(gaps.out.find("gap  lrefrole=initial x pos") != std::string::npos);

  const auto dup = temp_file("dup.txt", "LANG\tfr\nP\tdans\tpos\tinside\nP\tdans\tpos\tinside\n");
  const auto lexerr = run({"lint", "--lexicon", dup});
  CHECK(lexerr.code != cli::Success);
  CHECK(lexerr.err.find("DuplicateLemma: line 3") != std::string::npos);

  const auto classes = run({"lint", "--classes", testing::data_file("verb-classes.txt")});
  CHECK(classes.code == cli::Success);
}
