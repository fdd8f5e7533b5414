#include "motion/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

namespace motion {

namespace {

[[noreturn]] void parse_error(const std::string& what, int line) {
  throw Error(ErrorKind::ParseError, what, line);
}

template <typename T, typename Parse>
T field(std::string_view text, Parse parse, const char* what, int line) {
  if (auto v = parse(text)) return *v;
  parse_error(std::string("bad ") + what + " '" + std::string(text) + "'", line);
}

}  // namespace

std::string_view to_string(CaseOutcome o) noexcept {
  switch (o) {
    case CaseOutcome::Pass: return "PASS";
    case CaseOutcome::Fail: return "FAIL";
    case CaseOutcome::Error: return "ERROR";
  }
  return "?";
}

std::vector<CorpusCase> parse_corpus(std::istream& in) {
  std::vector<CorpusCase> cases;
  std::set<std::string> ids;
  std::optional<CorpusCase> open;
  bool has_input = false;
  std::string raw;
  int line = 0;

  while (std::getline(in, raw)) {
    ++line;
    auto text = trim(raw);
    if (text.empty() || text.front() == '#') continue;
    auto fields = split_fields(text, text.find('\t') != std::string_view::npos ? '\t' : ' ');
    const auto keyword = fields[0];

    if (keyword == "CASE") {
      if (open) parse_error("CASE '" + open->id + "' is missing END", line);
      if (fields.size() != 2) parse_error("expected 'CASE <id>'", line);
      std::string id(fields[1]);
      if (!ids.insert(id).second) parse_error("duplicate case id '" + id + "'", line);
      open = CorpusCase{};
      open->id = std::move(id);
      open->line = line;
      has_input = false;
      continue;
    }
    if (!open) parse_error("'" + std::string(keyword) + "' outside a CASE block", line);

    if (keyword == "INPUT") {
      if (fields.size() != 5) parse_error("expected 'INPUT <verb> <prep> <ground> <lang>'", line);
      if (has_input) parse_error("second INPUT in case '" + open->id + "'", line);
      open->input.verb = std::string(fields[1]);
      open->input.prep = std::string(fields[2]);
      open->input.ground = std::string(fields[3]);
      open->input.language = std::string(fields[4]);
      has_input = true;
    } else if (keyword == "EXPECT") {
      if (fields.size() != 5)
        parse_error("expected 'EXPECT <location> <phase> <zone> <provenance>'", line);
      open->expected.push_back(
          {std::string(fields[1]), field<Phase>(fields[2], parse_phase, "phase", line),
           field<Zone>(fields[3], parse_zone, "zone", line),
           field<Provenance>(fields[4], parse_provenance, "provenance", line)});
    } else if (keyword == "EXPECT-ROLE") {
      if (fields.size() != 4)
        parse_error("expected 'EXPECT-ROLE <location> <lref|ground> <role>'", line);
      open->expected_roles.push_back(
          {std::string(fields[1]), field<BindingKind>(fields[2], parse_binding, "binding", line),
           field<LrefRole>(fields[3], parse_role, "role", line)});
    } else if (keyword == "EXPECT-ERROR") {
      if (fields.size() != 2) parse_error("expected 'EXPECT-ERROR <name>'", line);
      if (open->expected_error) parse_error("second EXPECT-ERROR", line);
      open->expected_error = field<ErrorKind>(fields[1], parse_error_kind, "error name", line);
    } else if (keyword == "END") {
      if (!has_input) parse_error("case '" + open->id + "' has no INPUT", line);
      const bool tuples = !open->expected.empty() || !open->expected_roles.empty();
      if (!tuples && !open->expected_error)
        parse_error("case '" + open->id + "' has no expectation", line);
      if (tuples && open->expected_error)
        parse_error("case '" + open->id + "' mixes EXPECT and EXPECT-ERROR", line);
      std::sort(open->expected.begin(), open->expected.end());
      std::sort(open->expected_roles.begin(), open->expected_roles.end());
      cases.push_back(std::move(*open));
      open.reset();
    } else {
      parse_error("unknown keyword '" + std::string(keyword) + "'", line);
    }
  }
  if (open) parse_error("CASE '" + open->id + "' is missing END", line);
  return cases;
}

std::vector<CorpusCase> load_corpus_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot read " + path);
  return parse_corpus(in);
}

namespace {

template <typename Record, typename Format>
void diff_sets(const std::vector<Record>& expected, std::vector<Record> actual, Format format,
               std::vector<std::string>& out) {
  std::sort(actual.begin(), actual.end());
  std::vector<Record> missing, extra;
  std::set_difference(expected.begin(), expected.end(), actual.begin(), actual.end(),
                      std::back_inserter(missing));
  std::set_difference(actual.begin(), actual.end(), expected.begin(), expected.end(),
                      std::back_inserter(extra));
  for (const auto& r : missing) out.push_back("- " + format(r));
  for (const auto& r : extra) out.push_back("+ " + format(r));
}

}  // namespace

CaseResult run_case(const CorpusCase& c, const LexiconSet& lexicons, const RuleBase& rules) {
  CaseResult result;
  result.id = c.id;
  try {
    const Derivation d = compose(c.input, lexicons, rules);
    result.fired = d.fired.id;
    if (c.expected_error) {
      result.outcome = CaseOutcome::Fail;
      result.diff.push_back("- error " + std::string(to_string(*c.expected_error)));
      for (const auto& r : d.trace.records()) result.diff.push_back("+ " + format_record(r));
      return result;
    }
    diff_sets(c.expected, d.trace.records(), format_record, result.diff);
    if (!c.expected_roles.empty())
      diff_sets(c.expected_roles, d.trace.roles(), format_role, result.diff);
    result.outcome = result.diff.empty() ? CaseOutcome::Pass : CaseOutcome::Fail;
  } catch (const Error& e) {
    result.error = std::string(to_string(e.kind()));
    if (c.expected_error && *c.expected_error == e.kind()) {
      result.outcome = CaseOutcome::Pass;
    } else if (c.expected_error) {
      result.outcome = CaseOutcome::Fail;
      result.diff.push_back("- error " + std::string(to_string(*c.expected_error)));
      result.diff.push_back("+ error " + result.error);
    } else {
      result.outcome = CaseOutcome::Error;
      result.diff.push_back("! " + std::string(e.what()));
    }
  } catch (const std::exception& e) {
    result.outcome = CaseOutcome::Error;
    result.error = "InternalError";
    result.diff.push_back(std::string("! ") + e.what());
  }
  return result;
}

CorpusReport run_corpus(const std::vector<CorpusCase>& cases, const LexiconSet& lexicons,
                        const RuleBase& rules, unsigned jobs) {
  std::vector<CaseResult> results(cases.size());
  if (jobs <= 1 || cases.size() < 2) {
    for (std::size_t i = 0; i < cases.size(); ++i)
      results[i] = run_case(cases[i], lexicons, rules);
  } else {
    std::atomic<std::size_t> next{0};
    const unsigned workers = std::min<std::size_t>(jobs, cases.size());
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < cases.size(); i = next++)
          results[i] = run_case(cases[i], lexicons, rules);
      });
  }

  CorpusReport report;
  for (auto& r : results) {
    switch (r.outcome) {
      case CaseOutcome::Pass: ++report.pass; break;
      case CaseOutcome::Fail: ++report.fail; break;
      case CaseOutcome::Error: ++report.error; break;
    }
    if (!r.fired.empty()) ++report.histogram[r.fired];
    report.cases.push_back(std::move(r));
  }
  return report;
}

std::string render_report(const CorpusReport& report) {
  std::ostringstream out;
  for (const auto& c : report.cases) {
    out << to_string(c.outcome) << ' ' << c.id;
    if (!c.fired.empty()) out << " [" << c.fired << ']';
    if (!c.error.empty()) out << " (" << c.error << ')';
    out << '\n';
    for (const auto& line : c.diff) out << "    " << line << '\n';
  }
  out << "rules fired:\n";
  for (const auto& [id, n] : report.histogram) out << "  " << id << ' ' << n << '\n';
  out << "total " << report.total() << ": " << report.pass << " pass, " << report.fail
      << " fail, " << report.error << " error\n";
  return out.str();
}

}  // namespace motion
