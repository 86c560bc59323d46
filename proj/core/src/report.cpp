#include "fncalc/report.hpp"

#include <charconv>
#include <sstream>

#include "fncalc/error.hpp"

namespace fncalc {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorKind::ParseError, "report: " + what); }

template <typename T>
T parse_number(std::string_view s, const char* what) {
  T value{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) fail(std::string("bad ") + what + " '" + std::string(s) + "'");
  return value;
}

// Consumes "key=" at the front of `rest` and returns the value up to the next
// space (or the end of the line when `to_end`).
std::string_view take(std::string_view& rest, std::string_view key, bool to_end = false) {
  if (rest.substr(0, key.size()) != key || rest.size() <= key.size() || rest[key.size()] != '=') {
    fail("expected '" + std::string(key) + "=' in '" + std::string(rest) + "'");
  }
  rest.remove_prefix(key.size() + 1);
  std::size_t end = to_end ? rest.size() : rest.find(' ');
  if (end == std::string_view::npos) end = rest.size();
  std::string_view value = rest.substr(0, end);
  rest.remove_prefix(end);
  if (!rest.empty()) rest.remove_prefix(1);
  return value;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    std::size_t nl = text.find('\n');
    if (nl == std::string_view::npos) {
      lines.push_back(text);
      break;
    }
    lines.push_back(text.substr(0, nl));
    text.remove_prefix(nl + 1);
  }
  return lines;
}

}  // namespace

bool SuiteReport::passed() const {
  for (const auto& g : groups) {
    if (!g.failures.empty()) return false;
  }
  return true;
}

std::string render_report(const SuiteReport& report) {
  std::ostringstream out;
  out << "suite=" << report.suite_id << " dims=";
  for (std::size_t i = 0; i < report.dims.size(); ++i) out << (i ? "," : "") << report.dims[i];
  out << " trials=" << report.trials << " seed=" << report.seed << '\n';
  for (const auto& g : report.groups) {
    out << g.label << " trials=" << g.trials << " passed=" << g.passed << " checks=" << g.checks
        << " skipped=" << g.skipped << '\n';
    for (const auto& f : g.failures) {
      out << "FAIL seed=" << f.seed << " item=" << f.item << " deg=" << f.degree << " residual=" << f.residual << '\n';
    }
  }
  out << (report.passed() ? "PASS " : "FAIL ") << report.passed_trials << '/' << report.trials << '\n';
  return out.str();
}

SuiteReport parse_report(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.size() < 2) fail("too short");
  SuiteReport r;
  {
    std::string_view rest = lines.front();
    r.suite_id = std::string(take(rest, "suite"));
    std::string_view dims = take(rest, "dims");
    while (!dims.empty()) {
      std::size_t comma = dims.find(',');
      r.dims.push_back(parse_number<int>(dims.substr(0, comma), "dimension"));
      if (comma == std::string_view::npos) break;
      dims.remove_prefix(comma + 1);
    }
    r.trials = parse_number<int>(take(rest, "trials"), "trial count");
    r.seed = parse_number<std::uint64_t>(take(rest, "seed", true), "seed");
  }
  for (std::size_t i = 1; i + 1 < lines.size(); ++i) {
    std::string_view rest = lines[i];
    if (rest.substr(0, 5) == "FAIL ") {
      if (r.groups.empty()) fail("failure line before any group");
      rest.remove_prefix(5);
      Failure f;
      f.seed = parse_number<std::uint64_t>(take(rest, "seed"), "seed");
      f.item = std::string(take(rest, "item"));
      f.degree = parse_number<int>(take(rest, "deg"), "degree");
      f.residual = std::string(take(rest, "residual", true));
      r.groups.back().failures.push_back(std::move(f));
      continue;
    }
    TrialGroup g;
    std::size_t sp = rest.find(' ');
    if (sp == std::string_view::npos) fail("bad group line '" + std::string(rest) + "'");
    g.label = std::string(rest.substr(0, sp));
    rest.remove_prefix(sp + 1);
    g.trials = parse_number<int>(take(rest, "trials"), "trial count");
    g.passed = parse_number<int>(take(rest, "passed"), "pass count");
    g.checks = parse_number<long>(take(rest, "checks"), "check count");
    g.skipped = parse_number<long>(take(rest, "skipped", true), "skip count");
    r.groups.push_back(std::move(g));
  }
  std::string_view last = lines.back();
  const bool pass = last.substr(0, 5) == "PASS ";
  if (!pass && last.substr(0, 5) != "FAIL ") fail("missing final PASS/FAIL line");
  last.remove_prefix(5);
  std::size_t slash = last.find('/');
  if (slash == std::string_view::npos) fail("bad summary line");
  r.passed_trials = parse_number<int>(last.substr(0, slash), "pass count");
  if (parse_number<int>(last.substr(slash + 1), "trial count") != r.trials) fail("summary trial count disagrees");
  if (pass != r.passed()) fail("summary verdict disagrees with failure lines");
  return r;
}

}  // namespace fncalc
