#include "fncalc/chart.hpp"

#include <cctype>
#include <set>

#include "fncalc/error.hpp"
#include "fncalc/rational.hpp"

namespace fncalc {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ChartMismatch: return "chart-mismatch";
    case ErrorKind::InvalidChart: return "invalid-chart";
    case ErrorKind::IndexOutOfRange: return "index-out-of-range";
    case ErrorKind::DegreeError: return "degree-error";
    case ErrorKind::ArityMismatch: return "arity-mismatch";
    case ErrorKind::ParseError: return "parse-error";
    case ErrorKind::NotIdempotent: return "not-idempotent";
    case ErrorKind::NonConstantTrace: return "non-constant-trace";
    case ErrorKind::RankOutOfRange: return "rank-out-of-range";
    case ErrorKind::NotEquivariant: return "not-equivariant";
    case ErrorKind::DerivationCheckFailed: return "derivation-check-failed";
    case ErrorKind::ExtractionInconsistent: return "extraction-inconsistent";
    case ErrorKind::NotInDerH: return "not-in-der-h";
    case ErrorKind::UnknownSuite: return "unknown-suite";
    case ErrorKind::FiberCoordinates: return "fiber-coordinates";
    case ErrorKind::IoError: return "io-error";
  }
  return "error";
}

namespace {

bool is_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return true;
}

const std::vector<std::string>& empty_names() {
  static const std::vector<std::string> empty;
  return empty;
}

}  // namespace

Chart::Chart(std::vector<std::string> coord_names) {
  if (coord_names.empty()) throw Error(ErrorKind::InvalidChart, "chart needs at least one coordinate");
  if (coord_names.size() > kMaxDim) {
    throw Error(ErrorKind::InvalidChart,
                "chart dimension " + std::to_string(coord_names.size()) + " exceeds maximum " +
                    std::to_string(kMaxDim));
  }
  std::set<std::string> seen;
  for (const auto& n : coord_names) {
    if (!is_identifier(n)) throw Error(ErrorKind::InvalidChart, "invalid coordinate name '" + n + "'");
    if (!seen.insert(n).second) throw Error(ErrorKind::InvalidChart, "duplicate coordinate name '" + n + "'");
  }
  names_ = std::make_shared<const std::vector<std::string>>(std::move(coord_names));
}

const std::vector<std::string>& Chart::coord_names() const { return names_ ? *names_ : empty_names(); }

std::optional<std::size_t> Chart::index_of(std::string_view name) const {
  const auto& names = coord_names();
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return i;
  }
  return std::nullopt;
}

bool operator==(const Chart& a, const Chart& b) {
  if (a.names_ == b.names_) return true;
  if (!a.names_ || !b.names_) return false;
  return *a.names_ == *b.names_;
}

void require_same_chart(const Chart& a, const Chart& b, std::string_view what) {
  if (!(a == b)) throw Error(ErrorKind::ChartMismatch, std::string(what) + ": operands live on different charts");
}

Chart standard_chart(std::size_t n) {
  static const char* const kNames[kMaxDim] = {"x", "y", "z", "w", "u", "v", "s", "t"};
  if (n == 0 || n > kMaxDim) {
    throw Error(ErrorKind::InvalidChart, "chart dimension must be 1.." + std::to_string(kMaxDim));
  }
  return Chart(std::vector<std::string>(kNames, kNames + n));
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto bad = [&] { return Error(ErrorKind::ParseError, "malformed rational '" + s + "'"); };
  if (s.empty()) throw bad();
  std::size_t pos = 0;
  if (s[0] == '-' || s[0] == '+') pos = 1;
  std::size_t slash = s.find('/');
  auto digits = [&](std::size_t from, std::size_t to) {
    if (from >= to) return false;
    for (std::size_t i = from; i < to; ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
  };
  if (slash == std::string::npos) {
    if (!digits(pos, s.size())) throw bad();
  } else {
    if (!digits(pos, slash) || !digits(slash + 1, s.size())) throw bad();
    if (s.find_first_not_of('0', slash + 1) == std::string::npos) {
      throw Error(ErrorKind::ParseError, "zero denominator in '" + s + "'");
    }
  }
  if (s[0] == '+') s.erase(0, 1);
  Rational q(s, 10);
  q.canonicalize();
  return q;
}

}  // namespace fncalc
