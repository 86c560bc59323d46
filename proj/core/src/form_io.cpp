#include "fncalc/form_io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

#include "fncalc/error.hpp"

namespace fncalc {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::string index_names(const Chart& chart, IndexMask mask) {
  std::string out;
  for (int i : mask_indices(mask)) {
    if (!out.empty()) out += '^';
    out += chart.name(static_cast<std::size_t>(i));
  }
  return out;
}

std::vector<std::pair<IndexMask, Poly>> sorted_entries(const ScalarForm& omega) {
  std::vector<std::pair<IndexMask, Poly>> entries(omega.coeffs().begin(), omega.coeffs().end());
  std::stable_sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return tuple_less(a.first, b.first); });
  return entries;
}

struct VectorEntry {
  IndexMask mask;
  std::size_t output;
  Poly value;
};

std::vector<VectorEntry> sorted_entries(const VectorForm& K) {
  std::vector<VectorEntry> entries;
  for (std::size_t j = 0; j < K.dim(); ++j) {
    for (const auto& [mask, p] : K.component(j).coeffs()) entries.push_back({mask, j, p});
  }
  std::stable_sort(entries.begin(), entries.end(), [](const VectorEntry& a, const VectorEntry& b) {
    if (a.mask != b.mask) return tuple_less(a.mask, b.mask);
    return a.output < b.output;
  });
  return entries;
}

[[noreturn]] void parse_fail(std::string_view text, const std::string& why) {
  throw Error(ErrorKind::ParseError, "cannot parse form '" + std::string(text) + "': " + why);
}

// Resolves "x^y^z" into a mask and the sign of the sorting permutation.
// Returns sign 0 when an index repeats.
std::pair<IndexMask, int> parse_indices(const Chart& chart, std::string_view full, const std::string& spec) {
  IndexMask mask = 0;
  int sign = 1;
  if (spec.empty()) return {0, 1};
  std::size_t start = 0;
  bool repeated = false;
  while (true) {
    std::size_t caret = spec.find('^', start);
    std::string name = trim(std::string_view(spec).substr(start, caret == std::string::npos ? std::string::npos : caret - start));
    auto idx = chart.index_of(name);
    if (!idx) parse_fail(full, "unknown coordinate '" + name + "'");
    const IndexMask bit = IndexMask{1} << *idx;
    if (mask & bit) repeated = true;
    // Appending dx^i after the current ones: move it past every larger index.
    if (std::popcount(mask & ~((bit << 1) - 1)) % 2 != 0) sign = -sign;
    mask |= bit;
    if (caret == std::string::npos) break;
    start = caret + 1;
  }
  return {mask, repeated ? 0 : sign};
}

struct CompactEntry {
  std::string poly;
  std::string indices;
  std::optional<std::string> output;
};

std::vector<CompactEntry> split_compact(std::string_view text, bool vector_valued) {
  std::vector<CompactEntry> entries;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (!entries.empty()) {
      if (text[pos] != '+') parse_fail(text, "expected '+' between entries");
      ++pos;
      skip_ws();
    }
    if (pos >= text.size() || text[pos] != '(') parse_fail(text, "expected '(' opening a coefficient");
    std::size_t close = text.find(')', pos);
    if (close == std::string_view::npos) parse_fail(text, "unbalanced parenthesis");
    CompactEntry e;
    e.poly = std::string(text.substr(pos + 1, close - pos - 1));
    pos = close + 1;
    std::size_t end = pos;
    // Entry continues until the next top-level '+' that precedes '('.
    while (end < text.size()) {
      if (text[end] == '+') {
        std::size_t look = end + 1;
        while (look < text.size() && std::isspace(static_cast<unsigned char>(text[look]))) ++look;
        if (look < text.size() && text[look] == '(' && text.compare(look, 3, "(*)") != 0) break;
      }
      ++end;
    }
    std::string rest = trim(text.substr(pos, end - pos));
    std::size_t star = rest.find("(*)");
    if (star != std::string::npos) {
      if (!vector_valued) parse_fail(text, "output leg in a scalar form");
      std::string out = trim(std::string_view(rest).substr(star + 3));
      if (out.rfind("d/", 0) != 0) parse_fail(text, "output leg must read 'd/<coordinate>'");
      e.output = trim(std::string_view(out).substr(2));
      rest = trim(std::string_view(rest).substr(0, star));
    } else if (vector_valued) {
      parse_fail(text, "missing output leg '(*) d/<coordinate>'");
    }
    e.indices = rest;
    entries.push_back(std::move(e));
    pos = end;
    skip_ws();
  }
  return entries;
}

}  // namespace

std::string to_string(const ScalarForm& omega) {
  if (omega.is_zero()) return "0";
  std::string out;
  for (const auto& [mask, p] : sorted_entries(omega)) {
    if (!out.empty()) out += " + ";
    out += '(' + to_string(p) + ')';
    if (mask != 0) out += ' ' + index_names(omega.chart(), mask);
  }
  return out;
}

std::string to_string(const VectorForm& K) {
  if (K.is_zero()) return "0";
  std::string out;
  for (const auto& e : sorted_entries(K)) {
    if (!out.empty()) out += " + ";
    out += '(' + to_string(e.value) + ')';
    if (e.mask != 0) out += ' ' + index_names(K.chart(), e.mask);
    out += " (*) d/" + K.chart().name(e.output);
  }
  return out;
}

ScalarForm parse_scalar_form(const Chart& chart, std::string_view text, std::optional<int> degree) {
  std::string t = trim(text);
  if (t == "0") return ScalarForm(chart, degree.value_or(0));
  auto entries = split_compact(t, false);
  std::optional<ScalarForm> out;
  for (const auto& e : entries) {
    auto [mask, sign] = parse_indices(chart, text, e.indices);
    const int p = mask_degree(mask);
    if (!out) {
      if (degree && *degree != p) parse_fail(text, "entry degree does not match requested degree");
      out.emplace(chart, p);
    } else if (out->degree() != p) {
      parse_fail(text, "entries of different degree");
    }
    if (sign == 0) continue;
    Poly c = parse_poly(chart, e.poly);
    if (sign < 0) c = -c;
    out->add_term(mask, c);
  }
  return *out;
}

VectorForm parse_vector_form(const Chart& chart, std::string_view text, std::optional<int> degree) {
  std::string t = trim(text);
  if (t == "0") return VectorForm(chart, degree.value_or(0));
  auto entries = split_compact(t, true);
  std::optional<VectorForm> out;
  for (const auto& e : entries) {
    auto [mask, sign] = parse_indices(chart, text, e.indices);
    const int p = mask_degree(mask);
    if (!out) {
      if (degree && *degree != p) parse_fail(text, "entry degree does not match requested degree");
      out.emplace(chart, p);
    } else if (out->degree() != p) {
      parse_fail(text, "entries of different degree");
    }
    auto j = chart.index_of(*e.output);
    if (!j) parse_fail(text, "unknown output coordinate '" + *e.output + "'");
    if (sign == 0) continue;
    Poly c = parse_poly(chart, e.poly);
    if (sign < 0) c = -c;
    out->add_to_component(*j, ScalarForm::basis(chart, mask, c));
  }
  return *out;
}

std::string to_entry_list(const ScalarForm& omega) {
  std::ostringstream os;
  os << "degree: " << omega.degree() << '\n';
  for (const auto& [mask, p] : sorted_entries(omega)) {
    os << "indices: " << index_names(omega.chart(), mask) << ", value: " << to_string(p) << '\n';
  }
  return os.str();
}

std::string to_entry_list(const VectorForm& K) {
  std::ostringstream os;
  os << "degree: " << K.degree() << '\n';
  for (const auto& e : sorted_entries(K)) {
    os << "indices: " << index_names(K.chart(), e.mask) << ", value: " << to_string(e.value)
       << ", output: " << K.chart().name(e.output) << '\n';
  }
  return os.str();
}

namespace {

struct EntryLine {
  std::string indices;
  std::string value;
  std::optional<std::string> output;
};

struct EntryList {
  std::optional<int> degree;
  std::vector<EntryLine> lines;
};

EntryList read_entry_list(std::string_view text) {
  EntryList list;
  std::istringstream is{std::string(text)};
  std::string line;
  while (std::getline(is, line)) {
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (t.rfind("degree:", 0) == 0) {
      try {
        list.degree = std::stoi(trim(std::string_view(t).substr(7)));
      } catch (const std::exception&) {
        parse_fail(text, "bad degree line '" + t + "'");
      }
      continue;
    }
    if (t.rfind("indices:", 0) != 0) parse_fail(text, "expected 'indices:' in line '" + t + "'");
    EntryLine e;
    std::size_t vpos = t.find(", value:");
    if (vpos == std::string::npos) parse_fail(text, "missing 'value:' in line '" + t + "'");
    e.indices = trim(std::string_view(t).substr(8, vpos - 8));
    std::string rest = t.substr(vpos + 8);
    std::size_t opos = rest.find(", output:");
    if (opos != std::string::npos) {
      e.output = trim(std::string_view(rest).substr(opos + 9));
      rest = rest.substr(0, opos);
    }
    e.value = trim(rest);
    list.lines.push_back(std::move(e));
  }
  return list;
}

}  // namespace

ScalarForm parse_scalar_entry_list(const Chart& chart, std::string_view text) {
  EntryList list = read_entry_list(text);
  std::optional<ScalarForm> out;
  if (list.degree) out.emplace(chart, *list.degree);
  for (const auto& e : list.lines) {
    if (e.output) parse_fail(text, "output leg in a scalar form");
    auto [mask, sign] = parse_indices(chart, text, e.indices);
    if (!out) out.emplace(chart, mask_degree(mask));
    if (out->degree() != mask_degree(mask)) parse_fail(text, "entry degree mismatch");
    if (sign == 0) continue;
    Poly c = parse_poly(chart, e.value);
    out->add_term(mask, sign < 0 ? -c : c);
  }
  if (!out) parse_fail(text, "empty entry list needs a 'degree:' line");
  return *out;
}

VectorForm parse_vector_entry_list(const Chart& chart, std::string_view text) {
  EntryList list = read_entry_list(text);
  std::optional<VectorForm> out;
  if (list.degree) out.emplace(chart, *list.degree);
  for (const auto& e : list.lines) {
    if (!e.output) parse_fail(text, "vector form entry without 'output:'");
    auto [mask, sign] = parse_indices(chart, text, e.indices);
    if (!out) out.emplace(chart, mask_degree(mask));
    if (out->degree() != mask_degree(mask)) parse_fail(text, "entry degree mismatch");
    auto j = chart.index_of(*e.output);
    if (!j) parse_fail(text, "unknown output coordinate '" + *e.output + "'");
    if (sign == 0) continue;
    Poly c = parse_poly(chart, e.value);
    out->add_to_component(*j, ScalarForm::basis(chart, mask, sign < 0 ? -c : c));
  }
  if (!out) parse_fail(text, "empty entry list needs a 'degree:' line");
  return *out;
}

}  // namespace fncalc
