#include <cctype>
#include <string>

#include "fncalc/error.hpp"
#include "fncalc/poly.hpp"

namespace fncalc {

namespace {

std::string render_monomial(const Chart& chart, const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < chart.dim(); ++i) {
    if (m.exps[i] == 0) continue;
    if (!out.empty()) out += ' ';
    out += chart.name(i);
    if (m.exps[i] != 1) out += '^' + std::to_string(m.exps[i]);
  }
  return out;
}

class PolyParser {
 public:
  PolyParser(const Chart& chart, std::string_view text) : chart_(chart), text_(text) {}

  Poly parse() {
    std::vector<Term> terms;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = (peek() == '-') ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-' between terms");
      }
      terms.push_back(parse_term(sign));
      first = false;
      skip_ws();
    }
    return Poly::from_terms(chart_, std::move(terms));
  }

 private:
  Term parse_term(int sign) {
    Term t{Monomial{}, Rational(sign)};
    bool any = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      t.coeff *= parse_coefficient();
      any = true;
      skip_ws();
    }
    while (!at_end() && (is_ident_start(peek()) || peek() == '*')) {
      if (peek() == '*') {
        if (!any) fail("'*' without a left factor");
        ++pos_;
        skip_ws();
        continue;
      }
      std::string name = parse_ident();
      auto idx = chart_.index_of(name);
      if (!idx) fail("unknown coordinate '" + name + "'");
      unsigned long e = 1;
      skip_ws();
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_ws();
        e = parse_uint();
      }
      unsigned long total = t.mono.exps[*idx] + e;
      if (total > 0xFFFF) fail("exponent too large");
      t.mono.exps[*idx] = static_cast<std::uint16_t>(total);
      t.mono.degree += static_cast<std::uint32_t>(e);
      any = true;
      skip_ws();
    }
    if (!any) fail("expected a term");
    return t;
  }

  Rational parse_coefficient() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (!at_end() && peek() == '/') {
      ++pos_;
      std::size_t den = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (den == pos_) fail("missing denominator");
    }
    return parse_rational(text_.substr(start, pos_ - start));
  }

  unsigned long parse_uint() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected exponent");
    if (pos_ - start > 5) fail("exponent too large");
    return std::stoul(std::string(text_.substr(start, pos_ - start)));
  }

  std::string parse_ident() {
    std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  static bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::ParseError,
                "cannot parse polynomial '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + why);
  }

  const Chart& chart_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& terms = p.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const bool negative = sgn(it->coeff) < 0;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    Rational mag = abs(it->coeff);
    std::string mono = render_monomial(p.chart(), it->mono);
    if (mono.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += to_string(mag) + ' ' + mono;
    }
  }
  return out;
}

Poly parse_poly(const Chart& chart, std::string_view text) {
  if (!chart.bound()) throw Error(ErrorKind::InvalidChart, "cannot parse a polynomial without a chart");
  return PolyParser(chart, text).parse();
}

}  // namespace fncalc
