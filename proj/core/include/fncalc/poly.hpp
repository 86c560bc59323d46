#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fncalc/chart.hpp"
#include "fncalc/rational.hpp"

namespace fncalc {

// Exponent vector of a monomial; entries past the chart dimension stay zero.
struct Monomial {
  std::array<std::uint16_t, kMaxDim> exps{};
  std::uint32_t degree = 0;

  static Monomial variable(std::size_t i);
  Monomial operator*(const Monomial& other) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps == b.exps; }
};

// Graded-lexicographic order: total degree first, then the exponent of the
// first coordinate, then the second, and so on.
inline bool grlex_less(const Monomial& a, const Monomial& b) {
  if (a.degree != b.degree) return a.degree < b.degree;
  return a.exps < b.exps;
}

struct Term {
  Monomial mono;
  Rational coeff;
};

// Exact multivariate polynomial over the rationals in the coordinates of a
// chart. Terms are kept sorted ascending by grlex with no zero coefficients,
// so equality is term-wise comparison.
class Poly {
 public:
  // Zero polynomial not yet bound to a chart; adopts the chart of whatever it
  // is combined with.
  Poly() = default;
  explicit Poly(Chart chart) : chart_(std::move(chart)) {}
  Poly(Chart chart, const Rational& c);

  static Poly constant(const Chart& chart, const Rational& c) { return Poly(chart, c); }
  static Poly variable(const Chart& chart, std::size_t i);
  static Poly monomial(const Chart& chart, const Monomial& m, const Rational& c);
  // Builds from arbitrary (possibly repeated, unsorted, zero) terms.
  static Poly from_terms(const Chart& chart, std::vector<Term> terms);

  const Chart& chart() const { return chart_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Constant coefficient (zero when absent).
  Rational constant_term() const;
  std::uint32_t total_degree() const { return terms_.empty() ? 0 : terms_.back().mono.degree; }

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  Poly operator-() const;

  friend bool operator==(const Poly& a, const Poly& b);

  // Exact partial derivative with respect to coordinate i.
  Poly partial(std::size_t i) const;

  // Re-expresses the polynomial over `target`, sending coordinate k to
  // coordinate index_map[k].
  Poly embed(const Chart& target, const std::vector<std::size_t>& index_map) const;

  // Highest coordinate index that occurs, or -1 for constants.
  int max_variable() const;

 private:
  Chart chart_;
  std::vector<Term> terms_;
};

enum class CombineKind { add, sub, mul };

// a ⊕ b for kind ∈ {add, sub, mul}. Throws Error(ChartMismatch).
Poly poly_combine(const Poly& a, const Poly& b, CombineKind kind);

// Throws Error(IndexOutOfRange) when i is not a coordinate of the chart.
Poly poly_partial(const Poly& a, std::size_t i);

// Canonical text: terms in descending grlex order, e.g. "x^2 y - 1/2 z + 3".
std::string to_string(const Poly& p);

// Parses the polynomial grammar over the chart's coordinate names.
Poly parse_poly(const Chart& chart, std::string_view text);

}  // namespace fncalc
