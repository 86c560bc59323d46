#include "fncalc/poly.hpp"

#include <algorithm>

#include "fncalc/error.hpp"

namespace fncalc {

Monomial Monomial::variable(std::size_t i) {
  Monomial m;
  m.exps.at(i) = 1;
  m.degree = 1;
  return m;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxDim; ++i) m.exps[i] = static_cast<std::uint16_t>(exps[i] + other.exps[i]);
  m.degree = degree + other.degree;
  return m;
}

namespace {

bool term_less(const Term& a, const Term& b) { return grlex_less(a.mono, b.mono); }

// Sorts, merges equal monomials, and drops zeros.
void normalize(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(), term_less);
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    if (out != i) terms[out] = std::move(terms[i]);
    while (j < terms.size() && terms[j].mono == terms[out].mono) {
      terms[out].coeff += terms[j].coeff;
      ++j;
    }
    if (sgn(terms[out].coeff) != 0) ++out;
    i = j;
  }
  terms.resize(out);
}

// Adopts the chart of `other` when `self` is unbound.
void unify_chart(Chart& self, const Chart& other, std::string_view what) {
  if (!other.bound()) return;
  if (!self.bound()) {
    self = other;
    return;
  }
  require_same_chart(self, other, what);
}

template <typename Op>
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, Op op) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && term_less(a[i], b[j]))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || term_less(b[j], a[i])) {
      out.push_back(Term{b[j].mono, op(Rational(0), b[j].coeff)});
      ++j;
    } else {
      Rational c = op(a[i].coeff, b[j].coeff);
      if (sgn(c) != 0) out.push_back(Term{a[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Poly::Poly(Chart chart, const Rational& c) : chart_(std::move(chart)) {
  if (sgn(c) != 0) terms_.push_back(Term{Monomial{}, c});
}

Poly Poly::variable(const Chart& chart, std::size_t i) {
  if (i >= chart.dim()) throw Error(ErrorKind::IndexOutOfRange, "coordinate index out of range");
  return monomial(chart, Monomial::variable(i), Rational(1));
}

Poly Poly::monomial(const Chart& chart, const Monomial& m, const Rational& c) {
  Poly p(chart);
  if (sgn(c) != 0) p.terms_.push_back(Term{m, c});
  return p;
}

Poly Poly::from_terms(const Chart& chart, std::vector<Term> terms) {
  Poly p(chart);
  normalize(terms);
  p.terms_ = std::move(terms);
  return p;
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.degree == 0); }

Rational Poly::constant_term() const {
  if (!terms_.empty() && terms_[0].mono.degree == 0) return terms_[0].coeff;
  return Rational(0);
}

Poly& Poly::operator+=(const Poly& other) {
  unify_chart(chart_, other.chart_, "polynomial add");
  if (other.terms_.empty()) return *this;
  if (terms_.empty()) {
    terms_ = other.terms_;
    return *this;
  }
  terms_ = merge_terms(terms_, other.terms_, [](const Rational& x, const Rational& y) { return Rational(x + y); });
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  unify_chart(chart_, other.chart_, "polynomial subtract");
  if (other.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, other.terms_, [](const Rational& x, const Rational& y) { return Rational(x - y); });
  return *this;
}

Poly& Poly::operator*=(const Poly& other) {
  *this = *this * other;
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Chart chart = a.chart_;
  unify_chart(chart, b.chart_, "polynomial multiply");
  Poly out(chart);
  if (a.terms_.empty() || b.terms_.empty()) return out;
  const Poly& small = a.terms_.size() <= b.terms_.size() ? a : b;
  const Poly& large = a.terms_.size() <= b.terms_.size() ? b : a;
  if (small.terms_.size() == 1) {
    // Multiplying by a monomial preserves a monomial order.
    const Term& s = small.terms_[0];
    out.terms_.reserve(large.terms_.size());
    for (const auto& t : large.terms_) {
      Term p{t.mono * s.mono, Rational()};
      mpq_mul(p.coeff.get_mpq_t(), t.coeff.get_mpq_t(), s.coeff.get_mpq_t());
      out.terms_.push_back(std::move(p));
    }
    return out;
  }
  std::vector<Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : small.terms_) {
    for (const auto& t : large.terms_) {
      Term p{s.mono * t.mono, Rational()};
      mpq_mul(p.coeff.get_mpq_t(), s.coeff.get_mpq_t(), t.coeff.get_mpq_t());
      prod.push_back(std::move(p));
    }
  }
  normalize(prod);
  out.terms_ = std::move(prod);
  return out;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (a.chart_.bound() && b.chart_.bound() && !(a.chart_ == b.chart_)) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  }
  return true;
}

Poly Poly::partial(std::size_t i) const {
  if (chart_.bound() && i >= chart_.dim()) {
    throw Error(ErrorKind::IndexOutOfRange, "partial derivative index " + std::to_string(i) + " out of range");
  }
  Poly out(chart_);
  for (const auto& t : terms_) {
    if (t.mono.exps[i] == 0) continue;
    Term d{t.mono, t.coeff * t.mono.exps[i]};
    --d.mono.exps[i];
    --d.mono.degree;
    out.terms_.push_back(std::move(d));
  }
  // Lowering one exponent in every surviving term preserves grlex order.
  return out;
}

Poly Poly::embed(const Chart& target, const std::vector<std::size_t>& index_map) const {
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) {
    Term e{Monomial{}, t.coeff};
    for (std::size_t k = 0; k < index_map.size(); ++k) {
      if (t.mono.exps[k] == 0) continue;
      if (index_map[k] >= target.dim()) throw Error(ErrorKind::IndexOutOfRange, "embedding target index out of range");
      e.mono.exps[index_map[k]] = static_cast<std::uint16_t>(e.mono.exps[index_map[k]] + t.mono.exps[k]);
    }
    e.mono.degree = t.mono.degree;
    terms.push_back(std::move(e));
  }
  return from_terms(target, std::move(terms));
}

int Poly::max_variable() const {
  int best = -1;
  for (const auto& t : terms_) {
    for (std::size_t i = 0; i < kMaxDim; ++i) {
      if (t.mono.exps[i] != 0 && static_cast<int>(i) > best) best = static_cast<int>(i);
    }
  }
  return best;
}

Poly poly_combine(const Poly& a, const Poly& b, CombineKind kind) {
  if (a.chart().bound() && b.chart().bound()) require_same_chart(a.chart(), b.chart(), "poly_combine");
  switch (kind) {
    case CombineKind::add: return a + b;
    case CombineKind::sub: return a - b;
    case CombineKind::mul: return a * b;
  }
  return Poly();
}

Poly poly_partial(const Poly& a, std::size_t i) {
  if (!a.chart().bound() || i >= a.chart().dim()) {
    throw Error(ErrorKind::IndexOutOfRange, "partial derivative index " + std::to_string(i) + " out of range");
  }
  return a.partial(i);
}

}  // namespace fncalc
