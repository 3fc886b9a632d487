#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "steiner/error.hpp"
#include "steiner/matrix.hpp"
#include "steiner/monomial.hpp"
#include "steiner/scalar.hpp"

namespace steiner {

struct Term {
  Monomial m;
  Scalar c;
};

// Multivariate polynomial: terms sorted strictly descending in the active
// order, no zero coefficients, all coefficients from one field.  The zero
// polynomial has no terms but still remembers arity, order and field.
class Poly {
 public:
  Poly() : nvars_(0), order_(MonomialOrder::Grevlex) {}

  Poly(std::size_t nvars, MonomialOrder order, Field f)
      : nvars_(nvars), order_(order), field_(f) {}

  static Poly zero(std::size_t nvars, MonomialOrder order = MonomialOrder::Grevlex,
                   Field f = Field::rationals()) {
    return Poly(nvars, order, f);
  }

  static Poly constant(const Scalar& c, std::size_t nvars,
                       MonomialOrder order = MonomialOrder::Grevlex) {
    Poly p(nvars, order, c.field());
    if (!c.is_zero()) p.terms_.push_back({Monomial(nvars), c});
    return p;
  }

  static Poly variable(std::size_t i, std::size_t nvars,
                       MonomialOrder order = MonomialOrder::Grevlex,
                       Field f = Field::rationals()) {
    require(i < nvars, "variable index out of range");
    Poly p(nvars, order, f);
    Monomial m(nvars);
    m.e[i] = 1;
    p.terms_.push_back({m, f.one()});
    return p;
  }

  static Poly from_terms(std::vector<Term> terms, std::size_t nvars, MonomialOrder order,
                         Field f) {
    Poly p(nvars, order, f);
    std::map<std::vector<unsigned>, Scalar> acc;
    for (auto& t : terms) {
      require(t.m.nvars() == nvars, "term arity mismatch");
      auto it = acc.find(t.m.e);
      if (it == acc.end())
        acc.emplace(t.m.e, t.c);
      else
        it->second += t.c;
    }
    for (auto& [e, c] : acc)
      if (!c.is_zero()) p.terms_.push_back({Monomial(e), c});
    p.sort_terms();
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  MonomialOrder order() const { return order_; }
  const Field& field() const { return field_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  const Term& leading() const {
    require(!terms_.empty(), "leading term of the zero polynomial");
    return terms_.front();
  }

  unsigned degree() const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.m.degree());
    return d;
  }

  bool is_homogeneous() const {
    for (const auto& t : terms_)
      if (t.m.degree() != terms_.front().m.degree()) return false;
    return true;
  }

  Poly with_order(MonomialOrder order) const {
    Poly p = *this;
    p.order_ = order;
    p.sort_terms();
    return p;
  }

  Poly operator-() const {
    Poly p = *this;
    for (auto& t : p.terms_) t.c = -t.c;
    return p;
  }

  Poly operator+(const Poly& o) const {
    check(o);
    Poly out(nvars_, order_, field_);
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
      int cmp;
      if (i == terms_.size())
        cmp = -1;
      else if (j == o.terms_.size())
        cmp = 1;
      else
        cmp = monomial_cmp(terms_[i].m, o.terms_[j].m, order_);
      if (cmp > 0) {
        out.terms_.push_back(terms_[i++]);
      } else if (cmp < 0) {
        out.terms_.push_back(o.terms_[j++]);
      } else {
        Scalar c = terms_[i].c + o.terms_[j].c;
        if (!c.is_zero()) out.terms_.push_back({terms_[i].m, c});
        ++i;
        ++j;
      }
    }
    return out;
  }

  Poly operator-(const Poly& o) const { return *this + (-o); }

  Poly operator*(const Poly& o) const {
    check(o);
    std::vector<Term> acc;
    acc.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
      for (const auto& b : o.terms_) acc.push_back({a.m * b.m, a.c * b.c});
    return from_terms(std::move(acc), nvars_, order_, field_);
  }

  Poly times_term(const Monomial& m, const Scalar& c) const {
    Poly out(nvars_, order_, field_);
    if (c.is_zero()) return out;
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.push_back({t.m * m, t.c * c});
    return out;
  }

  Poly scaled(const Scalar& c) const {
    Poly out(nvars_, order_, field_);
    if (c.is_zero()) return out;
    out.terms_ = terms_;
    for (auto& t : out.terms_) t.c *= c;
    return out;
  }

  Poly monic() const {
    require(!terms_.empty(), "monic of the zero polynomial");
    return scaled(terms_.front().c.inverse());
  }

  bool operator==(const Poly& o) const {
    if (nvars_ != o.nvars_ || terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
      if (!(terms_[i].m == o.terms_[i].m) || terms_[i].c != o.terms_[i].c) return false;
    return true;
  }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Scalar evaluate(const std::vector<Scalar>& point) const {
    require(point.size() == nvars_, "evaluation arity mismatch");
    Scalar total = field_.zero();
    for (const auto& t : terms_) {
      Scalar v = t.c;
      for (std::size_t i = 0; i < nvars_; ++i)
        for (unsigned k = 0; k < t.m.e[i]; ++k) v *= point[i];
      total += v;
    }
    return total;
  }

  // Substitutes images[i] for variable i.  All images share arity and order.
  Poly substitute(const std::vector<Poly>& images) const {
    require(images.size() == nvars_, "substitution arity mismatch");
    if (terms_.empty()) {
      return images.empty() ? Poly(0, order_, field_)
                            : Poly::zero(images[0].nvars(), images[0].order(), field_);
    }
    std::size_t out_nvars = images.empty() ? 0 : images[0].nvars();
    MonomialOrder out_order = images.empty() ? order_ : images[0].order();
    // Power tables per variable up to the largest exponent used.
    std::vector<std::vector<Poly>> pows(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) {
      unsigned maxe = 0;
      for (const auto& t : terms_) maxe = std::max(maxe, t.m.e[i]);
      pows[i].push_back(Poly::constant(field_.one(), out_nvars, out_order));
      for (unsigned k = 1; k <= maxe; ++k) pows[i].push_back(pows[i].back() * images[i]);
    }
    Poly total = Poly::zero(out_nvars, out_order, field_);
    for (const auto& t : terms_) {
      Poly prod = Poly::constant(t.c, out_nvars, out_order);
      for (std::size_t i = 0; i < nvars_; ++i)
        if (t.m.e[i] > 0) prod = prod * pows[i][t.m.e[i]];
      total = total + prod;
    }
    return total;
  }

  // Sets variable `var` to 1 and drops it; the remaining variables keep
  // their relative order.
  Poly dehomogenize(std::size_t var) const {
    require(var < nvars_, "variable index out of range");
    std::vector<Term> acc;
    for (const auto& t : terms_) {
      Monomial m(nvars_ - 1);
      std::size_t j = 0;
      for (std::size_t i = 0; i < nvars_; ++i)
        if (i != var) m.e[j++] = t.m.e[i];
      acc.push_back({m, t.c});
    }
    return from_terms(std::move(acc), nvars_ - 1, order_, field_);
  }

  // Substitutes variable i -> t^powers[i]; returns ascending univariate
  // coefficients in t.
  std::vector<Scalar> substitute_powers(const std::vector<unsigned>& powers) const {
    require(powers.size() == nvars_, "substitution arity mismatch");
    std::vector<Scalar> out;
    for (const auto& t : terms_) {
      std::size_t deg = 0;
      for (std::size_t i = 0; i < nvars_; ++i) deg += static_cast<std::size_t>(powers[i]) * t.m.e[i];
      if (out.size() <= deg) out.resize(deg + 1, field_.zero());
      out[deg] += t.c;
    }
    while (!out.empty() && out.back().is_zero()) out.pop_back();
    return out;
  }

 private:
  void check(const Poly& o) const {
    require(nvars_ == o.nvars_ && order_ == o.order_, "polynomial ring mismatch");
    if (field_ != o.field_) throw FieldMismatch("polynomials over different fields");
  }

  void sort_terms() {
    std::sort(terms_.begin(), terms_.end(), [this](const Term& a, const Term& b) {
      return monomial_cmp(a.m, b.m, order_) > 0;
    });
  }

  std::size_t nvars_;
  MonomialOrder order_;
  Field field_;
  std::vector<Term> terms_;
};

struct PolyMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<Poly> entries;

  PolyMatrix() = default;
  PolyMatrix(std::size_t r, std::size_t c, const Poly& fill)
      : rows(r), cols(c), entries(r * c, fill) {}

  Poly& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
  const Poly& at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
};

// Default variable names: x0, x1, ... with a caller-chosen letter.
inline std::vector<std::string> default_names(std::size_t nvars, char letter = 'x') {
  std::vector<std::string> names;
  names.reserve(nvars);
  for (std::size_t i = 0; i < nvars; ++i) names.push_back(std::string(1, letter) + std::to_string(i));
  return names;
}

inline std::string poly_to_string(const Poly& p, const std::vector<std::string>& names) {
  require(names.size() == p.nvars(), "name list arity mismatch");
  if (p.is_zero()) return "0";
  require(p.field().is_rational(), "string form is defined for rational coefficients");
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    BigRat c = t.c.rat();
    bool neg = c < 0;
    BigRat mag = neg ? BigRat(-c) : c;
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    std::string vars;
    for (std::size_t i = 0; i < p.nvars(); ++i) {
      if (t.m.e[i] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += names[i];
      if (t.m.e[i] > 1) vars += "^" + std::to_string(t.m.e[i]);
    }
    if (vars.empty()) {
      out += rational_str(mag);
    } else if (mag == 1) {
      out += vars;
    } else {
      out += rational_str(mag) + "*" + vars;
    }
  }
  return out;
}

// Strict parser for the string form produced above.  Grammar:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := rational | name ['^' digits]
// Implicit multiplication is rejected; names must match the supplied list.
inline Poly parse_poly(const std::string& src, const std::vector<std::string>& names,
                       MonomialOrder order = MonomialOrder::Grevlex,
                       Field f = Field::rationals()) {
  std::size_t nvars = names.size();
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < src.size() && (src[i] == ' ' || src[i] == '\t')) ++i;
  };
  auto fail = [&](const std::string& why) -> void {
    throw ParseError("polynomial parse error at offset " + std::to_string(i) + ": " + why);
  };

  auto parse_factor = [&](Scalar& coef, Monomial& mono) {
    skip_ws();
    if (i >= src.size()) fail("expected factor");
    if (src[i] >= '0' && src[i] <= '9') {
      std::size_t start = i;
      while (i < src.size() && src[i] >= '0' && src[i] <= '9') ++i;
      if (i < src.size() && src[i] == '/') {
        ++i;
        if (i >= src.size() || src[i] < '0' || src[i] > '9') fail("expected denominator digits");
        while (i < src.size() && src[i] >= '0' && src[i] <= '9') ++i;
      }
      coef *= f.from_rat(parse_rational(src.substr(start, i - start)));
      return;
    }
    // Longest matching variable name.
    std::size_t best = nvars, best_len = 0;
    for (std::size_t v = 0; v < nvars; ++v) {
      const std::string& nm = names[v];
      if (nm.size() > best_len && src.compare(i, nm.size(), nm) == 0) {
        best = v;
        best_len = nm.size();
      }
    }
    if (best == nvars) fail("unknown variable or symbol");
    i += best_len;
    unsigned exp = 1;
    if (i < src.size() && src[i] == '^') {
      ++i;
      if (i >= src.size() || src[i] < '0' || src[i] > '9') fail("expected exponent digits");
      std::size_t start = i;
      while (i < src.size() && src[i] >= '0' && src[i] <= '9') ++i;
      unsigned long v = std::stoul(src.substr(start, i - start));
      exp = static_cast<unsigned>(v);
    }
    mono.e[best] += exp;
  };

  std::vector<Term> acc;
  skip_ws();
  bool neg = false;
  if (i < src.size() && (src[i] == '-' || src[i] == '+')) {
    neg = src[i] == '-';
    ++i;
  }
  for (;;) {
    Scalar coef = neg ? -f.one() : f.one();
    Monomial mono(nvars);
    parse_factor(coef, mono);
    for (;;) {
      skip_ws();
      if (i < src.size() && src[i] == '*') {
        ++i;
        parse_factor(coef, mono);
      } else {
        break;
      }
    }
    skip_ws();
    if (i < src.size() && (src[i] >= '0' && src[i] <= '9')) fail("implicit multiplication");
    bool named = false;
    for (const auto& nm : names)
      if (src.compare(i, nm.size(), nm) == 0) named = true;
    if (named) fail("implicit multiplication");
    acc.push_back({mono, coef});
    if (i >= src.size()) break;
    if (src[i] == '+')
      neg = false;
    else if (src[i] == '-')
      neg = true;
    else
      fail("expected '+' or '-'");
    ++i;
    skip_ws();
  }
  return Poly::from_terms(std::move(acc), nvars, order, f);
}

// Determinant of a square polynomial matrix by cofactor expansion along the
// first row.  Intended for the small minor sizes that arise here.
inline Poly poly_det(const PolyMatrix& m, const std::vector<std::size_t>& rows,
                     const std::vector<std::size_t>& cols) {
  require(rows.size() == cols.size(), "minor shape mismatch");
  const Poly& sample = m.entries.front();
  if (rows.empty())
    return Poly::constant(sample.field().one(), sample.nvars(), sample.order());
  if (rows.size() == 1) return m.at(rows[0], cols[0]);
  Poly det = Poly::zero(sample.nvars(), sample.order(), sample.field());
  std::vector<std::size_t> subrows(rows.begin() + 1, rows.end());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    const Poly& piv = m.at(rows[0], cols[j]);
    if (piv.is_zero()) continue;
    std::vector<std::size_t> subcols;
    for (std::size_t jj = 0; jj < cols.size(); ++jj)
      if (jj != j) subcols.push_back(cols[jj]);
    Poly minor = poly_det(m, subrows, subcols);
    Poly contrib = piv * minor;
    det = (j % 2 == 0) ? det + contrib : det - contrib;
  }
  return det;
}

}  // namespace steiner
