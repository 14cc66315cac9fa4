#pragma once

// Multivariate polynomials over an exact coefficient ring, kept in
// canonical form (graded lexicographic term order, no zero terms).
// Two polynomials are equal iff their canonical forms are identical,
// which is what every "identity holds" check in this project reduces to.

#include "lingcs/rational.hpp"

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace lingcs {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimError : Error {
  using Error::Error;
};

struct ParseError : Error {
  size_t pos; // byte offset into the input text
  ParseError(std::string msg, size_t p)
      : Error(std::move(msg) + " (at position " + std::to_string(p) + ")"), pos(p) {}
};

// A single coordinate chart x1..xm.  Everything in the engine lives over
// one chart; there is no atlas.
struct Chart {
  int dim = 0;

  explicit Chart(int m) : dim(m)
  {
    if (m < 1) throw DimError("chart dimension must be positive");
  }
  bool operator==(const Chart&) const = default;

  std::string coord_name(int i) const // 0-based index
  {
    return "x" + std::to_string(i + 1);
  }
};

using Expo = std::vector<uint32_t>;

inline uint32_t total_degree(const Expo& e)
{
  uint32_t d = 0;
  for (uint32_t k : e) d += k;
  return d;
}

// Graded lexicographic order: compare total degree first, then exponents
// left to right.  The map below uses "greater" so iteration yields the
// leading term first, matching the printed form.
struct GradedLexGreater {
  bool operator()(const Expo& a, const Expo& b) const
  {
    uint32_t da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return a > b; // lexicographic on exponent vectors
  }
};

template <class C>
class Poly {
public:
  using Terms = std::map<Expo, C, GradedLexGreater>;

  Poly() = default;
  explicit Poly(int nvars) : nvars_(nvars) {}

  static Poly zero(int nvars) { return Poly(nvars); }

  static Poly constant(int nvars, C c)
  {
    Poly p(nvars);
    if (!is_zero(c)) p.terms_.emplace(Expo(nvars, 0), std::move(c));
    return p;
  }

  static Poly coordinate(int nvars, int i) // 0-based
  {
    if (i < 0 || i >= nvars) throw DimError("coordinate index out of range");
    Poly p(nvars);
    Expo e(nvars, 0);
    e[i] = 1;
    p.terms_.emplace(std::move(e), C(1));
    return p;
  }

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }

  uint32_t degree() const // degree of the zero polynomial reported as 0
  {
    return terms_.empty() ? 0 : total_degree(terms_.begin()->first);
  }

  void add_term(const Expo& e, const C& c)
  {
    if (lingcs::is_zero(c)) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (lingcs::is_zero(it->second)) terms_.erase(it);
    }
  }

  bool operator==(const Poly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

  Poly operator-() const
  {
    Poly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }

  Poly& operator+=(const Poly& o)
  {
    check_same(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Poly& operator-=(const Poly& o)
  {
    check_same(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
  friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }

  friend Poly operator*(const Poly& a, const Poly& b)
  {
    a.check_same(b);
    Poly r(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Expo e(a.nvars_);
        for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    return r;
  }
  Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }

  Poly operator*(const C& c) const
  {
    Poly r(nvars_);
    if (lingcs::is_zero(c)) return r;
    for (const auto& [e, k] : terms_) r.add_term(e, k * c);
    return r;
  }

  // d/dx_i, exact.
  Poly partial(int i) const
  {
    if (i < 0 || i >= nvars_) throw DimError("partial: coordinate index out of range");
    Poly r(nvars_);
    for (const auto& [e, c] : terms_) {
      if (e[i] == 0) continue;
      Expo d = e;
      d[i] -= 1;
      r.add_term(d, c * C(int(e[i])));
    }
    return r;
  }

  // Evaluate at a rational point (used only for reporting, e.g. positivity
  // of a candidate metric at sample points; never for identity checks).
  C eval(const std::vector<Rat>& x) const
  {
    if (int(x.size()) != nvars_) throw DimError("eval: wrong point dimension");
    C acc(0);
    for (const auto& [e, c] : terms_) {
      C t = c;
      for (int i = 0; i < nvars_; ++i)
        for (uint32_t k = 0; k < e[i]; ++k) t *= C(x[i]);
      acc += t;
    }
    return acc;
  }

private:
  void check_same(const Poly& o) const
  {
    if (nvars_ != o.nvars_)
      throw DimError("polynomial arity mismatch (" + std::to_string(nvars_) + " vs " +
                     std::to_string(o.nvars_) + " variables)");
  }

  int nvars_ = 0;
  Terms terms_;
};

using Scalar = Poly<Rat>;   // real polynomial coefficient functions
using CScalar = Poly<CRat>; // complexified coefficient functions

inline CScalar complexify(const Scalar& p)
{
  CScalar r(p.nvars());
  for (const auto& [e, c] : p.terms()) r.add_term(e, CRat(c));
  return r;
}

inline CScalar conj(const CScalar& p)
{
  CScalar r(p.nvars());
  for (const auto& [e, c] : p.terms()) r.add_term(e, conj(c));
  return r;
}

inline CScalar imag_unit_times(const CScalar& p)
{
  CScalar r(p.nvars());
  for (const auto& [e, c] : p.terms()) r.add_term(e, CRat::i() * c);
  return r;
}

// Strict: refuses to drop a nonzero imaginary part.
inline Scalar real_part(const CScalar& p)
{
  Scalar r(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    if (!c.im.is_zero())
      throw Error("real_part: input has a nonzero imaginary component");
    r.add_term(e, c.re);
  }
  return r;
}

inline Scalar real_component(const CScalar& p) // Re(p), no realness demand
{
  Scalar r(p.nvars());
  for (const auto& [e, c] : p.terms()) r.add_term(e, c.re);
  return r;
}

inline Scalar imag_component(const CScalar& p)
{
  Scalar r(p.nvars());
  for (const auto& [e, c] : p.terms()) r.add_term(e, c.im);
  return r;
}

// ---------------------------------------------------------------------------
// Printing.  One canonical text form per polynomial: terms in descending
// graded-lex order, rational coefficients as p/q, explicit '*' between
// factors, '^' for powers.  parse(to_string(p)) == p.

namespace detail {

inline bool needs_parens(const Rat&) { return false; }
inline bool needs_parens(const CRat& c) { return !c.re.is_zero() && !c.im.is_zero(); }

inline bool is_one(const Rat& c) { return c == 1; }
inline bool is_minus_one(const Rat& c) { return c == -1; }
inline bool is_one(const CRat& c) { return c.im.is_zero() && c.re == 1; }
inline bool is_minus_one(const CRat& c) { return c.im.is_zero() && c.re == -1; }

// Leading-sign extraction so "a - b" prints instead of "a + -b".
inline bool starts_negative(const Rat& c) { return c < 0; }
inline bool starts_negative(const CRat& c)
{
  if (!c.re.is_zero() && !c.im.is_zero()) return false; // parenthesised anyway
  return c.re.is_zero() ? c.im < 0 : c.re < 0;
}
inline Rat negate(const Rat& c) { return -c; }
inline CRat negate(const CRat& c) { return -c; }

} // namespace detail

template <class C>
std::string to_string(const Poly<C>& p)
{
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    C coeff = c;
    if (first) {
      first = false;
    } else if (detail::starts_negative(coeff)) {
      out += " - ";
      coeff = detail::negate(coeff);
    } else {
      out += " + ";
    }
    std::string mono;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      std::string cs = to_string(coeff);
      out += detail::needs_parens(coeff) ? "(" + cs + ")" : cs;
    } else if (detail::is_one(coeff)) {
      out += mono;
    } else if (detail::is_minus_one(coeff)) {
      out += "-" + mono;
    } else {
      std::string cs = to_string(coeff);
      out += (detail::needs_parens(coeff) ? "(" + cs + ")" : cs) + "*" + mono;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parsing.  Grammar (whitespace insignificant):
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ['^' uint]
//   atom   := rational | 'i' | coordinate | '(' expr ')' | '-' atom
//   rational := uint ['/' uint]     coordinate := 'x' uint
// 'i' is admitted only when parsing complexified scalars.

namespace detail {

template <class C>
class PolyParser {
public:
  PolyParser(std::string_view text, int nvars) : s_(text), n_(nvars) {}

  Poly<C> run()
  {
    Poly<C> p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return p;
  }

private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws()
  {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
  }

  bool eat(char c)
  {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) { ++pos_; return true; }
    return false;
  }

  char peek()
  {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  boost::multiprecision::cpp_int uint_lit()
  {
    skip_ws();
    size_t start = pos_;
    while (pos_ < s_.size() && s_[pos_] >= '0' && s_[pos_] <= '9') ++pos_;
    if (pos_ == start) fail("expected a number");
    return boost::multiprecision::cpp_int(std::string(s_.substr(start, pos_ - start)));
  }

  Poly<C> expr()
  {
    bool neg = eat('-');
    Poly<C> acc = term();
    if (neg) acc = -acc;
    for (;;) {
      if (eat('+')) acc += term();
      else if (eat('-')) acc -= term();
      else return acc;
    }
  }

  Poly<C> term()
  {
    Poly<C> acc = factor();
    while (eat('*')) acc *= factor();
    return acc;
  }

  Poly<C> factor()
  {
    Poly<C> base = atom();
    if (eat('^')) {
      auto k = uint_lit();
      Poly<C> acc = Poly<C>::constant(n_, C(1));
      for (boost::multiprecision::cpp_int j = 0; j < k; ++j) acc *= base;
      return acc;
    }
    return base;
  }

  Poly<C> atom()
  {
    char c = peek();
    if (c == '(') {
      eat('(');
      Poly<C> p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (c == '-') {
      eat('-');
      return -atom();
    }
    if (c == 'i') {
      ++pos_;
      if constexpr (std::is_same_v<C, CRat>) {
        return Poly<C>::constant(n_, CRat::i());
      } else {
        fail("imaginary unit is not allowed in a real scalar");
      }
    }
    if (c == 'x') {
      size_t at = pos_;
      ++pos_;
      auto idx = uint_lit();
      if (idx < 1 || idx > n_) {
        pos_ = at;
        fail("coordinate index out of range for this chart");
      }
      return Poly<C>::coordinate(n_, int(idx) - 1);
    }
    if (c >= '0' && c <= '9') {
      auto num = uint_lit();
      boost::multiprecision::cpp_int den = 1;
      if (eat('/')) {
        den = uint_lit();
        if (den == 0) fail("zero denominator");
      }
      return Poly<C>::constant(n_, C(Rat(num, den)));
    }
    fail("expected a rational, coordinate, 'i' or '('");
  }

  std::string_view s_;
  int n_;
  size_t pos_ = 0;
};

} // namespace detail

inline Scalar parse_scalar(std::string_view text, const Chart& chart)
{
  return detail::PolyParser<Rat>(text, chart.dim).run();
}

inline CScalar parse_cscalar(std::string_view text, const Chart& chart)
{
  return detail::PolyParser<CRat>(text, chart.dim).run();
}

} // namespace lingcs
