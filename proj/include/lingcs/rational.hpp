#pragma once

// Exact coefficient rings: rationals and Gaussian rationals.
//
// All arithmetic in this project is exact.  Rationals are backed by
// boost::multiprecision so that iterated products of polynomial
// coefficients can never overflow; Gaussian rationals are a thin pair
// on top of that.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace lingcs {

using Rat = boost::multiprecision::cpp_rational;

inline bool is_zero(const Rat& r) { return r.is_zero(); }
inline Rat conj(const Rat& r) { return r; }

inline std::string to_string(const Rat& r)
{
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

// a + b*i with a, b rational.  Only ring operations and division by
// nonzero elements are ever needed; there are no radicals anywhere.
struct CRat {
  Rat re;
  Rat im;

  CRat() = default;
  CRat(Rat r) : re(std::move(r)) {}              // NOLINT: implicit on purpose
  CRat(int n) : re(n) {}                         // NOLINT
  CRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

  static CRat i() { return CRat(Rat(0), Rat(1)); }

  bool operator==(const CRat&) const = default;
};

inline bool is_zero(const CRat& c) { return c.re.is_zero() && c.im.is_zero(); }
inline CRat conj(const CRat& c) { return CRat(c.re, -c.im); }

inline CRat operator-(const CRat& a) { return CRat(-a.re, -a.im); }
inline CRat operator+(const CRat& a, const CRat& b) { return CRat(a.re + b.re, a.im + b.im); }
inline CRat operator-(const CRat& a, const CRat& b) { return CRat(a.re - b.re, a.im - b.im); }
inline CRat operator*(const CRat& a, const CRat& b)
{
  return CRat(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
}
inline CRat& operator+=(CRat& a, const CRat& b) { a = a + b; return a; }
inline CRat& operator-=(CRat& a, const CRat& b) { a = a - b; return a; }
inline CRat& operator*=(CRat& a, const CRat& b) { a = a * b; return a; }

inline CRat operator/(const CRat& a, const CRat& b)
{
  Rat n = b.re * b.re + b.im * b.im;
  if (n.is_zero()) throw std::domain_error("division by zero Gaussian rational");
  return CRat((a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n);
}

// "3", "-1/2", "i", "2*i", "1-2*i" (the composite forms are produced by
// the polynomial printer; parsing of composites happens at that level).
std::string to_string_cr(const CRat& c);

inline std::string to_string(const CRat& c)
{
  return to_string_cr(c);
}

inline std::string to_string_cr(const CRat& c)
{
  if (c.im.is_zero()) return to_string(c.re);
  std::string im;
  if (c.im == 1) im = "i";
  else if (c.im == -1) im = "-i";
  else im = to_string(c.im) + "*i";
  if (c.re.is_zero()) return im;
  std::string s = to_string(c.re);
  if (im[0] != '-') s += "+";
  return s + im;
}

} // namespace lingcs
