#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>

#include "k3deg/rational.hpp"

namespace k3deg {

// Exponent of t: a reduced fraction of machine integers. Exponents stay tiny
// (|num|, den well below 2^31), so comparisons avoid GMP.
class Exp {
 public:
  Exp() = default;
  Exp(long num, long den = 1);  // NOLINT
  explicit Exp(const Rat& r);

  long num() const { return num_; }
  long den() const { return den_; }
  Rat rat() const { return Rat(num_, den_); }

  friend Exp operator+(const Exp& a, const Exp& b);
  friend Exp operator-(const Exp& a) { return Exp(-a.num_, a.den_); }
  friend bool operator==(const Exp&, const Exp&) = default;
  friend std::strong_ordering operator<=>(const Exp& a, const Exp& b) {
    return static_cast<__int128>(a.num_) * b.den_ <=> static_cast<__int128>(b.num_) * a.den_;
  }

 private:
  long num_ = 0;
  long den_ = 1;
};

// Finite Laurent-Puiseux polynomial in t with rational exponents and
// rational coefficients. Zero coefficients are never stored.
class TLaurent {
 public:
  using Terms = std::map<Exp, Rat>;  // exponent -> coefficient

  TLaurent() = default;
  TLaurent(const Rat& c) { add_term(Exp(0), c); }  // NOLINT
  TLaurent(long c) : TLaurent(Rat(c)) {}            // NOLINT
  static TLaurent monomial(const Rat& coeff, const Rat& exponent);

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }

  // Least exponent with nonzero coefficient; +inf for zero.
  ExtRat val() const;
  // Coefficient of t^val; zero for the zero series.
  Rat leading_coeff() const;
  Rat coeff(const Rat& exponent) const;
  // Coefficient of t^0; the value at t = 0 when val() >= 0.
  Rat constant_term() const { return coeff(Rat(0)); }

  // Least m >= 1 such that all exponents lie in (1/m)Z.
  Int ramification() const;

  TLaurent shifted(const Rat& exponent) const;  // multiply by t^exponent
  TLaurent operator-() const;
  TLaurent& operator+=(const TLaurent& o);
  TLaurent& operator-=(const TLaurent& o);
  friend TLaurent operator+(TLaurent a, const TLaurent& b) { return a += b; }
  friend TLaurent operator-(TLaurent a, const TLaurent& b) { return a -= b; }
  friend TLaurent operator*(const TLaurent& a, const TLaurent& b);
  friend bool operator==(const TLaurent& a, const TLaurent& b) = default;

  // a/b when the quotient is again a finite Laurent polynomial.
  static std::optional<TLaurent> divide_exact(const TLaurent& a, const TLaurent& b);

  // Value at t^(1/m) = u. Requires every exponent * m to be an integer.
  Rat specialize(const Rat& u, const Int& m) const;

  // Canonical text in the family grammar, e.g. "3/2*t^(-2) + t".
  std::string str() const;

 private:
  void add_term(const Exp& exponent, const Rat& coeff);
  Terms terms_;
};

}  // namespace k3deg
