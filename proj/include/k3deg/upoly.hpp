#pragma once

#include <string>
#include <vector>

#include "k3deg/rational.hpp"

namespace k3deg {

// Dense univariate polynomial over Q, coefficient i multiplies s^i.
// Trailing zeros are trimmed; the zero polynomial has no coefficients.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rat> coeffs);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for 0
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(int i) const;

  UPoly derivative() const;
  UPoly monic() const;
  Rat eval(const Rat& x) const;

  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const Rat& k, const UPoly& a);
  friend bool operator==(const UPoly& a, const UPoly& b) = default;

  // Quotient and remainder; divisor must be nonzero.
  static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
  // Monic gcd; gcd(0, 0) = 0.
  static UPoly gcd(const UPoly& a, const UPoly& b);

  bool is_squarefree() const;
  std::string str(char var = 's') const;

 private:
  void trim();
  std::vector<Rat> c_;
};

}  // namespace k3deg
