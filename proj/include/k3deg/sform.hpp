#pragma once

#include <optional>
#include <string>
#include <vector>

#include "k3deg/laurent.hpp"
#include "k3deg/upoly.hpp"

namespace k3deg {

// Binary form of fixed formal degree over Q((t^(1/m))), written in the affine
// coordinate s = s1/s2. A missing top coefficient means a root at s = inf.
class SForm {
 public:
  SForm() = default;
  explicit SForm(int formal_degree);
  SForm(int formal_degree, std::vector<TLaurent> coeffs);

  int formal_degree() const { return degree_; }
  const std::vector<TLaurent>& coeffs() const { return c_; }
  const TLaurent& coeff(int i) const { return c_.at(i); }
  void set_coeff(int i, TLaurent value) { c_.at(i) = std::move(value); }

  bool is_zero() const;
  // Highest / lowest index with nonzero coefficient; -1 for the zero form.
  int actual_degree() const;
  int lowest_index() const;
  // Minimum coefficient valuation; +inf for the zero form.
  ExtRat min_val() const;
  Int ramification() const;

  friend SForm operator+(const SForm& a, const SForm& b);
  friend SForm operator-(const SForm& a, const SForm& b);
  // Product of forms: formal degrees add.
  friend SForm operator*(const SForm& a, const SForm& b);
  friend SForm operator*(const TLaurent& k, const SForm& a);
  friend bool operator==(const SForm& a, const SForm& b) = default;

  SForm pow(int k) const;
  SForm shifted(const Rat& exponent) const;  // multiply every coefficient by t^e
  SForm reversed() const;                     // s -> 1/s as binary forms
  SForm with_formal_degree(int d) const;      // requires actual_degree() <= d

  // Exact quotient a/b over Q(t)[s] when it has Laurent coefficients.
  static std::optional<SForm> divide_exact(const SForm& a, const SForm& b,
                                           int quotient_degree);

  // Values at t = 0; requires min_val() >= 0.
  std::vector<Rat> limit() const;
  UPoly specialize(const Rat& u, const Int& m) const;

  std::string str() const;

 private:
  int degree_ = 0;
  std::vector<TLaurent> c_;
};

}  // namespace k3deg
