#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace k3deg {

using Int = mpz_class;
using Rat = mpq_class;

// "p/q", or "p" when q == 1.
std::string to_string(const Rat& r);
Rat parse_rat(std::string_view text);

Int lcm(const Int& a, const Int& b);
Rat rat_abs(const Rat& r);
double to_double(const Rat& r);

// Rat extended by -inf and +inf. Root valuations at s = infinity / s = 0
// and the valuation of the zero coefficient live here.
class ExtRat {
 public:
  enum class Kind { NegInf, Finite, PosInf };

  ExtRat() = default;
  ExtRat(Rat v) : kind_(Kind::Finite), value_(std::move(v)) {}  // NOLINT
  ExtRat(long v) : kind_(Kind::Finite), value_(v) {}             // NOLINT

  static ExtRat pos_inf() { return ExtRat(Kind::PosInf); }
  static ExtRat neg_inf() { return ExtRat(Kind::NegInf); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  bool is_pos_inf() const { return kind_ == Kind::PosInf; }
  bool is_neg_inf() const { return kind_ == Kind::NegInf; }
  // Precondition: is_finite().
  const Rat& value() const;

  ExtRat operator-() const;
  friend bool operator==(const ExtRat& a, const ExtRat& b);
  friend std::strong_ordering operator<=>(const ExtRat& a, const ExtRat& b);

  std::string str() const;

 private:
  explicit ExtRat(Kind k) : kind_(k) {}
  Kind kind_ = Kind::Finite;
  Rat value_;
};

}  // namespace k3deg
