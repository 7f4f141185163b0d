#include "k3deg/rational.hpp"

#include <cassert>

#include "k3deg/error.hpp"

namespace k3deg {

std::string to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat parse_rat(std::string_view text) {
  Rat r;
  if (r.set_str(std::string(text), 10) != 0 || r.get_den() == 0) {
    throw Error(ErrorCode::Parse, "not a rational number: " + std::string(text));
  }
  r.canonicalize();
  return r;
}

Int lcm(const Int& a, const Int& b) {
  Int out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

double to_double(const Rat& r) { return r.get_d(); }

const Rat& ExtRat::value() const {
  assert(is_finite());
  return value_;
}

ExtRat ExtRat::operator-() const {
  switch (kind_) {
    case Kind::NegInf: return pos_inf();
    case Kind::PosInf: return neg_inf();
    case Kind::Finite: return ExtRat(Rat(-value_));
  }
  return *this;
}

bool operator==(const ExtRat& a, const ExtRat& b) {
  if (a.kind_ != b.kind_) return false;
  return !a.is_finite() || a.value_ == b.value_;
}

std::strong_ordering operator<=>(const ExtRat& a, const ExtRat& b) {
  auto rank = [](ExtRat::Kind k) {
    return k == ExtRat::Kind::NegInf ? 0 : (k == ExtRat::Kind::Finite ? 1 : 2);
  };
  if (a.kind_ != b.kind_) return rank(a.kind_) <=> rank(b.kind_);
  if (!a.is_finite()) return std::strong_ordering::equal;
  int c = cmp(a.value_, b.value_);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string ExtRat::str() const {
  switch (kind_) {
    case Kind::NegInf: return "-inf";
    case Kind::PosInf: return "+inf";
    case Kind::Finite: return to_string(value_);
  }
  return "?";
}

}  // namespace k3deg
