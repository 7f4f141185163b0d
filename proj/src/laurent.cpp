#include "k3deg/laurent.hpp"

#include <cassert>
#include <vector>

#include <numeric>

#include "k3deg/error.hpp"

namespace k3deg {

namespace {

constexpr long kExpLimit = 1L << 40;

long checked(__int128 v) {
  if (v > kExpLimit || v < -kExpLimit)
    throw Error(ErrorCode::Precondition, "t-exponent out of range");
  return static_cast<long>(v);
}

}  // namespace

Exp::Exp(long num, long den) {
  assert(den != 0);
  if (den < 0) num = -num, den = -den;
  const long g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Exp::Exp(const Rat& r) {
  if (!r.get_num().fits_slong_p() || !r.get_den().fits_slong_p())
    throw Error(ErrorCode::Precondition, "t-exponent out of range");
  *this = Exp(checked(r.get_num().get_si()), checked(r.get_den().get_si()));
}

Exp operator+(const Exp& a, const Exp& b) {
  if (a.den_ == b.den_) return Exp(checked(static_cast<__int128>(a.num_) + b.num_), a.den_);
  return Exp(checked(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_),
             checked(static_cast<__int128>(a.den_) * b.den_));
}

TLaurent TLaurent::monomial(const Rat& coeff, const Rat& exponent) {
  TLaurent out;
  out.add_term(Exp(exponent), coeff);
  return out;
}

void TLaurent::add_term(const Exp& exponent, const Rat& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

ExtRat TLaurent::val() const {
  if (terms_.empty()) return ExtRat::pos_inf();
  return ExtRat(terms_.begin()->first.rat());
}

Rat TLaurent::leading_coeff() const {
  return terms_.empty() ? Rat(0) : terms_.begin()->second;
}

Rat TLaurent::coeff(const Rat& exponent) const {
  auto it = terms_.find(Exp(exponent));
  return it == terms_.end() ? Rat(0) : it->second;
}

Int TLaurent::ramification() const {
  Int m = 1;
  for (const auto& [e, c] : terms_) m = lcm(m, Int(e.den()));
  return m;
}

TLaurent TLaurent::shifted(const Rat& exponent) const {
  TLaurent out;
  const Exp shift(exponent);
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + shift, c);
  return out;
}

TLaurent TLaurent::operator-() const {
  TLaurent out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

TLaurent& TLaurent::operator+=(const TLaurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

TLaurent& TLaurent::operator-=(const TLaurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

TLaurent operator*(const TLaurent& a, const TLaurent& b) {
  TLaurent out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

std::optional<TLaurent> TLaurent::divide_exact(const TLaurent& a, const TLaurent& b) {
  assert(!b.is_zero());
  if (a.is_zero()) return TLaurent{};
  // Scale exponents to integers, then long division in Q[tau] with both
  // operands shifted so their lowest term sits at tau^0.
  Int m = lcm(a.ramification(), b.ramification());
  auto to_dense = [&m](const TLaurent& p, Rat& base) {
    base = p.terms_.begin()->first.rat();
    std::vector<Rat> dense;
    for (const auto& [e, c] : p.terms_) {
      Rat k = (e.rat() - base) * m;
      assert(k.get_den() == 1);
      std::size_t idx = k.get_num().get_ui();
      if (dense.size() <= idx) dense.resize(idx + 1);
      dense[idx] = c;
    }
    return dense;
  };
  Rat base_a, base_b;
  std::vector<Rat> num = to_dense(a, base_a);
  const std::vector<Rat> den = to_dense(b, base_b);
  if (num.size() < den.size()) return std::nullopt;
  // Division from the low end: den[0] != 0, so each step clears num[i].
  std::vector<Rat> quot(num.size() - den.size() + 1);
  for (std::size_t i = 0; i < quot.size(); ++i) {
    if (num[i] == 0) continue;
    Rat q = num[i] / den[0];
    quot[i] = q;
    for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= q * den[j];
  }
  for (const auto& r : num)
    if (r != 0) return std::nullopt;
  TLaurent out;
  for (std::size_t i = 0; i < quot.size(); ++i)
    out.add_term(Exp(Rat(base_a - base_b + Rat(static_cast<long>(i)) / m)), quot[i]);
  return out;
}

Rat TLaurent::specialize(const Rat& u, const Int& m) const {
  Rat out = 0;
  for (const auto& [e, c] : terms_) {
    Rat k = e.rat() * m;
    assert(k.get_den() == 1);
    long p = k.get_num().get_si();
    Rat power = 1;
    Rat base = p >= 0 ? u : Rat(1 / u);
    for (long i = 0; i < (p >= 0 ? p : -p); ++i) power *= base;
    out += c * power;
  }
  return out;
}

namespace {

std::string exponent_text(const Exp& e) {
  if (e.den() == 1 && e.num() >= 0) return std::to_string(e.num());
  return "(" + to_string(e.rat()) + ")";
}

}  // namespace

std::string TLaurent::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rat mag = rat_abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      out += to_string(mag);
      continue;
    }
    if (mag != 1) out += to_string(mag) + "*";
    out += "t";
    if (e != 1) out += "^" + exponent_text(e);
  }
  return out;
}

}  // namespace k3deg
