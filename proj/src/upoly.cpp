#include "k3deg/upoly.hpp"

#include <algorithm>
#include <cassert>

namespace k3deg {

UPoly::UPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rat UPoly::coeff(int i) const {
  return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Rat(0);
}

UPoly UPoly::derivative() const {
  std::vector<Rat> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
  return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
  if (c_.empty()) return *this;
  std::vector<Rat> out = c_;
  Rat lead = c_.back();
  for (auto& x : out) x /= lead;
  return UPoly(std::move(out));
}

Rat UPoly::eval(const Rat& x) const {
  Rat acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Rat> out(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) + b.coeff(i);
  return UPoly(std::move(out));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
  std::vector<Rat> out(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) - b.coeff(i);
  return UPoly(std::move(out));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rat> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  return UPoly(std::move(out));
}

UPoly operator*(const Rat& k, const UPoly& a) {
  std::vector<Rat> out = a.c_;
  for (auto& x : out) x *= k;
  return UPoly(std::move(out));
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& a, const UPoly& b) {
  assert(!b.is_zero());
  std::vector<Rat> rem = a.c_;
  const int db = b.degree();
  std::vector<Rat> quot(std::max(0, a.degree() - db + 1));
  for (int i = a.degree(); i >= db; --i) {
    if (rem[i] == 0) continue;
    Rat q = rem[i] / b.c_.back();
    quot[i - db] = q;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= q * b.c_[j];
  }
  return {UPoly(std::move(quot)), UPoly(std::move(rem))};
}

UPoly UPoly::gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

bool UPoly::is_squarefree() const {
  if (degree() <= 0) return true;
  return gcd(*this, derivative()).degree() == 0;
}

std::string UPoly::str(char var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    if (c_[i] == 0) continue;
    if (!out.empty()) out += c_[i] < 0 ? " - " : " + ";
    else if (c_[i] < 0) out += "-";
    Rat mag = rat_abs(c_[i]);
    if (i == 0 || mag != 1) out += to_string(mag);
    if (i > 0) {
      if (mag != 1) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

}  // namespace k3deg
