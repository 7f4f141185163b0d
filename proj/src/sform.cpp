#include "k3deg/sform.hpp"

#include <algorithm>
#include <cassert>

#include "k3deg/error.hpp"

namespace k3deg {

SForm::SForm(int formal_degree) : degree_(formal_degree), c_(formal_degree + 1) {}

SForm::SForm(int formal_degree, std::vector<TLaurent> coeffs)
    : degree_(formal_degree), c_(std::move(coeffs)) {
  if (static_cast<int>(c_.size()) > formal_degree + 1) {
    for (std::size_t i = formal_degree + 1; i < c_.size(); ++i)
      if (!c_[i].is_zero())
        throw Error(ErrorCode::Degree, "form exceeds formal degree " +
                                           std::to_string(formal_degree));
  }
  c_.resize(formal_degree + 1);
}

bool SForm::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const TLaurent& x) { return x.is_zero(); });
}

int SForm::actual_degree() const {
  for (int i = degree_; i >= 0; --i)
    if (!c_[i].is_zero()) return i;
  return -1;
}

int SForm::lowest_index() const {
  for (int i = 0; i <= degree_; ++i)
    if (!c_[i].is_zero()) return i;
  return -1;
}

ExtRat SForm::min_val() const {
  ExtRat best = ExtRat::pos_inf();
  for (const auto& x : c_) best = std::min(best, x.val());
  return best;
}

Int SForm::ramification() const {
  Int m = 1;
  for (const auto& x : c_) m = lcm(m, x.ramification());
  return m;
}

SForm operator+(const SForm& a, const SForm& b) {
  assert(a.degree_ == b.degree_);
  SForm out(a.degree_);
  for (int i = 0; i <= a.degree_; ++i) out.c_[i] = a.c_[i] + b.c_[i];
  return out;
}

SForm operator-(const SForm& a, const SForm& b) {
  assert(a.degree_ == b.degree_);
  SForm out(a.degree_);
  for (int i = 0; i <= a.degree_; ++i) out.c_[i] = a.c_[i] - b.c_[i];
  return out;
}

SForm operator*(const SForm& a, const SForm& b) {
  SForm out(a.degree_ + b.degree_);
  for (int i = 0; i <= a.degree_; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (int j = 0; j <= b.degree_; ++j) {
      if (b.c_[j].is_zero()) continue;
      out.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return out;
}

SForm operator*(const TLaurent& k, const SForm& a) {
  SForm out(a.degree_);
  for (int i = 0; i <= a.degree_; ++i) out.c_[i] = k * a.c_[i];
  return out;
}

SForm SForm::pow(int k) const {
  assert(k >= 1);
  SForm out = *this;
  for (int i = 1; i < k; ++i) out = out * *this;
  return out;
}

SForm SForm::shifted(const Rat& exponent) const {
  SForm out(degree_);
  for (int i = 0; i <= degree_; ++i) out.c_[i] = c_[i].shifted(exponent);
  return out;
}

SForm SForm::reversed() const {
  SForm out = *this;
  std::reverse(out.c_.begin(), out.c_.end());
  return out;
}

SForm SForm::with_formal_degree(int d) const {
  assert(actual_degree() <= d);
  std::vector<TLaurent> c(c_.begin(), c_.begin() + std::min<int>(d + 1, c_.size()));
  return SForm(d, std::move(c));
}

std::optional<SForm> SForm::divide_exact(const SForm& a, const SForm& b,
                                         int quotient_degree) {
  const int db = b.actual_degree();
  assert(db >= 0);
  std::vector<TLaurent> rem = a.c_;
  const int da = a.actual_degree();
  SForm quot(quotient_degree);
  for (int i = da; i >= db; --i) {
    if (rem[i].is_zero()) continue;
    auto q = TLaurent::divide_exact(rem[i], b.c_[db]);
    if (!q) return std::nullopt;
    if (i - db > quotient_degree) return std::nullopt;
    quot.c_[i - db] = *q;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= *q * b.c_[j];
  }
  for (const auto& r : rem)
    if (!r.is_zero()) return std::nullopt;
  return quot;
}

std::vector<Rat> SForm::limit() const {
  std::vector<Rat> out;
  out.reserve(c_.size());
  for (const auto& x : c_) {
    assert(x.is_zero() || x.val() >= ExtRat(0));
    out.push_back(x.constant_term());
  }
  return out;
}

UPoly SForm::specialize(const Rat& u, const Int& m) const {
  std::vector<Rat> out;
  out.reserve(c_.size());
  for (const auto& x : c_) out.push_back(x.specialize(u, m));
  return UPoly(std::move(out));
}

std::string SForm::str() const {
  std::string out;
  for (int i = 0; i <= degree_; ++i) {
    if (c_[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string sp = i == 0 ? "" : (i == 1 ? "s" : "s^" + std::to_string(i));
    if (c_[i].terms().size() == 1 && c_[i].terms().begin()->first == 0 && !sp.empty()) {
      Rat c = c_[i].terms().begin()->second;
      if (c == 1) {
        out += sp;
      } else {
        out += "(" + to_string(c) + ")*" + sp;
      }
    } else {
      out += "(" + c_[i].str() + ")" + (sp.empty() ? "" : "*" + sp);
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace k3deg
