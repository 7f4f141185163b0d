#pragma once

// Seeded random families for the property suites.

#include <random>
#include <string>
#include <vector>

#include "k3deg/family.hpp"

namespace k3deg::testing {

inline Rat canonical(long n, long d) {
  Rat r(n, d);
  r.canonicalize();
  return r;
}

class Corpus {
 public:
  explicit Corpus(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Rat small_rat() {
    int num = 0;
    while (num == 0) num = uniform(-4, 4);
    Rat r(num, uniform(0, 4) == 0 ? 2 : 1);
    r.canonicalize();
    return r;
  }

  Rat valuation() {
    static const Rat choices[] = {Rat(1), Rat(1), Rat(1), Rat(2), Rat(2), Rat(3), Rat(1, 2), Rat(3, 2)};
    return choices[uniform(0, 7)];
  }

  // Linear factors: s - a t^p (root of valuation p) and t^q s - b (valuation -q).
  static SForm near_zero(const Rat& a, const Rat& p) {
    return SForm(1, {TLaurent::monomial(-a, p), TLaurent(1)});
  }
  static SForm near_infinity(const Rat& b, const Rat& q) {
    return SForm(1, {TLaurent(-b), TLaurent::monomial(1, q)});
  }

  SForm split_product(int half) {
    SForm p(0, {TLaurent(small_rat())});
    for (int i = 0; i < half; ++i) p = p * near_zero(small_rat(), valuation());
    for (int i = 0; i < half; ++i) p = p * near_infinity(small_rat(), valuation());
    return p;
  }

  SForm random_form(int degree, int max_val) {
    std::vector<TLaurent> c(degree + 1);
    for (auto& x : c)
      if (uniform(0, 2) == 0) x = TLaurent::monomial(small_rat(), uniform(0, max_val));
    return SForm(degree, std::move(c));
  }

  // Three shapes: generic 4+4 / 6+6 root products (mostly seg limits, weight
  // 1/6); perturbations of the nodal locus (3 Q^2, Q^3), weight 1/3; and
  // perturbations of the 0-cusp (3 s^4, s^6), weight 1/2.
  FamilyPair next() {
    FamilyPair f;
    const int draw = uniform(0, 5);
    switch (draw == 0 ? 0 : draw <= 2 ? 1 : 2) {
      case 0:
        f.g8 = split_product(4);
        f.g12 = split_product(6);
        break;
      case 1: {
        SForm q = split_product(2);
        f.g8 = TLaurent(3) * q.pow(2) + random_form(8, 3).shifted(uniform(4, 16));
        f.g12 = q.pow(3) + random_form(12, 3).shifted(uniform(4, 24));
        break;
      }
      default: {
        SForm s4(8), s6(12);
        s4.set_coeff(4, TLaurent(3));
        s6.set_coeff(6, TLaurent(1));
        f.g8 = s4 + random_form(8, 4).shifted(1);
        f.g12 = s6 + random_form(12, 4).shifted(1);
        break;
      }
    }
    f.source_text = "corpus";
    return f;
  }

  // Random form of the given degree with Laurent coefficients.
  SForm random_laurent_form(int degree) {
    std::vector<TLaurent> c(degree + 1);
    for (auto& x : c) {
      int terms = uniform(0, 2);
      for (int k = 0; k < terms; ++k)
        x += TLaurent::monomial(small_rat(), canonical(uniform(-6, 6), uniform(1, 2)));
    }
    return SForm(degree, std::move(c));
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace k3deg::testing
