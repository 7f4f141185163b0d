#pragma once

#include <string>

#include "k3deg/sform.hpp"

namespace k3deg {

// A degenerating Weierstrass family: g8 of degree 8 and g12 of degree 12 in s,
// with Laurent coefficients in t.
struct FamilyPair {
  SForm g8{8};
  SForm g12{12};
  Rat shift{0};  // accumulated gauge exponent c from weight_normalize
  std::string source_text;

  bool is_zero() const { return g8.is_zero() && g12.is_zero(); }
  Int ramification() const { return lcm(g8.ramification(), g12.ramification()); }
  friend bool operator==(const FamilyPair& a, const FamilyPair& b) {
    return a.g8 == b.g8 && a.g12 == b.g12;
  }
};

SForm discriminant24(const FamilyPair& f);

// Rescale (g8, g12) -> (t^{2c} g8, t^{3c} g12) so that every coefficient has
// nonnegative valuation and some coefficient has valuation zero.
FamilyPair weight_normalize(const FamilyPair& f);
bool is_normalized(const FamilyPair& f);

// Throws E_NOT_MINIMAL if some nonconstant P has P^4 | g8 and P^6 | g12,
// or if the discriminant vanishes and the nn extraction fails.
void minimality_check(const FamilyPair& f);
// Same, with discriminant24(f) already at hand.
void minimality_check(const FamilyPair& f, const SForm& delta);

// G4 with g8 = 3 G4^2, g12 = G4^3. Requires discriminant24(f) == 0.
SForm nn_extract(const FamilyPair& f);

// s -> 1/s on binary forms.
FamilyPair invert_s(const FamilyPair& f);

// Text accepted by parse_family that reproduces f exactly.
std::string canonical_text(const FamilyPair& f);

}  // namespace k3deg
