#pragma once

#include <utility>
#include <vector>

#include "k3deg/family.hpp"

namespace k3deg {

struct Vertex {
  Rat x;
  Rat y;
  friend bool operator==(const Vertex&, const Vertex&) = default;
};

// Lower convex hull of the points (i, val d_i) of a form; equivalently the
// min-plus polynomial psi(a) = min_i [val d_i + i a].
class TropicalPolynomial {
 public:
  TropicalPolynomial(int degree, std::vector<std::pair<int, ExtRat>> points,
                     std::vector<Vertex> hull);

  int degree() const { return degree_; }
  const std::vector<std::pair<int, ExtRat>>& points() const { return points_; }
  const std::vector<Vertex>& hull() const { return hull_; }
  // Edge slopes, strictly increasing.
  std::vector<Rat> slopes() const;

 private:
  int degree_;
  std::vector<std::pair<int, ExtRat>> points_;
  std::vector<Vertex> hull_;
};

// Multiset of root valuations, sorted descending; +inf are roots at s = 0,
// -inf roots at s = inf.
struct ValProfile {
  std::vector<std::pair<ExtRat, int>> entries;
  int total() const;
  std::vector<ExtRat> expanded() const;
};

struct EndExponents {
  ExtRat e0 = ExtRat::pos_inf();
  ExtRat einf = ExtRat::pos_inf();
};

TropicalPolynomial newton_polygon(const SForm& p);
ValProfile root_valuations(const SForm& p);
EndExponents end_exponents(const FamilyPair& f);
// The nn analogue: f(0) and f(inf) of the G4 root valuations (2 + 2 split),
// not validated.
EndExponents nn_end_exponents(const SForm& g4);

Rat min_plus_eval(const TropicalPolynomial& T, const Rat& a);
// One-sided derivatives of psi at a.
int min_plus_right_slope(const TropicalPolynomial& T, const Rat& a);
int min_plus_left_slope(const TropicalPolynomial& T, const Rat& a);

// Discriminant polygon with edge slopes clamped to [-e0, einf], extended
// over [0, 24].
TropicalPolynomial modified_polygon(const FamilyPair& f);

}  // namespace k3deg
