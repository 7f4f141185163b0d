#include "k3deg/family.hpp"

#include <array>

#include "k3deg/error.hpp"

namespace k3deg {

SForm discriminant24(const FamilyPair& f) {
  return f.g8.pow(3) - TLaurent(27) * f.g12.pow(2);
}

FamilyPair weight_normalize(const FamilyPair& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroForm, "g8 and g12 both vanish");
  ExtRat m8 = f.g8.min_val();
  ExtRat m12 = f.g12.min_val();
  ExtRat lo = std::min(m8.is_finite() ? ExtRat(Rat(m8.value() / 2)) : m8,
                       m12.is_finite() ? ExtRat(Rat(m12.value() / 3)) : m12);
  Rat c = -lo.value();
  FamilyPair out = f;
  out.g8 = f.g8.shifted(2 * c);
  out.g12 = f.g12.shifted(3 * c);
  out.shift = f.shift + c;
  return out;
}

bool is_normalized(const FamilyPair& f) {
  ExtRat m = std::min(f.g8.min_val(), f.g12.min_val());
  return m == ExtRat(0);
}

namespace {

// Common factor of all derivatives up to order k-1 (roots of multiplicity >= k).
UPoly high_multiplicity_part(const UPoly& p, int k, UPoly acc) {
  UPoly d = p;
  for (int i = 0; i < k; ++i) {
    acc = UPoly::gcd(acc, d);
    d = d.derivative();
  }
  return acc;
}

}  // namespace

void minimality_check(const FamilyPair& f) { minimality_check(f, discriminant24(f)); }

void minimality_check(const FamilyPair& f, const SForm& delta) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroForm, "g8 and g12 both vanish");
  if (f.g8.actual_degree() <= 4 && f.g12.actual_degree() <= 6)
    throw Error(ErrorCode::NotMinimal, "non-minimal at s = inf (deg g8 <= 4, deg g12 <= 6)");

  // A common factor over Q(t) survives every specialization of t, so it is
  // rejected only if it shows up at all three sample points.
  const Int m = f.ramification();
  static const std::array<Rat, 3> samples = {Rat(2, 3), Rat(5, 7), Rat(11, 13)};
  bool all_bad = true;
  std::string witness;
  for (const Rat& u : samples) {
    UPoly a = f.g8.specialize(u, m);
    UPoly b = f.g12.specialize(u, m);
    UPoly g = high_multiplicity_part(a, 4, UPoly());
    g = high_multiplicity_part(b, 6, g);
    if (g.degree() <= 0) {
      all_bad = false;
      break;
    }
    witness = g.str();
  }
  if (all_bad)
    throw Error(ErrorCode::NotMinimal,
                "non-minimal: common factor P^4 | g8, P^6 | g12 (specialized P = " +
                    witness + ")");

  if (delta.is_zero()) {
    try {
      nn_extract(f);
    } catch (const Error& e) {
      throw Error(ErrorCode::NotMinimal,
                  std::string("discriminant vanishes but no nn shape: ") + e.what());
    }
  }
}

SForm nn_extract(const FamilyPair& f) {
  if (!discriminant24(f).is_zero())
    throw Error(ErrorCode::Precondition, "nn_extract needs a vanishing discriminant");
  if (f.g8.is_zero()) throw Error(ErrorCode::UnrecognizedCusp, "g8 vanishes");
  auto q = SForm::divide_exact(TLaurent(3) * f.g12, f.g8, 4);
  if (!q) throw Error(ErrorCode::UnrecognizedCusp, "3*g12/g8 is not a form");
  const SForm& g4 = *q;
  if (TLaurent(3) * g4.pow(2) != f.g8 || g4.pow(3) != f.g12)
    throw Error(ErrorCode::UnrecognizedCusp, "(g8, g12) is not (3 G4^2, G4^3)");
  return g4;
}

FamilyPair invert_s(const FamilyPair& f) {
  FamilyPair out = f;
  out.g8 = f.g8.reversed();
  out.g12 = f.g12.reversed();
  return out;
}

std::string canonical_text(const FamilyPair& f) {
  return "g8 = " + f.g8.str() + "\ng12 = " + f.g12.str() + "\n";
}

}  // namespace k3deg
