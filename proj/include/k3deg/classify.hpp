#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "k3deg/density.hpp"

namespace k3deg {

enum class CuspKind { TypeIII0Cusp, TypeIISeg, TypeIINN, NNTo0Cusp, NoDegeneration, Unrecognized };

std::string_view cusp_name(CuspKind k);
CuspKind cusp_from_name(std::string_view name);

// Behaviour of the t -> 0 limit. f must be normalized.
CuspKind cusp_type(const FamilyPair& f);
CuspKind cusp_type(const FamilyPair& f, const SForm& delta);

struct Component {
  char family;  // 'D', 'A' or 'E'
  int index;
  int charge() const;
  std::string str() const { return family + std::to_string(index); }
  friend bool operator==(const Component&, const Component&) = default;
};

struct StableType {
  std::vector<Component> components;
  int total_charge() const;
  int rank() const;  // sum of indices
  std::vector<int> charges() const;
  std::string str() const;  // "E0 A17 E0"
  StableType reversed() const;
  friend bool operator==(const StableType&, const StableType&) = default;
};

StableType parse_stable_type(std::string_view text);

// Reads the chain off the native density on [-1, w+]: an end with initial
// slope 12 - m is E_{m-3} when V vanishes there and D_{m-4} otherwise; an
// interior slope drop m is A_{m-1}. Throws E_INCONSISTENT_TYPE.
StableType stable_type(const DensityFunction& native_v);

struct EndSurface {
  SForm g4;  // degree 4 in sigma, constant coefficients
  SForm g6;  // degree 6
  bool is_nodal = false;
};

enum class Side { Left, Right };

// Limit of (g8, g12) after s = t^{e0} sigma (left) or its mirror (right).
EndSurface end_surface_data(const FamilyPair& f, Side side);

}  // namespace k3deg
