#pragma once

#include <string>
#include <vector>

#include "k3deg/tropical.hpp"

namespace k3deg {

// Cut-off positions x_j = clamp(-v_j / e0, -1, w+) of the 24 discriminant
// roots, ascending.
struct CutData {
  std::vector<Rat> x;
  int k = 0;  // #{x_j < 0}
  Rat wplus;
  Rat d;  // val(top nonzero discriminant coefficient) / e0
  Rat e0;
  Rat einf;
};

struct Breakpoint {
  Rat w;
  Rat v;
  friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

// Concave piecewise linear function stored by its breakpoints, including both
// domain ends. Collinear points are never stored.
class DensityFunction {
 public:
  DensityFunction() = default;
  explicit DensityFunction(std::vector<Breakpoint> pts);

  const std::vector<Breakpoint>& points() const { return pts_; }
  Rat lo() const { return pts_.front().w; }
  Rat hi() const { return pts_.back().w; }
  Rat left_value() const { return pts_.front().v; }
  Rat right_value() const { return pts_.back().v; }

  std::vector<Rat> slopes() const;
  int interior_breakpoints() const { return static_cast<int>(pts_.size()) - 2; }
  bool is_constant() const { return pts_.size() == 2 && pts_[0].v == pts_[1].v; }
  Rat value_at(const Rat& w) const;
  Rat max_value() const;

  // Affine change of variable onto [0, 1]; values untouched.
  DensityFunction normalized() const;
  // w -> lo + hi - w.
  DensityFunction reflected() const;

  friend bool operator==(const DensityFunction&, const DensityFunction&) = default;

 private:
  std::vector<Breakpoint> pts_;
};

CutData cut_data(const FamilyPair& f);
CutData cut_data(const FamilyPair& f, const SForm& delta);

// V(w) = [psi_Delta(a) - min(3 psi_8(a), 2 psi_12(a))] / e0 at a = -w e0, on the
// native domain [-1, einf/e0]. Precondition: f normalized and minimal.
DensityFunction density_master_native(const FamilyPair& f);
DensityFunction density_master_native(const FamilyPair& f, const SForm& delta);
DensityFunction density_master(const FamilyPair& f);  // rescaled to [0, 1]

// The summation formula on [-1, w+]; the additive level is arbitrary.
DensityFunction density_step2(const CutData& c);

// nn families: constant V = 1 on [-1, f(inf)/f(0)].
DensityFunction density_nn_native(const SForm& g4);
DensityFunction density_nn(const SForm& g4);

bool equal_mod_rescale(const DensityFunction& a, const DensityFunction& b);

std::string emit_csv(const DensityFunction& v);
std::string emit_svg(const DensityFunction& v);

}  // namespace k3deg
