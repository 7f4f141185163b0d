#include "k3deg/density.hpp"

#include <algorithm>
#include <cassert>
#include <cstdio>
#include <optional>
#include <set>

#include "k3deg/error.hpp"

namespace k3deg {

DensityFunction::DensityFunction(std::vector<Breakpoint> pts) {
  assert(pts.size() >= 2);
  for (auto& p : pts) {
    while (pts_.size() >= 2) {
      const auto& a = pts_[pts_.size() - 2];
      const auto& b = pts_.back();
      if ((b.v - a.v) * (p.w - b.w) != (p.v - b.v) * (b.w - a.w)) break;
      pts_.pop_back();
    }
    pts_.push_back(std::move(p));
  }
}

std::vector<Rat> DensityFunction::slopes() const {
  std::vector<Rat> out;
  for (std::size_t k = 1; k < pts_.size(); ++k)
    out.push_back((pts_[k].v - pts_[k - 1].v) / (pts_[k].w - pts_[k - 1].w));
  return out;
}

Rat DensityFunction::value_at(const Rat& w) const {
  assert(w >= lo() && w <= hi());
  for (std::size_t k = 1; k < pts_.size(); ++k) {
    if (w <= pts_[k].w) {
      const auto& a = pts_[k - 1];
      const auto& b = pts_[k];
      return a.v + (b.v - a.v) * (w - a.w) / (b.w - a.w);
    }
  }
  return pts_.back().v;
}

Rat DensityFunction::max_value() const {
  Rat m = pts_.front().v;
  for (const auto& p : pts_) m = std::max<Rat>(m, p.v);
  return m;
}

DensityFunction DensityFunction::normalized() const {
  const Rat len = hi() - lo();
  std::vector<Breakpoint> out;
  for (const auto& p : pts_) out.push_back({(p.w - lo()) / len, p.v});
  return DensityFunction(std::move(out));
}

DensityFunction DensityFunction::reflected() const {
  const Rat sum = lo() + hi();
  std::vector<Breakpoint> out;
  for (auto it = pts_.rbegin(); it != pts_.rend(); ++it) out.push_back({sum - it->w, it->v});
  return DensityFunction(std::move(out));
}

CutData cut_data(const FamilyPair& f) { return cut_data(f, discriminant24(f)); }

CutData cut_data(const FamilyPair& f, const SForm& delta) {
  if (delta.is_zero()) throw Error(ErrorCode::NN, "discriminant vanishes identically");
  EndExponents ends = end_exponents(f);
  CutData c;
  c.e0 = ends.e0.value();
  c.einf = ends.einf.value();
  c.wplus = c.einf / c.e0;
  for (const ExtRat& v : root_valuations(delta).expanded()) {
    Rat x;
    if (v.is_pos_inf()) x = -1;
    else if (v.is_neg_inf()) x = c.wplus;
    else x = std::clamp<Rat>(-v.value() / c.e0, Rat(-1), c.wplus);
    c.x.push_back(x);
  }
  std::sort(c.x.begin(), c.x.end());
  c.k = static_cast<int>(std::count_if(c.x.begin(), c.x.end(), [](const Rat& x) { return x < 0; }));
  c.d = delta.coeff(delta.actual_degree()).val().value() / c.e0;
  return c;
}

namespace {

struct HPart {
  std::optional<TropicalPolynomial> g8, g12;
  Rat at(const Rat& a) const {
    std::optional<Rat> m;
    if (g8) m = 3 * min_plus_eval(*g8, a);
    if (g12) {
      Rat v = 2 * min_plus_eval(*g12, a);
      m = m ? std::min(*m, v) : v;
    }
    return *m;
  }
  int right_slope(const Rat& a) const { return slope(a, true); }
  int left_slope(const Rat& a) const { return slope(a, false); }

 private:
  int slope(const Rat& a, bool right) const {
    const Rat m = at(a);
    std::optional<int> best;
    auto consider = [&](const TropicalPolynomial& T, int w) {
      if (w * min_plus_eval(T, a) != m) return;
      int s = w * (right ? min_plus_right_slope(T, a) : min_plus_left_slope(T, a));
      best = !best ? s : (right ? std::min(*best, s) : std::max(*best, s));
    };
    if (g8) consider(*g8, 3);
    if (g12) consider(*g12, 2);
    return *best;
  }
};

}  // namespace

DensityFunction density_master_native(const FamilyPair& f) {
  return density_master_native(f, discriminant24(f));
}

DensityFunction density_master_native(const FamilyPair& f, const SForm& delta) {
  if (delta.is_zero()) throw Error(ErrorCode::NN, "discriminant vanishes identically; use the nn density");
  EndExponents ends = end_exponents(f);
  const Rat e0 = ends.e0.value();
  const Rat einf = ends.einf.value();
  TropicalPolynomial td = newton_polygon(delta);
  HPart h;
  if (!f.g8.is_zero()) h.g8 = newton_polygon(f.g8);
  if (!f.g12.is_zero()) h.g12 = newton_polygon(f.g12);

  // h must be affine of slope 12 on [-einf, e0]; it is concave, so checking the
  // one-sided slopes at both ends suffices.
  if (h.right_slope(-einf) != 12 || h.left_slope(e0) != 12)
    throw Error(ErrorCode::UnrecognizedCusp,
                "min(3 psi8, 2 psi12) is not of slope 12 on [-einf, e0]");

  const Rat wplus = einf / e0;
  std::set<Rat> ws{Rat(-1), wplus};
  for (const Rat& s : td.slopes()) {
    Rat w = s / e0;  // edge of slope s bends psi at a = -s
    if (w > -1 && w < wplus) ws.insert(w);
  }
  std::vector<Breakpoint> pts;
  for (const Rat& w : ws) {
    Rat a = -w * e0;
    Rat v = (min_plus_eval(td, a) - h.at(a)) / e0;
    if (v < 0)
      throw Error(ErrorCode::NegativeV, "V(" + to_string(w) + ") = " + to_string(v) + " < 0");
    pts.push_back({w, v});
  }
  return DensityFunction(std::move(pts));
}

DensityFunction density_master(const FamilyPair& f) {
  return density_master_native(f).normalized();
}

DensityFunction density_step2(const CutData& c) {
  std::set<Rat> ws{Rat(-1), c.wplus};
  for (const Rat& x : c.x)
    if (x > -1 && x < c.wplus) ws.insert(x);
  std::vector<Breakpoint> pts;
  for (const Rat& w : ws) {
    Rat v = 12 * w + c.d;
    for (int j = 0; j < static_cast<int>(c.x.size()); ++j) {
      const Rat& x = c.x[j];
      if (j < c.k) v -= std::max(w, x);
      else v -= std::max<Rat>(Rat(0), w - x);
    }
    pts.push_back({w, v});
  }
  return DensityFunction(std::move(pts));
}

DensityFunction density_nn_native(const SForm& g4) {
  EndExponents e = nn_end_exponents(g4);
  auto positive = [](const ExtRat& x) { return x.is_finite() && x > ExtRat(0); };
  const bool p0 = positive(e.e0), p1 = positive(e.einf);
  if (p0 != p1)
    throw Error(ErrorCode::NNInterior,
                "a G4 root stays in the interior (f(0) = " + e.e0.str() + ", f(inf) = " +
                    e.einf.str() + ")");
  if (!p0)
    throw Error(ErrorCode::UnrecognizedCusp,
                "G4 roots do not split 2 + 2 (f(0) = " + e.e0.str() + ", f(inf) = " +
                    e.einf.str() + ")");
  return DensityFunction({{Rat(-1), Rat(1)}, {e.einf.value() / e.e0.value(), Rat(1)}});
}

DensityFunction density_nn(const SForm& g4) { return density_nn_native(g4).normalized(); }

bool equal_mod_rescale(const DensityFunction& a, const DensityFunction& b) {
  assert(a.lo() == b.lo() && a.hi() == b.hi());
  const Rat ma = a.max_value(), mb = b.max_value();
  std::set<Rat> ws;
  for (const auto& p : a.points()) ws.insert(p.w);
  for (const auto& p : b.points()) ws.insert(p.w);
  if (ma == 0 || mb == 0) {
    if (ma != mb) return false;
    for (const Rat& w : ws)
      if (a.value_at(w) != 0 || b.value_at(w) != 0) return false;
    return true;
  }
  if (ma < 0 || mb < 0) return false;
  for (const Rat& w : ws)
    if (a.value_at(w) * mb != b.value_at(w) * ma) return false;
  return true;
}

std::string emit_csv(const DensityFunction& v) {
  std::string out;
  for (const auto& p : v.points()) out += to_string(p.w) + "," + to_string(p.v) + "\n";
  return out;
}

namespace {

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

}  // namespace

std::string emit_svg(const DensityFunction& v) {
  constexpr double W = 800, H = 400, M = 40;
  const double lo = to_double(v.lo()), hi = to_double(v.hi());
  double top = to_double(v.max_value());
  if (top <= 0) top = 1;
  auto px = [&](const Rat& w) { return M + (to_double(w) - lo) / (hi - lo) * (W - 2 * M); };
  auto py = [&](const Rat& y) { return H - M - to_double(y) / top * (H - 2 * M); };

  std::string s;
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"400\" viewBox=\"0 0 800 400\">\n";
  s += "<rect x=\"0\" y=\"0\" width=\"800\" height=\"400\" fill=\"white\"/>\n";
  s += "<line x1=\"40\" y1=\"360\" x2=\"760\" y2=\"360\" stroke=\"black\"/>\n";
  s += "<line x1=\"40\" y1=\"40\" x2=\"40\" y2=\"360\" stroke=\"black\"/>\n";
  s += "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"2\" points=\"";
  for (std::size_t k = 0; k < v.points().size(); ++k) {
    const auto& p = v.points()[k];
    if (k) s += " ";
    s += fmt(px(p.w)) + "," + fmt(py(p.v));
  }
  s += "\"/>\n";
  for (const auto& p : v.points()) {
    s += "<circle cx=\"" + fmt(px(p.w)) + "\" cy=\"" + fmt(py(p.v)) + "\" r=\"4\" fill=\"steelblue\"/>\n";
    s += "<text x=\"" + fmt(px(p.w)) + "\" y=\"378\" font-size=\"12\" text-anchor=\"middle\">" +
         to_string(p.w) + "</text>\n";
  }
  s += "<text x=\"34\" y=\"" + fmt(py(v.max_value() > 0 ? v.max_value() : Rat(0))) +
       "\" font-size=\"12\" text-anchor=\"end\">" + to_string(v.max_value()) + "</text>\n";
  s += "<text x=\"34\" y=\"360.00\" font-size=\"12\" text-anchor=\"end\">0</text>\n";
  s += "</svg>\n";
  return s;
}

}  // namespace k3deg
