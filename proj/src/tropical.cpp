#include "k3deg/tropical.hpp"

#include <algorithm>
#include <cassert>

#include "k3deg/error.hpp"

namespace k3deg {

TropicalPolynomial::TropicalPolynomial(int degree, std::vector<std::pair<int, ExtRat>> points,
                                       std::vector<Vertex> hull)
    : degree_(degree), points_(std::move(points)), hull_(std::move(hull)) {}

std::vector<Rat> TropicalPolynomial::slopes() const {
  std::vector<Rat> out;
  for (std::size_t k = 1; k < hull_.size(); ++k)
    out.push_back((hull_[k].y - hull_[k - 1].y) / (hull_[k].x - hull_[k - 1].x));
  return out;
}

int ValProfile::total() const {
  int n = 0;
  for (const auto& e : entries) n += e.second;
  return n;
}

std::vector<ExtRat> ValProfile::expanded() const {
  std::vector<ExtRat> out;
  for (const auto& [v, m] : entries) out.insert(out.end(), m, v);
  return out;
}

namespace {

// Cross product sign of (b - a) x (c - a).
Rat cross(const Vertex& a, const Vertex& b, const Vertex& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

std::vector<Vertex> lower_hull(const std::vector<Vertex>& pts) {
  std::vector<Vertex> h;
  for (const auto& p : pts) {
    while (h.size() >= 2 && cross(h[h.size() - 2], h.back(), p) <= 0) h.pop_back();
    h.push_back(p);
  }
  return h;
}

}  // namespace

TropicalPolynomial newton_polygon(const SForm& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroForm, "Newton polygon of the zero form");
  std::vector<std::pair<int, ExtRat>> points;
  std::vector<Vertex> finite;
  for (int i = 0; i <= p.formal_degree(); ++i) {
    ExtRat v = p.coeff(i).val();
    points.emplace_back(i, v);
    if (v.is_finite()) finite.push_back({Rat(i), v.value()});
  }
  return TropicalPolynomial(p.formal_degree(), std::move(points), lower_hull(finite));
}

ValProfile root_valuations(const SForm& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroForm, "root valuations of the zero form");
  ValProfile out;
  const int lo = p.lowest_index();
  if (lo > 0) out.entries.emplace_back(ExtRat::pos_inf(), lo);
  const TropicalPolynomial T = newton_polygon(p);
  const auto& hull = T.hull();
  for (std::size_t k = 1; k < hull.size(); ++k) {
    Rat len = hull[k].x - hull[k - 1].x;
    Rat slope = (hull[k].y - hull[k - 1].y) / len;
    out.entries.emplace_back(ExtRat(Rat(-slope)), static_cast<int>(len.get_num().get_si()));
  }
  const int drop = p.formal_degree() - p.actual_degree();
  if (drop > 0) out.entries.emplace_back(ExtRat::neg_inf(), drop);
  return out;
}

EndExponents end_exponents(const FamilyPair& f) {
  EndExponents out;
  // A vanishing g8 or g12 imposes no condition (min(+inf, x) = x).
  if (!f.g8.is_zero()) {
    auto v = root_valuations(f.g8).expanded();
    out.e0 = std::min(out.e0, v[3]);
    out.einf = std::min(out.einf, -v[4]);
  }
  if (!f.g12.is_zero()) {
    auto v = root_valuations(f.g12).expanded();
    out.e0 = std::min(out.e0, v[5]);
    out.einf = std::min(out.einf, -v[6]);
  }
  auto bad = [](const ExtRat& e) { return !e.is_finite() || e <= ExtRat(0); };
  if (bad(out.e0) || bad(out.einf))
    throw Error(ErrorCode::UnrecognizedCusp,
                "end exponents e0 = " + out.e0.str() + ", einf = " + out.einf.str() +
                    " do not describe a degeneration toward the 0-cusp");
  return out;
}

EndExponents nn_end_exponents(const SForm& g4) {
  auto v = root_valuations(g4).expanded();
  return {v[1], -v[2]};
}

Rat min_plus_eval(const TropicalPolynomial& T, const Rat& a) {
  assert(!T.hull().empty());
  Rat best = T.hull().front().y + T.hull().front().x * a;
  for (const auto& v : T.hull()) best = std::min<Rat>(best, v.y + v.x * a);
  return best;
}

int min_plus_right_slope(const TropicalPolynomial& T, const Rat& a) {
  Rat m = min_plus_eval(T, a);
  for (const auto& v : T.hull())
    if (v.y + v.x * a == m) return static_cast<int>(v.x.get_num().get_si());
  return 0;
}

int min_plus_left_slope(const TropicalPolynomial& T, const Rat& a) {
  Rat m = min_plus_eval(T, a);
  for (auto it = T.hull().rbegin(); it != T.hull().rend(); ++it)
    if (it->y + it->x * a == m) return static_cast<int>(it->x.get_num().get_si());
  return 0;
}

TropicalPolynomial modified_polygon(const FamilyPair& f) {
  SForm delta = discriminant24(f);
  if (delta.is_zero()) throw Error(ErrorCode::NN, "discriminant vanishes identically");
  EndExponents ends = end_exponents(f);
  TropicalPolynomial T = newton_polygon(delta);
  const auto& hull = T.hull();
  const Rat lo = -ends.e0.value();
  const Rat hi = ends.einf.value();
  std::vector<Rat> sl = T.slopes();
  std::size_t p = 0;
  while (p < sl.size() && sl[p] <= lo) ++p;
  std::size_t q = hull.size() - 1;
  while (q > p && sl[q - 1] >= hi) --q;
  std::vector<Vertex> out;
  if (hull[p].x > 0) out.push_back({Rat(0), hull[p].y - lo * hull[p].x});
  out.insert(out.end(), hull.begin() + p, hull.begin() + q + 1);
  const Rat top(T.degree());
  if (hull[q].x < top) out.push_back({top, hull[q].y + hi * (top - hull[q].x)});
  return TropicalPolynomial(T.degree(), T.points(), std::move(out));
}

}  // namespace k3deg
