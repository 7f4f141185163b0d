#include "k3deg/oracle.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>
#include <cmath>
#include <map>

#include "k3deg/classify.hpp"
#include "k3deg/error.hpp"

namespace k3deg {
namespace {

namespace mp = boost::multiprecision;
using Real = mp::cpp_bin_float_50;
using Complex = mp::cpp_complex_50;

Real to_real(const Rat& r) {
  return Real(r.get_num().get_str()) / Real(r.get_den().get_str());
}

std::vector<Real> coefficients_at(const SForm& p, double t0) {
  const Real lt = mp::log(Real(t0));
  std::vector<Real> out;
  for (const auto& c : p.coeffs()) {
    Real acc = 0;
    for (const auto& [e, v] : c.terms()) acc += to_real(v) * mp::exp(to_real(e.rat()) * lt);
    out.push_back(acc);
  }
  return out;
}

struct Eval {
  Complex p, dp;
  Real scale;  // sum |a_i| |z|^i
};

Eval horner(const std::vector<Real>& a, const Complex& z) {
  Complex p = 0, dp = 0;
  Real s = 0;
  const Real az = mp::abs(z);
  for (auto it = a.rbegin(); it != a.rend(); ++it) {
    dp = dp * z + p;
    p = p * z + Complex(*it);
    s = s * az + mp::abs(*it);
  }
  return {p, dp, s};
}

// Initial guesses on circles given by the upper hull of (i, log|a_i|).
std::vector<Complex> initial_guesses(const std::vector<Real>& a) {
  const int n = static_cast<int>(a.size()) - 1;
  std::vector<std::pair<int, Real>> pts;
  for (int i = 0; i <= n; ++i)
    if (a[i] != 0) pts.emplace_back(i, mp::log(mp::abs(a[i])));
  std::vector<std::pair<int, Real>> hull;
  for (const auto& p : pts) {
    while (hull.size() >= 2) {
      const auto& u = hull[hull.size() - 2];
      const auto& v = hull.back();
      Real cr = (v.first - u.first) * (p.second - u.second) - (v.second - u.second) * (p.first - u.first);
      if (cr < 0) break;
      hull.pop_back();
    }
    hull.push_back(p);
  }
  std::vector<Complex> z;
  const Real pi = mp::atan(Real(1)) * 4;
  for (std::size_t k = 1; k < hull.size(); ++k) {
    const int len = hull[k].first - hull[k - 1].first;
    const Real r = mp::exp((hull[k - 1].second - hull[k].second) / len);
    for (int j = 0; j < len; ++j) {
      Real ang = 2 * pi * j / len + Real(0.4) + Real(k) * Real(0.7);
      z.emplace_back(r * mp::cos(ang), r * mp::sin(ang));
    }
  }
  return z;
}

}  // namespace

RootSet roots_of(const SForm& p, double t0) {
  if (!(t0 > 0 && t0 < 1)) throw Error(ErrorCode::Precondition, "t0 must lie in (0, 1)");
  std::vector<Real> a = coefficients_at(p, t0);
  RootSet out;
  while (!a.empty() && a.back() == 0) {
    a.pop_back();
    ++out.at_infinity;
  }
  if (a.empty()) throw Error(ErrorCode::Precondition, "polynomial vanishes at this t");
  int lo = 0;
  while (a[lo] == 0) ++lo;
  out.at_zero = lo;
  a.erase(a.begin(), a.begin() + lo);
  const int n = static_cast<int>(a.size()) - 1;
  if (n == 0) return out;

  std::vector<Complex> z = initial_guesses(a);
  // Converged at residual 1e-12; keep polishing towards the working precision
  // while the budget lasts, which matters for clustered roots.
  const Real tol("1e-12"), polish("1e-40");
  int it = 0, converged_at = -1;
  for (; it < 500; ++it) {
    bool all = true, polished = true;
    for (int k = 0; k < n; ++k) {
      Eval e = horner(a, z[k]);
      const Real res = mp::abs(e.p);
      if (res > tol * e.scale) all = false;
      if (res <= polish * e.scale) continue;
      polished = false;
      Complex ratio = e.p / e.dp;
      Complex sum = 0;
      for (int j = 0; j < n; ++j)
        if (j != k) sum += Complex(1) / (z[k] - z[j]);
      z[k] -= ratio / (Complex(1) - ratio * sum);
    }
    if (all && converged_at < 0) converged_at = it;
    if (polished) break;
  }
  if (converged_at < 0) {
    for (int k = 0; k < n; ++k) {
      Eval e = horner(a, z[k]);
      if (mp::abs(e.p) > tol * e.scale)
        throw Error(ErrorCode::NoConvergence, "Aberth iteration did not converge in 500 steps");
    }
    converged_at = it;
  }
  it = converged_at;
  out.iterations = it;
  for (const auto& r : z) {
    out.roots.emplace_back(static_cast<double>(r.real()), static_cast<double>(r.imag()));
    out.log_abs.push_back(static_cast<double>(mp::log(mp::abs(r))));
  }
  return out;
}

RootSet roots_at(const FamilyPair& f, double t0) { return roots_of(discriminant24(f), t0); }

double reconstruction_error(const SForm& p, double t0, const RootSet& r) {
  std::vector<Real> a = coefficients_at(p, t0);
  // Rebuild from the roots at full double-precision modulus via log_abs.
  std::vector<Complex> prod{Complex(1)};
  auto mul_linear = [&](const Complex& root) {
    std::vector<Complex> next(prod.size() + 1, Complex(0));
    for (std::size_t i = 0; i < prod.size(); ++i) {
      next[i + 1] += prod[i];
      next[i] -= prod[i] * root;
    }
    prod = std::move(next);
  };
  for (int i = 0; i < r.at_zero; ++i) mul_linear(Complex(0));
  for (std::size_t k = 0; k < r.roots.size(); ++k) {
    const Real mod = mp::exp(Real(r.log_abs[k]));
    const Real arg = std::arg(r.roots[k]);
    mul_linear(Complex(mod * mp::cos(arg), mod * mp::sin(arg)));
  }
  const int deg = static_cast<int>(prod.size()) - 1;
  const Real lead = a[deg];
  Real worst = 0;
  for (int i = 0; i <= deg; ++i) {
    const Real expect = a[i] / lead;
    if (expect == 0) continue;
    worst = std::max(worst, Real(mp::abs(prod[i] - Complex(expect)) / mp::abs(expect)));
  }
  return static_cast<double>(worst);
}

std::vector<double> empirical_positions(const RootSet& r, double e0, double einf, double t0) {
  const double wplus = einf / e0;
  const double denom = e0 * std::fabs(std::log(t0));
  std::vector<double> x;
  for (int i = 0; i < r.at_zero; ++i) x.push_back(-1.0);
  for (double la : r.log_abs) x.push_back(std::clamp(la / denom, -1.0, wplus));
  for (int i = 0; i < r.at_infinity; ++i) x.push_back(wplus);
  std::sort(x.begin(), x.end());
  return x;
}

OracleReport oracle_compare(const FamilyPair& raw, std::vector<double> t_list, double tolerance,
                            bool throw_on_mismatch) {
  OracleReport rep;
  rep.tolerance = tolerance;
  const FamilyPair f = weight_normalize(raw);
  const SForm delta = discriminant24(f);
  const CuspKind kind = cusp_type(f, delta);
  if (kind == CuspKind::NoDegeneration) {
    rep.skipped = true;
    rep.notice = "family does not degenerate (NO_DEGENERATION); nothing to compare";
    return rep;
  }
  if (delta.is_zero()) {
    rep.skipped = true;
    rep.notice = "discriminant vanishes identically (nn family); no roots to track";
    return rep;
  }
  for (double t : t_list)
    if (!(t > 0 && t < 1)) throw Error(ErrorCode::Precondition, "t samples must lie in (0, 1)");
  std::sort(t_list.begin(), t_list.end(), std::greater<>());
  const CutData cut = cut_data(f, delta);
  const double e0 = to_double(cut.e0), einf = to_double(cut.einf);
  std::vector<double> exact;
  for (const Rat& x : cut.x) exact.push_back(to_double(x));

  for (double t : t_list) {
    RootSet r = roots_of(delta, t);
    OracleSample s;
    s.t = t;
    s.positions = empirical_positions(r, e0, einf, t);
    for (std::size_t j = 0; j < exact.size(); ++j)
      s.max_deviation = std::max(s.max_deviation, std::fabs(s.positions[j] - exact[j]));
    rep.samples.push_back(std::move(s));
  }

  if (!rep.samples.empty()) {
    std::map<Rat, int> mult;
    for (const Rat& x : cut.x) ++mult[x];
    std::map<Rat, int> seen;
    for (double p : rep.samples.back().positions) {
      const Rat* best = nullptr;
      double gap = 1e300;
      for (const auto& [x, m] : mult) {
        double g = std::fabs(p - to_double(x));
        if (g < gap) gap = g, best = &x;
      }
      ++seen[*best];
    }
    for (const auto& [x, m] : mult) rep.clusters.push_back({x, m, seen[x]});
  }

  rep.trend_ok = true;
  for (std::size_t k = 1; k < rep.samples.size(); ++k)
    if (rep.samples[k].max_deviation > rep.samples[k - 1].max_deviation + 1e-9) rep.trend_ok = false;
  double num = 0, den = 0;
  for (const auto& s : rep.samples) {
    const double u = 1.0 / std::fabs(std::log(s.t));
    num += s.max_deviation * u;
    den += u * u;
  }
  rep.fitted_c = den > 0 ? num / den : 0;
  if (!rep.samples.empty()) {
    const double last = rep.samples.back().max_deviation;
    if (!rep.trend_ok) rep.failure = "deviations do not decrease as t -> 0";
    else if (last > tolerance)
      rep.failure = "final deviation " + std::to_string(last) + " exceeds " + std::to_string(tolerance);
  }
  if (!rep.failure.empty() && throw_on_mismatch) throw Error(ErrorCode::OracleMismatch, rep.failure);
  return rep;
}

}  // namespace k3deg
