#include "k3deg/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "k3deg/error.hpp"

namespace k3deg {
namespace {

using Vec = std::vector<long>;

Matrix gram_of(const std::vector<Vec>& basis, const std::function<long(const Vec&, const Vec&)>& dot) {
  Matrix g(basis.size(), Vec(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) g[i][j] = dot(basis[i], basis[j]);
  return g;
}

long euclid(const Vec& a, const Vec& b) {
  long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Coordinates (l, e_1, ..., e_n), l^2 = 1, e_i^2 = -1.
long manin(const Vec& a, const Vec& b) {
  long s = a[0] * b[0];
  for (std::size_t i = 1; i < a.size(); ++i) s -= a[i] * b[i];
  return s;
}

}  // namespace

Matrix manin_gram(int n) {
  if (n < 0 || n > 8) throw Error(ErrorCode::BadIndex, "E_n needs 0 <= n <= 8, got " + std::to_string(n));
  std::vector<Vec> basis;
  auto vec = [&] { return Vec(n + 1, 0); };
  if (n == 1) {
    Vec v = vec();
    v[0] = 1, v[1] = -3;
    basis.push_back(v);
  } else if (n == 2) {
    Vec v = vec();
    v[1] = 1, v[2] = -1;
    basis.push_back(v);
    Vec w = vec();
    w[0] = 1, w[1] = -3;
    basis.push_back(w);
  } else if (n >= 3) {
    for (int i = 1; i < n; ++i) {
      Vec v = vec();
      v[i] = 1, v[i + 1] = -1;
      basis.push_back(v);
    }
    Vec v = vec();
    v[0] = 1, v[1] = v[2] = v[3] = -1;
    basis.push_back(v);
  }
  return gram_of(basis, manin);
}

Lattice root_lattice(char family, int n) {
  if (n < 0) throw Error(ErrorCode::BadIndex, "negative lattice index");
  Lattice out{std::string(1, family) + std::to_string(n), {}};
  switch (family) {
    case 'A': {
      out.gram.assign(n, Vec(n, 0));
      for (int i = 0; i < n; ++i) {
        out.gram[i][i] = 2;
        if (i + 1 < n) out.gram[i][i + 1] = out.gram[i + 1][i] = -1;
      }
      return out;
    }
    case 'D': {
      std::vector<Vec> basis;
      if (n == 1) basis.push_back({2});
      if (n >= 2) {
        Vec v(n, 0);
        v[0] = v[1] = 1;
        basis.push_back(v);
        for (int i = 1; i < n; ++i) {
          Vec w(n, 0);
          w[i] = 1, w[i - 1] = -1;
          basis.push_back(w);
        }
      }
      out.gram = gram_of(basis, euclid);
      return out;
    }
    case 'E': {
      out.gram = manin_gram(n);
      for (auto& row : out.gram)
        for (auto& x : row) x = -x;
      return out;
    }
    default:
      throw Error(ErrorCode::BadIndex, std::string("unknown lattice family '") + family + "'");
  }
}

Lattice direct_sum(const std::vector<Lattice>& parts) {
  Lattice out;
  int n = 0;
  for (const auto& p : parts) {
    if (!out.name.empty()) out.name += "+";
    out.name += p.name;
    n += p.rank();
  }
  out.gram.assign(n, Vec(n, 0));
  int off = 0;
  for (const auto& p : parts) {
    for (int i = 0; i < p.rank(); ++i)
      for (int j = 0; j < p.rank(); ++j) out.gram[off + i][off + j] = p.gram[i][j];
    off += p.rank();
  }
  return out;
}

Lattice negated(const Lattice& l) {
  Lattice out{l.name + "(-1)", l.gram};
  for (auto& row : out.gram)
    for (auto& x : row) x = -x;
  return out;
}

Int determinant(const Matrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

std::pair<int, int> signature(const Matrix& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
  int pos = 0, neg = 0;
  std::vector<bool> done(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t p = n;
    for (std::size_t i = 0; i < n; ++i)
      if (!done[i] && a[i][i] != 0) {
        p = i;
        break;
      }
    if (p == n) {
      // Zero diagonal: fold a partner into some row to create a pivot.
      std::size_t i = n, j = n;
      for (std::size_t r = 0; r < n && i == n; ++r)
        for (std::size_t c = 0; c < n; ++c)
          if (!done[r] && !done[c] && r != c && a[r][c] != 0) {
            i = r, j = c;
            break;
          }
      if (i == n) break;  // remaining block is zero
      for (std::size_t c = 0; c < n; ++c) a[i][c] += a[j][c];
      for (std::size_t r = 0; r < n; ++r) a[r][i] += a[r][j];
      p = i;
    }
    done[p] = true;
    const Rat piv = a[p][p];
    (piv > 0 ? pos : neg)++;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || a[i][p] == 0) continue;
      const Rat f = a[i][p] / piv;
      for (std::size_t c = 0; c < n; ++c) a[i][c] -= f * a[p][c];
      for (std::size_t r = 0; r < n; ++r) a[r][i] -= f * a[r][p];
    }
  }
  return {pos, neg};
}

bool is_even(const Matrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i][i] % 2 != 0) return false;
  return true;
}

bool is_symmetric(const Matrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (m[i][j] != m[j][i]) return false;
  return true;
}

long count_vectors(const Lattice& l, long norm) {
  const int n = l.rank();
  if (n == 0) return 0;
  // Cholesky-type decomposition q_ii, q_ij (Fincke-Pohst).
  std::vector<std::vector<double>> q(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) q[i][j] = static_cast<double>(l.gram[i][j]);
  for (int i = 0; i < n; ++i) {
    if (q[i][i] <= 0) throw Error(ErrorCode::Precondition, "count_vectors needs a positive definite Gram");
    for (int j = i + 1; j < n; ++j) {
      q[j][i] = q[i][j];
      q[i][j] /= q[i][i];
    }
    for (int k = i + 1; k < n; ++k)
      for (int j = k; j < n; ++j) q[k][j] -= q[k][i] * q[i][j];
  }
  const double bound = static_cast<double>(norm) + 1e-6;
  Vec x(n, 0);
  long count = 0;
  std::function<void(int, double)> rec = [&](int i, double remaining) {
    double c = 0;
    for (int j = i + 1; j < n; ++j) c -= q[i][j] * static_cast<double>(x[j]);
    const double r = std::sqrt(std::max(0.0, remaining / q[i][i]));
    const long lo = static_cast<long>(std::ceil(c - r - 1e-9));
    const long hi = static_cast<long>(std::floor(c + r + 1e-9));
    for (long v = lo; v <= hi; ++v) {
      x[i] = v;
      const double used = q[i][i] * (v - c) * (v - c);
      if (used > remaining + 1e-6) continue;
      if (i == 0) {
        long exact = 0;
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b) exact += x[a] * l.gram[a][b] * x[b];
        if (exact == norm) ++count;
      } else {
        rec(i - 1, remaining - used);
      }
    }
    x[i] = 0;
  };
  rec(n - 1, bound);
  return norm == 0 ? count - 1 : count;
}

Lattice lambda_abe(const std::vector<Component>& components) {
  std::vector<Lattice> parts;
  for (const auto& c : components)
    if (c.index > 0) parts.push_back(root_lattice(c.family, c.index));
  Lattice out = direct_sum(parts);
  if (out.name.empty()) out.name = "0";
  return out;
}

Lattice lambda_abe(const StableType& t) { return lambda_abe(t.components); }

Lattice lambda_seg() {
  Lattice u{"U", {{0, 1}, {1, 0}}};
  Lattice e8m = negated(root_lattice('E', 8));
  return direct_sum({u, e8m, e8m});
}

bool rank_check(const Lattice& abe, const Lattice* period) {
  if (abe.rank() > 17) return false;
  return !period || abe.rank() <= period->rank();
}

std::vector<int> wps_weights(char family, int n) {
  const bool ok = (family == 'D' && n >= 4) || (family == 'E' && n >= 6 && n <= 8);
  if (!ok)
    throw Error(ErrorCode::BadIndex, std::string("no weighted projective weights for ") + family +
                                         std::to_string(n) + " (need D_n, n >= 4, or E_6..E_8)");
  const Matrix c = root_lattice(family, n).gram;
  // Ascend from a simple root: add alpha_i while (theta, alpha_i) < 0.
  Vec theta(n, 0);
  theta[0] = 1;
  for (bool moved = true; moved;) {
    moved = false;
    for (int i = 0; i < n; ++i) {
      long ip = 0;
      for (int j = 0; j < n; ++j) ip += theta[j] * c[j][i];
      if (ip < 0) {
        ++theta[i];
        moved = true;
      }
    }
  }
  std::vector<int> w{1};
  for (long m : theta) w.push_back(static_cast<int>(m));
  std::sort(w.begin(), w.end());
  return w;
}

std::pair<std::vector<int>, std::vector<int>> gm_weights() {
  return {{-4, -3, -2, 2, 3, 4}, {-6, -5, -4, -3, -2, -1, 1, 2, 3, 4, 5, 6}};
}

std::string gram_text(const Matrix& m) {
  std::string out;
  for (const auto& row : m) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out += " ";
      out += std::to_string(row[j]);
    }
    out += "\n";
  }
  return out;
}

}  // namespace k3deg
