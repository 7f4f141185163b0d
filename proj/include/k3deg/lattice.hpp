#pragma once

#include <string>
#include <utility>
#include <vector>

#include "k3deg/classify.hpp"

namespace k3deg {

using Matrix = std::vector<std::vector<long>>;

struct Lattice {
  std::string name;
  Matrix gram;
  int rank() const { return static_cast<int>(gram.size()); }
};

// A_n, D_n (n >= 0) and E_n (0 <= n <= 8), positive definite.
Lattice root_lattice(char family, int n);
// Manin's E_n before the sign flip: K_n^perp inside Zl + Ze_1 + ... + Ze_n
// with l^2 = 1, e_i^2 = -1, K_n = -3l + sum e_i. Negative definite.
Matrix manin_gram(int n);

Lattice direct_sum(const std::vector<Lattice>& parts);
Lattice negated(const Lattice& l);

Int determinant(const Matrix& m);
// (positive, negative) inertia, exact.
std::pair<int, int> signature(const Matrix& m);
bool is_even(const Matrix& m);
bool is_symmetric(const Matrix& m);
// Number of nonzero vectors v with v^T G v == norm; G positive definite.
long count_vectors(const Lattice& l, long norm);

Lattice lambda_abe(const StableType& t);
Lattice lambda_abe(const std::vector<Component>& components);
// U + E8(-1) + E8(-1): rank 18, signature (1, 17), unimodular, even.
Lattice lambda_seg();

// Necessary conditions for Lambda_ABE inside a period lattice.
bool rank_check(const Lattice& abe, const Lattice* period = nullptr);

// [1] followed by the sorted marks of the highest root (D_n, n >= 4; E_6..E_8).
std::vector<int> wps_weights(char family, int n);
// Gm weights on the slice: g8 side and g12 side.
std::pair<std::vector<int>, std::vector<int>> gm_weights();

std::string gram_text(const Matrix& m);

}  // namespace k3deg
