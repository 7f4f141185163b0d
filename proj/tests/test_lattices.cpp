#include <doctest.h>

#include <array>

#include "k3deg/classify.hpp"
#include "k3deg/error.hpp"
#include "k3deg/lattice.hpp"

using namespace k3deg;

namespace {

// Plain Gaussian elimination over Q.
Rat gauss_det(const Matrix& m) {
  const size_t n = m.size();
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
  Rat det = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (size_t r = c + 1; r < n; ++r) {
      Rat k = a[r][c] / a[c][c];
      for (size_t j = c; j < n; ++j) a[r][j] -= k * a[c][j];
    }
  }
  return det;
}

// Roots of E8 in Manin's model: v = a l - sum b_i e_i with v.K = 0, v^2 = -2,
// i.e. sum b_i = 3a and a^2 - sum b_i^2 = -2. |a| <= 3 and |b_i| <= 2 cover
// every solution.
long manin_root_count() {
  long count = 0;
  std::array<int, 8> b{};
  for (int a = -3; a <= 3; ++a) {
    long total = 1;
    for (int i = 0; i < 8; ++i) total *= 5;
    for (long code = 0; code < total; ++code) {
      long c = code;
      int sum = 0, sq = 0;
      for (int i = 0; i < 8; ++i) {
        b[i] = static_cast<int>(c % 5) - 2;
        c /= 5;
        sum += b[i];
        sq += b[i] * b[i];
      }
      if (sum == 3 * a && a * a - sq == -2) ++count;
    }
  }
  return count;
}

}  // namespace

TEST_CASE("determinants against a Gaussian oracle") {
  for (int n = 1; n <= 17; ++n) {
    Lattice a = root_lattice('A', n);
    CHECK(Rat(determinant(a.gram)) == gauss_det(a.gram));
    CHECK(determinant(a.gram) == n + 1);
  }
  for (int n = 2; n <= 17; ++n) {
    CAPTURE(n);
    CHECK(determinant(root_lattice('D', n).gram) == 4);
    CHECK(gauss_det(root_lattice('D', n).gram) == 4);
  }
  CHECK(determinant(root_lattice('E', 6).gram) == 3);
  CHECK(determinant(root_lattice('E', 7).gram) == 2);
  CHECK(determinant(root_lattice('E', 8).gram) == 1);
  for (int n = 1; n <= 8; ++n) CHECK(Rat(determinant(root_lattice('E', n).gram)) == gauss_det(root_lattice('E', n).gram));
}

TEST_CASE("E8 root count") {
  CHECK(manin_root_count() == 240);
  CHECK(count_vectors(root_lattice('E', 8), 2) == 240);
  CHECK(count_vectors(negated(Lattice{"manin", manin_gram(8)}), 2) == 240);
}

TEST_CASE("root counts of other families") {
  for (int n = 1; n <= 7; ++n) CHECK(count_vectors(root_lattice('A', n), 2) == n * (n + 1));
  for (int n = 4; n <= 7; ++n) CHECK(count_vectors(root_lattice('D', n), 2) == 2 * n * (n - 1));
  CHECK(count_vectors(root_lattice('E', 6), 2) == 72);
  CHECK(count_vectors(root_lattice('E', 7), 2) == 126);
}

TEST_CASE("Manin E_n and low-index conventions") {
  CHECK(manin_gram(2) == Matrix{{-2, 3}, {3, -8}});
  CHECK(root_lattice('E', 3).rank() == 3);
  CHECK(determinant(root_lattice('E', 3).gram) == 6);   // A2 + A1
  CHECK(determinant(root_lattice('E', 4).gram) == 5);   // A4
  CHECK(determinant(root_lattice('E', 5).gram) == 4);   // D5
  CHECK(root_lattice('E', 0).rank() == 0);
  CHECK(root_lattice('D', 1).gram == Matrix{{4}});
  CHECK(signature(manin_gram(8)) == std::pair{0, 8});
  CHECK(signature(root_lattice('E', 8).gram) == std::pair{8, 0});
  CHECK(is_even(root_lattice('D', 5).gram));
  CHECK(is_even(root_lattice('E', 2).gram));
  CHECK_FALSE(is_even(Matrix{{1, 0}, {0, 2}}));
}

TEST_CASE("wps weights") {
  CHECK(wps_weights('E', 8) == std::vector<int>{1, 2, 2, 3, 3, 4, 4, 5, 6});
  CHECK(wps_weights('E', 7) == std::vector<int>{1, 1, 2, 2, 2, 3, 3, 4});
  CHECK(wps_weights('E', 6) == std::vector<int>{1, 1, 1, 2, 2, 2, 3});
  for (int l = 4; l <= 12; ++l) {
    std::vector<int> expect{1, 1, 1, 1};
    expect.insert(expect.end(), l - 3, 2);
    CHECK(wps_weights('D', l) == expect);
  }
  CHECK_THROWS_AS(wps_weights('A', 3), Error);
  CHECK_THROWS_AS(wps_weights('E', 5), Error);
}

TEST_CASE("Lambda_ABE and Lambda_seg") {
  Lattice z = lambda_abe(parse_stable_type("E0 A17 E0"));
  CHECK(z.name == "A17");
  CHECK(z.rank() == 17);
  CHECK(determinant(z.gram) == 18);
  Lattice t = lambda_abe(parse_stable_type("E3 A11 E3"));
  CHECK(t.rank() == 17);
  CHECK(determinant(t.gram) == 432);
  CHECK(determinant(lambda_abe(parse_stable_type("D8 D8")).gram) == 16);
  Lattice seg = lambda_seg();
  CHECK(seg.rank() == 18);
  CHECK(signature(seg.gram) == std::pair{1, 17});
  CHECK(abs(determinant(seg.gram)) == 1);
  CHECK(is_even(seg.gram));
  CHECK(is_symmetric(seg.gram));
  CHECK(rank_check(z));
  CHECK(rank_check(z, &seg));
  CHECK_FALSE(rank_check(direct_sum({root_lattice('A', 17), root_lattice('A', 1)})));
}

TEST_CASE("gm weights") {
  auto [w8, w12] = gm_weights();
  CHECK(w8 == std::vector<int>{-4, -3, -2, 2, 3, 4});
  CHECK(w12 == std::vector<int>{-6, -5, -4, -3, -2, -1, 1, 2, 3, 4, 5, 6});
}
