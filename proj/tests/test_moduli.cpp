#include <doctest.h>

#include <set>

#include "k3deg/classify.hpp"
#include "k3deg/moduli.hpp"

using namespace k3deg;

namespace {

// Chains of total charge 24 (E_k: k + 3, A_k: k + 1, D_k: k + 4), up to
// reversal, with E indices at most 8.
struct Counts {
  int eae = 0, ed = 0, eaae = 0, ead = 0, dd = 0, nonnormal = 0;
};

Counts count_by_charge() {
  Counts c;
  for (int a = 0; a <= 8; ++a)
    for (int b = a; b <= 8; ++b)
      if (17 - a - b >= 0) ++c.eae;
  for (int a = 0; a <= 8; ++a) ++c.ed;  // D_{17 - a}
  std::set<std::vector<int>> seen;
  for (int a = 0; a <= 8; ++a)
    for (int d = 0; d <= 8; ++d)
      for (int b = 0; a + b + d <= 16; ++b) {
        std::vector<int> v{a, b, 16 - a - b - d, d};
        seen.insert(std::min(v, std::vector<int>(v.rbegin(), v.rend())));
      }
  c.eaae = static_cast<int>(seen.size());
  for (int a = 0; a <= 8; ++a)
    for (int b = 0; a + b <= 16; ++b) {
      ++c.ead;
      if (a + b == 16) ++c.nonnormal;  // D_0
    }
  for (int a = 0; a <= 8; ++a) ++c.dd;  // D_a D_{16 - a}
  ++c.nonnormal;                        // D0 D16
  return c;
}

int count_kind(const std::vector<Stratum>& s, const std::string& kind) {
  return static_cast<int>(std::count_if(s.begin(), s.end(), [&](const Stratum& x) { return x.kind == kind; }));
}

}  // namespace

TEST_CASE("divisors") {
  auto d = enumerate_divisors();
  Counts c = count_by_charge();
  CHECK(c.eae == 45);
  CHECK(c.ed == 9);
  CHECK(d.size() == 54);
  CHECK(count_kind(d, "EAE") == 45);
  CHECK(count_kind(d, "ED") == 9);
  std::set<std::string> labels;
  for (const auto& s : d) {
    CAPTURE(s.label);
    labels.insert(s.label);
    StableType t = parse_stable_type(s.label);
    CHECK(t.total_charge() == 24);
    CHECK(t.rank() == 17);
    CHECK(s.codim == 1);
    CHECK_FALSE(s.is_nonnormal_locus);
  }
  CHECK(labels.size() == 54);
}

TEST_CASE("codimension two") {
  auto s = enumerate_codim2();
  Counts c = count_by_charge();
  CHECK(count_kind(s, "EAAE") == c.eaae);
  CHECK(count_kind(s, "EAD") == c.ead);
  CHECK(count_kind(s, "DD") == c.dd);
  CHECK(nonnormal_count(s) == c.nonnormal);
  CHECK(nonnormal_count(s) == 10);
  CHECK(normalization_preimage_count(s) == 20);
  std::set<std::string> labels;
  for (const auto& x : s) {
    CAPTURE(x.label);
    labels.insert(x.label);
    StableType t = parse_stable_type(x.label);
    CHECK(t.total_charge() == 24);
    CHECK(t.rank() == 16);
    CHECK(x.codim == 2);
    if (x.is_nonnormal_locus) CHECK(x.label.find("D0") != std::string::npos);
  }
  CHECK(labels.size() == s.size());
}

TEST_CASE("chambers") { CHECK(chamber_count() == 9); }

TEST_CASE("degeneration_check") {
  StableType parent = parse_stable_type("E0 A17 E0");
  CHECK(degeneration_check(parent, {{{'E', 0}}, {{'A', 8}, {'A', 8}}, {{'E', 0}}}));
  CHECK_FALSE(degeneration_check(parent, {{{'E', 0}}, {{'A', 8}, {'A', 7}}, {{'E', 0}}}));
  CHECK_FALSE(degeneration_check(parent, {{{'E', 0}}, {{'A', 17}}}));
  StableType d = parse_stable_type("D2 D14");
  CHECK(degeneration_check(d, {{{'D', 2}}, {{'D', 0}, {'A', 13}}}));
}
