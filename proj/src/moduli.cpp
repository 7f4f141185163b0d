#include "k3deg/moduli.hpp"

#include <algorithm>

namespace k3deg {
namespace {

Stratum make(std::string kind, int codim, const std::vector<Component>& comps) {
  Stratum s;
  s.kind = std::move(kind);
  s.codim = codim;
  StableType t{comps};
  s.label = t.str();
  for (const auto& c : comps) s.params.push_back(c.index);
  return s;
}

}  // namespace

std::vector<Stratum> enumerate_divisors() {
  std::vector<Stratum> out;
  for (int k1 = 0; k1 <= 8; ++k1)
    for (int k3 = k1; k3 <= 8; ++k3)
      out.push_back(make("EAE", 1, {{'E', k1}, {'A', 17 - k1 - k3}, {'E', k3}}));
  for (int k = 0; k <= 8; ++k) out.push_back(make("ED", 1, {{'E', k}, {'D', 17 - k}}));
  return out;
}

std::vector<Stratum> enumerate_codim2() {
  std::vector<Stratum> out;
  for (int k1 = 0; k1 <= 8; ++k1)
    for (int k4 = 0; k4 <= 8; ++k4)
      for (int k2 = 0; k1 + k2 + k4 <= 16; ++k2) {
        const int k3 = 16 - k1 - k2 - k4;
        std::vector<int> fw{k1, k2, k3, k4}, bw{k4, k3, k2, k1};
        if (bw < fw) continue;
        out.push_back(make("EAAE", 2, {{'E', k1}, {'A', k2}, {'A', k3}, {'E', k4}}));
      }
  for (int k1 = 0; k1 <= 8; ++k1)
    for (int k2 = 0; k1 + k2 <= 16; ++k2) {
      Stratum s = make("EAD", 2, {{'E', k1}, {'A', k2}, {'D', 16 - k1 - k2}});
      s.is_nonnormal_locus = k1 + k2 == 16;
      out.push_back(s);
    }
  for (int a = 0; a <= 8; ++a) {
    Stratum s = make("DD", 2, {{'D', a}, {'D', 16 - a}});
    s.is_nonnormal_locus = a == 0;
    out.push_back(s);
  }
  return out;
}

int nonnormal_count(const std::vector<Stratum>& strata) {
  return static_cast<int>(std::count_if(strata.begin(), strata.end(),
                                        [](const Stratum& s) { return s.is_nonnormal_locus; }));
}

int normalization_preimage_count(const std::vector<Stratum>& strata) {
  return 2 * nonnormal_count(strata);
}

int chamber_count() {
  int n = 1;
  for (int i = 0; i < 1 + 1; ++i) n *= 3;
  return n;
}

bool degeneration_check(const StableType& parent,
                        const std::vector<std::vector<Component>>& children) {
  if (children.size() != parent.components.size()) return false;
  for (std::size_t i = 0; i < children.size(); ++i) {
    int charge = 0, rank = 0;
    for (const auto& c : children[i]) {
      charge += c.charge();
      rank += c.index;
    }
    if (charge != parent.components[i].charge() || rank > parent.components[i].index) return false;
  }
  return true;
}

}  // namespace k3deg
