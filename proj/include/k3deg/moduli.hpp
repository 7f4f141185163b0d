#pragma once

#include <string>
#include <vector>

#include "k3deg/classify.hpp"

namespace k3deg {

struct Stratum {
  std::string label;  // e.g. "E0 A17 E0"
  int codim = 1;
  bool is_nonnormal_locus = false;
  std::vector<int> params;  // component indices in label order
  std::string kind;         // "EAE", "ED", "EAAE", "EAD", "DD"
};

// 45 EAE (k1 <= k3, k2 = 17 - k1 - k3) followed by 9 ED.
std::vector<Stratum> enumerate_divisors();
// EAAE, EAD and DD strata up to reversal.
std::vector<Stratum> enumerate_codim2();
int nonnormal_count(const std::vector<Stratum>& strata);
// Each non-normal locus has two branches in the normalization.
int normalization_preimage_count(const std::vector<Stratum>& strata);
int chamber_count();

// children[i] is what the i-th parent component breaks into. Necessary
// conditions only: charge conservation and rank monotonicity per component.
bool degeneration_check(const StableType& parent,
                        const std::vector<std::vector<Component>>& children);

}  // namespace k3deg
