#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "k3deg/classify.hpp"
#include "k3deg/lattice.hpp"

namespace k3deg {

using RatPair = std::pair<std::string, std::string>;

// Everything `analyze` reports. Exact rationals are kept as "p/q" strings.
struct AnalysisReport {
  std::string input;
  std::string normalization_shift;
  std::string cusp;
  bool nn = false;   // e0/einf hold f(0)/f(inf) of G4 when set
  std::string e0;
  std::string einf;
  std::vector<RatPair> polygon_delta;
  std::vector<RatPair> polygon_g8;
  std::vector<RatPair> polygon_g12;
  std::vector<RatPair> v_native;      // on [-1, einf/e0]
  std::vector<RatPair> v_normalized;  // on [0, 1]
  std::vector<std::string> slopes;    // native
  std::string stable_type;
  std::vector<int> charges;
  std::string lattice_name;
  int lattice_rank = 0;
  std::string lattice_det;
  bool has_ends = false;
  bool left_nodal = false;
  bool right_nodal = false;
  std::vector<std::string> warnings;

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

void to_json(nlohmann::json& j, const AnalysisReport& r);
void from_json(const nlohmann::json& j, AnalysisReport& r);

struct Analysis {
  FamilyPair normalized;
  CuspKind cusp = CuspKind::Unrecognized;
  DensityFunction v_native;
  StableType type;
  Lattice abe;
  AnalysisReport report;
};

// parse -> normalize -> minimality -> cusp -> density -> stable type -> lattice.
Analysis analyze(const FamilyPair& raw);
Analysis analyze_text(const std::string& text);

std::string summary_text(const AnalysisReport& r);

}  // namespace k3deg
