#include "k3deg/report.hpp"

#include "k3deg/error.hpp"
#include "k3deg/parser.hpp"

namespace k3deg {

using nlohmann::json;

namespace {

json pairs_json(const std::vector<RatPair>& v) {
  json a = json::array();
  for (const auto& [x, y] : v) a.push_back({x, y});
  return a;
}

std::vector<RatPair> pairs_from(const json& a) {
  std::vector<RatPair> out;
  for (const auto& p : a) out.emplace_back(p.at(0).get<std::string>(), p.at(1).get<std::string>());
  return out;
}

std::vector<RatPair> hull_pairs(const SForm& p) {
  std::vector<RatPair> out;
  if (p.is_zero()) return out;
  const TropicalPolynomial T = newton_polygon(p);
  for (const auto& v : T.hull()) out.emplace_back(to_string(v.x), to_string(v.y));
  return out;
}

std::vector<RatPair> density_pairs(const DensityFunction& v) {
  std::vector<RatPair> out;
  for (const auto& p : v.points()) out.emplace_back(to_string(p.w), to_string(p.v));
  return out;
}

}  // namespace

void to_json(json& j, const AnalysisReport& r) {
  j = json{
      {"input", r.input},
      {"normalization_shift", r.normalization_shift},
      {"cusp", r.cusp},
      {"nn", r.nn},
      {"e0", r.e0},
      {"einf", r.einf},
      {"newton_polygons",
       {{"delta", pairs_json(r.polygon_delta)},
        {"g8", pairs_json(r.polygon_g8)},
        {"g12", pairs_json(r.polygon_g12)}}},
      {"density",
       {{"native", pairs_json(r.v_native)},
        {"normalized", pairs_json(r.v_normalized)},
        {"slopes", r.slopes}}},
      {"stable_type", r.stable_type},
      {"charges", r.charges},
      {"lattice", {{"name", r.lattice_name}, {"rank", r.lattice_rank}, {"det", r.lattice_det}}},
      {"warnings", r.warnings},
  };
  if (r.has_ends) j["ends"] = {{"left_nodal", r.left_nodal}, {"right_nodal", r.right_nodal}};
}

void from_json(const json& j, AnalysisReport& r) {
  r.input = j.at("input").get<std::string>();
  r.normalization_shift = j.at("normalization_shift").get<std::string>();
  r.cusp = j.at("cusp").get<std::string>();
  r.nn = j.at("nn").get<bool>();
  r.e0 = j.at("e0").get<std::string>();
  r.einf = j.at("einf").get<std::string>();
  const auto& np = j.at("newton_polygons");
  r.polygon_delta = pairs_from(np.at("delta"));
  r.polygon_g8 = pairs_from(np.at("g8"));
  r.polygon_g12 = pairs_from(np.at("g12"));
  const auto& d = j.at("density");
  r.v_native = pairs_from(d.at("native"));
  r.v_normalized = pairs_from(d.at("normalized"));
  r.slopes = d.at("slopes").get<std::vector<std::string>>();
  r.stable_type = j.at("stable_type").get<std::string>();
  r.charges = j.at("charges").get<std::vector<int>>();
  const auto& l = j.at("lattice");
  r.lattice_name = l.at("name").get<std::string>();
  r.lattice_rank = l.at("rank").get<int>();
  r.lattice_det = l.at("det").get<std::string>();
  r.warnings = j.at("warnings").get<std::vector<std::string>>();
  r.has_ends = j.contains("ends");
  if (r.has_ends) {
    r.left_nodal = j["ends"].at("left_nodal").get<bool>();
    r.right_nodal = j["ends"].at("right_nodal").get<bool>();
  }
}

Analysis analyze(const FamilyPair& raw) {
  Analysis a;
  AnalysisReport& r = a.report;
  r.input = raw.source_text;
  a.normalized = weight_normalize(raw);
  const FamilyPair& f = a.normalized;
  r.normalization_shift = to_string(f.shift);
  const SForm delta = discriminant24(f);
  minimality_check(f, delta);
  a.cusp = cusp_type(f, delta);
  r.cusp = std::string(cusp_name(a.cusp));
  r.polygon_g8 = hull_pairs(f.g8);
  r.polygon_g12 = hull_pairs(f.g12);
  r.polygon_delta = hull_pairs(delta);

  if (a.cusp == CuspKind::NoDegeneration)
    throw Error(ErrorCode::UnrecognizedCusp, "the family does not degenerate (NO_DEGENERATION)");

  if (delta.is_zero()) {
    r.nn = true;
    const SForm g4 = nn_extract(f);
    const EndExponents e = nn_end_exponents(g4);
    r.e0 = e.e0.str();
    r.einf = e.einf.str();
    a.v_native = density_nn_native(g4);
  } else {
    const EndExponents e = end_exponents(f);
    r.e0 = e.e0.str();
    r.einf = e.einf.str();
    a.v_native = density_master_native(f, delta);
    const DensityFunction step2 = density_step2(cut_data(f, delta));
    if (step2.slopes() != a.v_native.slopes())
      throw Error(ErrorCode::InconsistentType, "master and summation formulas disagree on slopes");
    r.has_ends = true;
    r.left_nodal = end_surface_data(f, Side::Left).is_nodal;
    r.right_nodal = end_surface_data(f, Side::Right).is_nodal;
    if (r.left_nodal != (a.v_native.left_value() != 0) ||
        r.right_nodal != (a.v_native.right_value() != 0))
      r.warnings.push_back("end surface nodality disagrees with the end values of V");
  }
  r.v_native = density_pairs(a.v_native);
  r.v_normalized = density_pairs(a.v_native.normalized());
  for (const Rat& s : a.v_native.slopes()) r.slopes.push_back(to_string(s));
  if (a.cusp == CuspKind::TypeIISeg)
    r.warnings.push_back("SBB limit is the seg cusp; the stable type below is reported independently");

  a.type = stable_type(a.v_native);
  r.stable_type = a.type.str();
  r.charges = a.type.charges();
  a.abe = lambda_abe(a.type);
  r.lattice_name = a.abe.name;
  r.lattice_rank = a.abe.rank();
  r.lattice_det = determinant(a.abe.gram).get_str();
  if (!rank_check(a.abe)) r.warnings.push_back("Lambda_ABE has rank above 17");
  return a;
}

Analysis analyze_text(const std::string& text) { return analyze(parse_family(text)); }

std::string summary_text(const AnalysisReport& r) {
  std::string s;
  s += "cusp:          " + r.cusp + "\n";
  s += "shift c:       " + r.normalization_shift + "\n";
  s += std::string(r.nn ? "f0, finf:      " : "e0, einf:      ") + r.e0 + ", " + r.einf + "\n";
  s += "V on [0,1]:   ";
  for (const auto& [w, v] : r.v_normalized) s += " (" + w + ", " + v + ")";
  s += "\nslopes:       ";
  for (const auto& x : r.slopes) s += " " + x;
  s += "\nstable type:   " + r.stable_type + "\ncharges:      ";
  for (int c : r.charges) s += " " + std::to_string(c);
  s += "\nLambda_ABE:    " + r.lattice_name + " (rank " + std::to_string(r.lattice_rank) +
       ", det " + r.lattice_det + ")\n";
  for (const auto& w : r.warnings) s += "warning: " + w + "\n";
  return s;
}

}  // namespace k3deg
