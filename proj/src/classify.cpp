#include "k3deg/classify.hpp"

#include <sstream>

#include "k3deg/error.hpp"

namespace k3deg {

std::string_view cusp_name(CuspKind k) {
  switch (k) {
    case CuspKind::TypeIII0Cusp: return "TYPE_III_0CUSP";
    case CuspKind::TypeIISeg: return "TYPE_II_SEG";
    case CuspKind::TypeIINN: return "TYPE_II_NN";
    case CuspKind::NNTo0Cusp: return "NN_TO_0CUSP";
    case CuspKind::NoDegeneration: return "NO_DEGENERATION";
    case CuspKind::Unrecognized: return "UNRECOGNIZED";
  }
  return "UNRECOGNIZED";
}

CuspKind cusp_from_name(std::string_view name) {
  for (auto k : {CuspKind::TypeIII0Cusp, CuspKind::TypeIISeg, CuspKind::TypeIINN,
                 CuspKind::NNTo0Cusp, CuspKind::NoDegeneration, CuspKind::Unrecognized})
    if (cusp_name(k) == name) return k;
  throw Error(ErrorCode::Parse, "unknown cusp kind " + std::string(name));
}

namespace {

SForm constant_form(int degree, const std::vector<Rat>& c) {
  std::vector<TLaurent> coeffs(c.begin(), c.end());
  return SForm(degree, std::move(coeffs));
}

bool single_term(const std::vector<Rat>& c, int index) {
  for (int i = 0; i < static_cast<int>(c.size()); ++i)
    if (i != index && c[i] != 0) return false;
  return true;
}

}  // namespace

CuspKind cusp_type(const FamilyPair& f) { return cusp_type(f, discriminant24(f)); }

CuspKind cusp_type(const FamilyPair& f, const SForm& delta) {
  if (delta.is_zero()) {
    SForm g4;
    try {
      g4 = nn_extract(f);
    } catch (const Error&) {
      return CuspKind::Unrecognized;
    }
    UPoly limit(g4.limit());
    // Four distinct points on P^1: at most one at infinity, no repeated roots.
    return limit.degree() >= 3 && limit.is_squarefree() ? CuspKind::TypeIINN
                                                        : CuspKind::NNTo0Cusp;
  }
  const std::vector<Rat> a = f.g8.limit(), b = f.g12.limit();
  FamilyPair lim;
  lim.g8 = constant_form(8, a);
  lim.g12 = constant_form(12, b);
  if (!discriminant24(lim).is_zero()) {
    try {
      minimality_check(lim);
      return CuspKind::NoDegeneration;
    } catch (const Error&) {
    }
  }
  if (single_term(a, 4) && single_term(b, 6)) {
    const Rat& c1 = a[4];
    const Rat& c2 = b[6];
    if (c1 != 0 && c2 != 0 && c1 * c1 * c1 == 27 * c2 * c2) return CuspKind::TypeIII0Cusp;
    return CuspKind::TypeIISeg;
  }
  return CuspKind::Unrecognized;
}

int Component::charge() const {
  switch (family) {
    case 'E': return index + 3;
    case 'D': return index + 4;
    default: return index + 1;
  }
}

int StableType::total_charge() const {
  int s = 0;
  for (const auto& c : components) s += c.charge();
  return s;
}

int StableType::rank() const {
  int s = 0;
  for (const auto& c : components) s += c.index;
  return s;
}

std::vector<int> StableType::charges() const {
  std::vector<int> out;
  for (const auto& c : components) out.push_back(c.charge());
  return out;
}

std::string StableType::str() const {
  std::string out;
  for (const auto& c : components) {
    if (!out.empty()) out += " ";
    out += c.str();
  }
  return out;
}

StableType StableType::reversed() const {
  return StableType{{components.rbegin(), components.rend()}};
}

StableType parse_stable_type(std::string_view text) {
  std::istringstream in{std::string(text)};
  StableType t;
  std::string tok;
  while (in >> tok) {
    if (tok.size() < 2 || (tok[0] != 'A' && tok[0] != 'D' && tok[0] != 'E') ||
        tok.find_first_not_of("0123456789", 1) != std::string::npos)
      throw Error(ErrorCode::Parse, "bad component '" + tok + "'");
    t.components.push_back({tok[0], std::stoi(tok.substr(1))});
  }
  return t;
}

StableType stable_type(const DensityFunction& v) {
  auto integral = [](const Rat& r) { return r.get_den() == 1; };
  std::vector<Rat> sl = v.slopes();
  for (const Rat& s : sl)
    if (!integral(s))
      throw Error(ErrorCode::InconsistentType, "non-integral slope " + to_string(s));
  auto end_component = [&](int m, const Rat& value, const char* side) {
    if (value == 0) {
      int k = m - 3;
      if (k > 8)
        throw Error(ErrorCode::InconsistentType,
                    std::string(side) + " end would be E" + std::to_string(k) +
                        " (index > 8: a type II picture, E~9, not a stable type III chain)");
      if (k < 0)
        throw Error(ErrorCode::InconsistentType, std::string(side) + " end E index " + std::to_string(k) + " < 0");
      return Component{'E', k};
    }
    int k = m - 4;
    if (k < 0)
      throw Error(ErrorCode::InconsistentType, std::string(side) + " end D index " + std::to_string(k) + " < 0");
    return Component{'D', k};
  };
  StableType t;
  const int m_left = 12 - static_cast<int>(sl.front().get_num().get_si());
  const int m_right = 12 + static_cast<int>(sl.back().get_num().get_si());
  t.components.push_back(end_component(m_left, v.left_value(), "left"));
  for (std::size_t k = 1; k < sl.size(); ++k) {
    Rat drop = sl[k - 1] - sl[k];
    if (drop <= 0)
      throw Error(ErrorCode::InconsistentType, "slope increases at w = " + to_string(v.points()[k].w));
    t.components.push_back({'A', static_cast<int>(drop.get_num().get_si()) - 1});
  }
  t.components.push_back(end_component(m_right, v.right_value(), "right"));
  if (t.total_charge() != 24)
    throw Error(ErrorCode::InconsistentType,
                "charges of " + t.str() + " sum to " + std::to_string(t.total_charge()) + ", not 24");
  return t;
}

EndSurface end_surface_data(const FamilyPair& f, Side side) {
  const FamilyPair g = side == Side::Left ? f : invert_s(f);
  const Rat e = end_exponents(g).e0.value();
  FamilyPair sub = g;
  for (int i = 0; i <= 8; ++i) sub.g8.set_coeff(i, g.g8.coeff(i).shifted(e * i));
  for (int i = 0; i <= 12; ++i) sub.g12.set_coeff(i, g.g12.coeff(i).shifted(e * i));
  sub = weight_normalize(sub);
  const std::vector<Rat> a = sub.g8.limit(), b = sub.g12.limit();
  for (int i = 5; i <= 8; ++i)
    if (a[i] != 0) throw Error(ErrorCode::UnrecognizedCusp, "end limit of g8 has degree > 4");
  for (int i = 7; i <= 12; ++i)
    if (b[i] != 0) throw Error(ErrorCode::UnrecognizedCusp, "end limit of g12 has degree > 6");
  EndSurface out;
  out.g4 = constant_form(4, {a.begin(), a.begin() + 5});
  out.g6 = constant_form(6, {b.begin(), b.begin() + 7});
  out.is_nodal = out.g4.pow(3) == TLaurent(27) * out.g6.pow(2);
  return out;
}

}  // namespace k3deg
