#include <doctest.h>

#include "k3deg/classify.hpp"
#include "k3deg/error.hpp"
#include "k3deg/family.hpp"
#include "support/families.hpp"

using namespace k3deg;
using namespace k3deg::testing;

namespace {

CuspKind cusp_of(const std::string& text) { return cusp_type(weight_normalize(parse_family(text))); }

}  // namespace

TEST_CASE("cusp_type examples") {
  CHECK(cusp_type(weight_normalize(load("zensha"))) == CuspKind::TypeIII0Cusp);
  CHECK(cusp_type(weight_normalize(load("tent"))) == CuspKind::TypeIII0Cusp);
  CHECK(cusp_type(weight_normalize(load("simplest_d"))) == CuspKind::NNTo0Cusp);
  CHECK(cusp_of("let q(u) = (u - 1)*(u - 2)*(u - 3)*(u - 5)\ng8 = 3*q(s)^2\ng12 = q(s)^3") ==
        CuspKind::TypeIINN);
  CHECK(cusp_of("g8 = 1 + s^8\ng12 = s^12 + 2*s + 1") == CuspKind::NoDegeneration);
  CHECK(cusp_of("g8 = s^4 + t\ng12 = s^6 + t*s") == CuspKind::TypeIISeg);
  CHECK(cusp_of("g8 = 3*s^4 + t\ng12 = -s^6 + t*s") == CuspKind::TypeIII0Cusp);
  CHECK(cusp_of("g8 = 3*s^4\ng12 = t*s^6") == CuspKind::TypeIISeg);
}

TEST_CASE("cusp names round-trip") {
  for (CuspKind k : {CuspKind::TypeIII0Cusp, CuspKind::TypeIISeg, CuspKind::TypeIINN, CuspKind::NNTo0Cusp,
                     CuspKind::NoDegeneration, CuspKind::Unrecognized})
    CHECK(cusp_from_name(cusp_name(k)) == k);
}

TEST_CASE("charges and parsing") {
  CHECK(Component{'E', 0}.charge() == 3);
  CHECK(Component{'A', 17}.charge() == 18);
  CHECK(Component{'D', 8}.charge() == 12);
  StableType t = parse_stable_type("E3 A11 E3");
  CHECK(t.total_charge() == 24);
  CHECK(t.rank() == 17);
  CHECK(t.charges() == std::vector<int>{6, 12, 6});
  CHECK(parse_stable_type(t.str()) == t);
  CHECK(parse_stable_type("D2 D14").reversed().str() == "D14 D2");
  CHECK_THROWS_AS(parse_stable_type("Q3"), Error);
}

TEST_CASE("stable_type from hand-made densities") {
  CHECK(stable_type(DensityFunction({{-1, 0}, {0, 9}, {1, 0}})).str() == "E0 A17 E0");
  CHECK(stable_type(DensityFunction({{-1, 1}, {1, 1}})).str() == "D8 D8");
  CHECK(stable_type(DensityFunction({{-1, 0}, {1, 4}})).str() == "E7 D10");
  CHECK(stable_type(DensityFunction({{-1, 3}, {0, 6}, {2, 4}})).str() == "D5 A3 D7");
  CHECK(stable_type(DensityFunction({{-1, 0}, {Rat(-1, 2), 4}, {1, 1}})).str() == "E1 A9 D6");
  try {
    stable_type(DensityFunction({{-1, 0}, {1, 0}}));
    FAIL("E9 accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InconsistentType);
    CHECK(std::string(e.what()).find("E9") != std::string::npos);
  }
}

TEST_CASE("stable type of named families") {
  auto type_of = [](const char* name) {
    FamilyPair f = weight_normalize(load(name));
    return stable_type(density_master_native(f)).str();
  };
  CHECK(type_of("zensha") == "E0 A17 E0");
  CHECK(type_of("kousha") == "E0 A17 E0");
  CHECK(type_of("tent") == "E3 A11 E3");
  CHECK(type_of("d_mixed") == "D2 D14");
}

TEST_CASE("end surfaces") {
  FamilyPair tent = weight_normalize(load("tent"));
  EndSurface l = end_surface_data(tent, Side::Left);
  CHECK_FALSE(l.is_nodal);
  CHECK(l.g4 == form(4, {{4, TLaurent(3)}}).with_formal_degree(4));
  CHECK(l.g6 == form(6, {{0, TLaurent(1)}, {6, TLaurent(1)}}));
  CHECK_FALSE(end_surface_data(tent, Side::Right).is_nodal);
  FamilyPair dm = weight_normalize(load("d_mixed"));
  CHECK(end_surface_data(dm, Side::Left).is_nodal);
  CHECK(end_surface_data(dm, Side::Right).is_nodal);
  FamilyPair z = weight_normalize(load("zensha"));
  CHECK_FALSE(end_surface_data(z, Side::Left).is_nodal);
  CHECK_FALSE(end_surface_data(z, Side::Right).is_nodal);
}
