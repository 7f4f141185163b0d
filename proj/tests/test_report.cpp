#include <doctest.h>

#include "k3deg/error.hpp"
#include "k3deg/report.hpp"
#include "support/corpus.hpp"
#include "support/families.hpp"

using namespace k3deg;
using namespace k3deg::testing;

TEST_CASE("zensha analysis") {
  Analysis a = analyze_text(family_text("zensha"));
  const AnalysisReport& r = a.report;
  CHECK(r.cusp == "TYPE_III_0CUSP");
  CHECK(r.normalization_shift == "4");
  CHECK(r.stable_type == "E0 A17 E0");
  CHECK(r.charges == std::vector<int>{3, 18, 3});
  CHECK(r.v_normalized == std::vector<RatPair>{{"0", "0"}, {"1/2", "9"}, {"1", "0"}});
  CHECK(r.polygon_delta == std::vector<RatPair>{{"0", "12"}, {"3", "9"}, {"21", "9"}, {"24", "12"}});
  CHECK(r.lattice_name == "A17");
  CHECK(r.lattice_det == "18");
  CHECK(r.has_ends);
  CHECK_FALSE(r.left_nodal);
  CHECK(r.warnings.empty());
}

TEST_CASE("nn analysis") {
  AnalysisReport r = analyze_text(family_text("simplest_d")).report;
  CHECK(r.nn);
  CHECK(r.stable_type == "D8 D8");
  CHECK(r.v_normalized == std::vector<RatPair>{{"0", "1"}, {"1", "1"}});
}

TEST_CASE("json round-trip") {
  Corpus corpus(99);
  std::vector<AnalysisReport> reports;
  for (const char* name : {"zensha", "kousha", "tent", "d_mixed", "simplest_d"})
    reports.push_back(analyze_text(family_text(name)).report);
  while (reports.size() < 25) {
    try {
      reports.push_back(analyze(corpus.next()).report);
    } catch (const Error&) {
    }
  }
  for (const auto& r : reports) {
    nlohmann::json j = r;
    CHECK(j.at("stable_type").get<std::string>() == r.stable_type);
    AnalysisReport back = nlohmann::json::parse(j.dump()).get<AnalysisReport>();
    CHECK(back == r);
  }
}

TEST_CASE("analysis errors") {
  auto code = [](const std::string& text) {
    try {
      analyze_text(text);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Precondition;
  };
  CHECK(code(family_text("zensha_literal")) == ErrorCode::InconsistentType);
  CHECK(code("g8 = 1 + s^8\ng12 = s^12 + 2*s + 1") == ErrorCode::UnrecognizedCusp);
  CHECK(code("g8 = 3*s^8\ng12 = s^12") == ErrorCode::NotMinimal);
  CHECK(code("g8 = 3*s^4 +\ng12 = s^6") == ErrorCode::Parse);
}
