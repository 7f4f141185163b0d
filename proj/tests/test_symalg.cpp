#include <doctest.h>

#include "k3deg/error.hpp"
#include "k3deg/family.hpp"
#include "k3deg/parser.hpp"
#include "support/corpus.hpp"
#include "support/families.hpp"

using namespace k3deg;
using namespace k3deg::testing;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::Precondition;
}

// Discriminant by explicit coefficient convolution.
SForm naive_discriminant(const FamilyPair& f) {
  std::vector<TLaurent> a(f.g8.coeffs()), b(f.g12.coeffs());
  std::vector<TLaurent> a2(17), a3(25), b2(25);
  for (int i = 0; i <= 8; ++i)
    for (int j = 0; j <= 8; ++j) a2[i + j] += a[i] * a[j];
  for (int i = 0; i <= 16; ++i)
    for (int j = 0; j <= 8; ++j) a3[i + j] += a2[i] * a[j];
  for (int i = 0; i <= 12; ++i)
    for (int j = 0; j <= 12; ++j) b2[i + j] += b[i] * b[j];
  std::vector<TLaurent> d(25);
  for (int k = 0; k <= 24; ++k) d[k] = a3[k] - TLaurent(27) * b2[k];
  return SForm(24, d);
}

}  // namespace

TEST_CASE("Rat is canonical") {
  Rat r(6, -4);
  r.canonicalize();
  CHECK(r.get_num() == -3);
  CHECK(r.get_den() == 2);
  CHECK(to_string(r) == "-3/2");
  CHECK(to_string(Rat(5)) == "5");
  CHECK(parse_rat("10/4") == Rat(5, 2));
}

TEST_CASE("ExtRat ordering and negation") {
  CHECK(ExtRat::neg_inf() < ExtRat(-100));
  CHECK(ExtRat(3) < ExtRat::pos_inf());
  CHECK(-ExtRat::neg_inf() == ExtRat::pos_inf());
  CHECK(std::min(ExtRat::pos_inf(), ExtRat(2)) == ExtRat(2));
}

TEST_CASE("TLaurent arithmetic") {
  TLaurent a = tpow(1) + TLaurent(2);
  TLaurent b = tpow(1) - TLaurent(2);
  CHECK(a * b == tpow(2) - TLaurent(4));
  CHECK((a - a).is_zero());
  CHECK((a - a).val().is_pos_inf());
  CHECK(tpow(Rat(-3, 2), 5).val() == ExtRat(Rat(-3, 2)));
  CHECK(tpow(Rat(1, 2)).ramification() == 2);
  auto q = TLaurent::divide_exact(tpow(2) - TLaurent(4), b);
  REQUIRE(q);
  CHECK(*q == a);
  CHECK_FALSE(TLaurent::divide_exact(TLaurent(1), a));
  CHECK(TLaurent::divide_exact(tpow(5), tpow(7)).value() == tpow(-2));
  CHECK(tpow(2, 3).specialize(Rat(1, 2), 1) == Rat(3, 4));
  CHECK(tpow(Rat(1, 2)).specialize(Rat(3), 2) == 3);
}

TEST_CASE("TLaurent printing") {
  CHECK((tpow(-2, Rat(3, 2)) + tpow(1)).str() == "3/2*t^(-2) + t");
  CHECK((TLaurent(-1) + tpow(Rat(1, 3), -2)).str() == "-1 - 2*t^(1/3)");
  CHECK(TLaurent().str() == "0");
}

TEST_CASE("UPoly gcd and squarefree") {
  UPoly x({Rat(0), Rat(1)});
  UPoly p = (x - UPoly({Rat(1)})) * (x - UPoly({Rat(1)})) * (x + UPoly({Rat(2)}));
  CHECK_FALSE(p.is_squarefree());
  CHECK(UPoly::gcd(p, p.derivative()) == (x - UPoly({Rat(1)})));
  CHECK((x * x + UPoly({Rat(1)})).is_squarefree());
}

TEST_CASE("parse_family: trivial constant family") {
  FamilyPair f = parse_family("g8 = 3*s^4 \n g12 = s^6");
  CHECK(f.g8 == form(8, {{4, TLaurent(3)}}));
  CHECK(f.g12 == form(12, {{6, TLaurent(1)}}));
}

TEST_CASE("parse_family: the printed Davenport-Stothers product") {
  FamilyPair f = parse_family(
      "let g4(u)=3*(u^4+2*u); let g6(u)=u^6+3*u^2+3/2;"
      "g8=g4(s/t)*g4(1/(t*s))*s^4; g12=g6(s/t)*g6(1/(t*s))*s^6");
  CHECK(f.g8.actual_degree() == 7);
  CHECK(f.g12.actual_degree() == 12);
  // Independent expansion: g4(s/t) g4(1/(ts)) s^4 =
  // 9 (s^4/t^4 + 2 s/t)(1/(t^4 s^4) + 2/(t s)) s^4.
  SForm expect = form(8, {{4, tpow(-8, 9)}, {1, tpow(-5, 18)}, {7, tpow(-5, 18)}, {4, tpow(-2, 36)}});
  CHECK(f.g8 == expect);
}

TEST_CASE("parse_family: errors") {
  CHECK(code_of([] { parse_family("g8 = 1/(s+t) \n g12 = 0"); }) == ErrorCode::NotPoly);
  CHECK(code_of([] { parse_family("g8 = 1/s\ng12 = 1"); }) == ErrorCode::NotPoly);
  CHECK(code_of([] { parse_family("g8 = s^9\ng12 = 1"); }) == ErrorCode::Degree);
  CHECK(code_of([] { parse_family("g8 = s^(1/2)\ng12 = 1"); }) == ErrorCode::Parse);
  CHECK(code_of([] { parse_family("g8 = 1"); }) == ErrorCode::Parse);
  CHECK(code_of([] { parse_family("g8 = 0\ng12 = 0"); }) == ErrorCode::ZeroForm);
  CHECK(code_of([] { parse_family("let f(u) = g(u)\nlet g(u) = u\ng8 = f(s)\ng12 = 1"); }) == ErrorCode::Parse);
  CHECK(code_of([] { parse_family("g8 = 1/0\ng12 = 1"); }) == ErrorCode::Parse);
  try {
    parse_family("g8 = 3*s^4\ng12 = s^6 + * 2");
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Parse);
    CHECK(e.line() == 2);
    CHECK(e.column() == 13);
  }
}

TEST_CASE("parse_family: exact division, rational t exponents, comments") {
  FamilyPair f = parse_family(
      "# comment\n"
      "g8 = (s^2 - t^2)/(s - t)   # trailing comment\n"
      "g12 = t^(1/2) * s^3 - t^(-3) + (s\n + 1)^2\n");
  CHECK(f.g8 == form(8, {{1, TLaurent(1)}, {0, tpow(1)}}));
  CHECK(f.g12 == form(12, {{3, tpow(Rat(1, 2))}, {0, tpow(-3, -1) + TLaurent(1)}, {1, TLaurent(2)}, {2, TLaurent(1)}}));
  CHECK(parse_family("g8 = -t^2\ng12 = 1").g8 == form(8, {{0, tpow(2, -1)}}));
  CHECK(parse_family("g8 = s^-1 * s^2\ng12 = 1").g8 == form(8, {{1, TLaurent(1)}}));
}

TEST_CASE("discriminant24 examples") {
  CHECK(discriminant24(parse_family("g8 = 3*s^4\ng12 = s^6")).is_zero());
  FamilyPair f = parse_family("g8 = 0\ng12 = s^3 + t");
  CHECK(discriminant24(f) == TLaurent(-27) * f.g12.pow(2));
  SForm d = discriminant24(load("zensha"));
  CHECK(d.actual_degree() == 24);
  CHECK(d.coeff(24).val() == ExtRat(-12));
  SForm dl = discriminant24(load("zensha_literal"));
  CHECK(dl.coeff(24).val() == ExtRat(-12));
}

TEST_CASE("weight_normalize examples") {
  FamilyPair id = weight_normalize(parse_family("g8 = 3*s^4 + t*s\ng12 = s^6"));
  CHECK(id.shift == 0);
  FamilyPair z = weight_normalize(load("zensha_literal"));
  CHECK(z.shift == 4);
  CHECK(z.g8.limit() == std::vector<Rat>{0, 0, 0, 0, 9, 0, 0, 0, 0});
  CHECK(z.g12.limit()[6] == 1);
  FamilyPair g = weight_normalize(parse_family("g8 = t^2*3*s^4\ng12 = t^3*s^6"));
  CHECK(g.shift == -1);
  CHECK(g.g8 == form(8, {{4, TLaurent(3)}}));
  CHECK(g.g12 == form(12, {{6, TLaurent(1)}}));
  CHECK(is_normalized(g));
}

TEST_CASE("minimality_check examples") {
  CHECK_NOTHROW(minimality_check(weight_normalize(parse_family(
      "let p(u) = (u - 1)*(u - 2)*(u + 1)*(u + 3)\ng8 = 3*p(s)^2\ng12 = p(s)^3"))));
  CHECK(code_of([] { minimality_check(parse_family("g8 = 3*s^8\ng12 = s^12")); }) ==
        ErrorCode::NotMinimal);
  CHECK(code_of([] { minimality_check(parse_family("g8 = 3\ng12 = 1 + s^6")); }) ==
        ErrorCode::NotMinimal);
  CHECK(code_of([] {
          minimality_check(parse_family("let p(u) = u - t\ng8 = p(s)^4*(s^4 + 1)\ng12 = p(s)^6*(s^6 + 2)"));
        }) == ErrorCode::NotMinimal);
  CHECK_NOTHROW(minimality_check(weight_normalize(load("zensha"))));
  CHECK_NOTHROW(minimality_check(weight_normalize(load("zensha_literal"))));
}

TEST_CASE("nn_extract examples") {
  FamilyPair q = load("simplest_d");
  SForm expect = parse_family(
                     "g8 = (s - t)*(s - 2*t)*(t*s - 3)*(t*s - 5)\ng12 = 0")
                     .g8.with_formal_degree(4);
  CHECK(nn_extract(q) == expect);
  // 3 g12 / g8 for (3 s^4, s^6) is s^2.
  CHECK(nn_extract(parse_family("g8 = 3*s^4\ng12 = s^6")) == form(4, {{2, TLaurent(1)}}));
  CHECK(code_of([] { nn_extract(load("tent")); }) == ErrorCode::Precondition);
}

TEST_CASE("invert_s examples") {
  FamilyPair c = parse_family("g8 = 3*s^4\ng12 = s^6");
  CHECK(invert_s(c) == c);
  FamilyPair g = parse_family("g8 = 1 + 2*s + 3*s^8\ng12 = s");
  FamilyPair r = invert_s(g);
  for (int i = 0; i <= 8; ++i) CHECK(r.g8.coeff(i) == g.g8.coeff(8 - i));
  CHECK(invert_s(load("zensha")) == load("zensha"));
  CHECK(invert_s(load("zensha_literal")) == load("zensha_literal"));
}

TEST_CASE("invariants on random families") {
  Corpus corpus(7);
  for (int n = 0; n < 100; ++n) {
    FamilyPair f;
    f.g8 = corpus.random_laurent_form(8);
    f.g12 = corpus.random_laurent_form(12);
    if (f.is_zero()) continue;
    CAPTURE(canonical_text(f));
    const SForm d = discriminant24(f);
    CHECK(d == naive_discriminant(f));
    FamilyPair g = weight_normalize(f);
    CHECK(is_normalized(g));
    CHECK(discriminant24(g) == d.shifted(6 * g.shift));
    CHECK(invert_s(invert_s(f)) == f);
    CHECK(parse_family(canonical_text(f)) == f);
    CHECK(parse_family(canonical_text(g)) == g);
  }
}
