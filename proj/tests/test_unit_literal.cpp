#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <qorder/quaternion.hpp>
#include <qorder/unit_literal.hpp>

#include <random>

using namespace qorder;

namespace {

SquareFreeD D7() { return SquareFreeD(Int(7)); }

QuadRat QR(const QuadRing& ring, long a, long b, long den) {
  return QuadRat::from_display(ring, Int(a), Int(b), Int(den));
}

}  // namespace

TEST_CASE("parse: plain integer coefficients") {
  SquareFreeD d = D7();
  Quaternion u = parse_unit("6s+15i+5j+1k", d);
  QuadRing ring = ring_of_radicand(Int(-7));
  CHECK(u.c1() == QR(ring, 0, 6, 1));
  CHECK(u.ci() == QR(ring, 15, 0, 1));
  CHECK(u.cj() == QR(ring, 5, 0, 1));
  CHECK(u.ck() == QR(ring, 1, 0, 1));
}

TEST_CASE("parse: half-integer coefficients") {
  SquareFreeD d = D7();
  Quaternion u = parse_unit("(1+1s)/2+(1-1s)/2i+2j", d);
  QuadRing ring = ring_of_radicand(Int(-7));
  CHECK(u.c1() == QR(ring, 1, 1, 2));
  CHECK(u.ci() == QR(ring, 1, -1, 2));
  CHECK(u.cj() == QR(ring, 2, 0, 1));
  CHECK(u.ck().is_zero());
}

TEST_CASE("parse: signs, whitespace, zero") {
  SquareFreeD d = D7();
  CHECK(parse_unit(" 24s + 24si + 64j - 63k ", d) ==
        parse_unit("24s+24si+64j-63k", d));
  CHECK(parse_unit("-1", d) == -Quaternion::one(d));
  CHECK(parse_unit("0", d) == Quaternion::zero(d));
  CHECK(parse_unit("-3s+8i", d).c1() == QR(ring_of_radicand(Int(-7)), 0, -3, 1));
  // repeated basis terms accumulate
  CHECK(parse_unit("1+1", d) == parse_unit("2", d));
}

TEST_CASE("parse: rejects malformed input") {
  SquareFreeD d = D7();
  CHECK_THROWS_AS(parse_unit("", d), std::invalid_argument);
  CHECK_THROWS_AS(parse_unit("1+", d), std::invalid_argument);
  CHECK_THROWS_AS(parse_unit("s", d), std::invalid_argument);
  CHECK_THROWS_AS(parse_unit("(1+1s)/3", d), std::invalid_argument);
  CHECK_THROWS_AS(parse_unit("(1+1)/2", d), std::invalid_argument);
  CHECK_THROWS_AS(parse_unit("1x", d), std::invalid_argument);
  CHECK_THROWS_AS(parse_unit("1i2", d), std::invalid_argument);
  CHECK_THROWS_AS(parse_unit("++1", d), std::invalid_argument);
}

TEST_CASE("format: canonical strings") {
  SquareFreeD d = D7();
  QuadRing ring = ring_of_radicand(Int(-7));
  Quaternion gauss(d, QR(ring, 0, 6, 1), QR(ring, 15, 0, 1), QR(ring, 5, 0, 1),
                   QR(ring, 1, 0, 1));
  CHECK(format_unit(gauss) == "6s+15i+5j+1k");

  Quaternion sgen(d, QR(ring, 1, 1, 2), QR(ring, 1, -1, 2), QR(ring, 2, 0, 1),
                  QR(ring, 0, 0, 1));
  CHECK(format_unit(sgen) == "(1+1s)/2+(1-1s)/2i+2j");

  Quaternion pell(d, QR(ring, 0, 24, 1), QR(ring, 0, 24, 1), QR(ring, 64, 0, 1),
                  QR(ring, -63, 0, 1));
  CHECK(format_unit(pell) == "24s+24si+64j-63k");

  CHECK(format_unit(Quaternion::zero(d)) == "0");
  CHECK(format_unit(-Quaternion::one(d)) == "-1");
  CHECK(format_unit(-Quaternion::basis(d, Basis::K)) == "-1k");

  // negative half-integer leading coefficient stays inside the parentheses
  Quaternion neg(d, QR(ring, -1, -1, 2), QR(ring, 0, 0, 1), QR(ring, 0, 0, 1),
                 QR(ring, 0, 0, 1));
  CHECK(format_unit(neg) == "(-1-1s)/2");
  CHECK(parse_unit(format_unit(neg), d) == neg);
}

TEST_CASE("round trip: parse(format(u)) == u on random quaternions") {
  std::mt19937 rng(424242u);
  std::uniform_int_distribution<long> coef(-30, 30);
  std::uniform_int_distribution<int> den(1, 2);
  for (long long dv : {1, 2, 3, 7, 15}) {
    SquareFreeD d{Int(dv)};
    QuadRing ring = ring_of_radicand(Int(-dv));
    for (int t = 0; t < 300; ++t) {
      auto mk = [&]() {
        return QuadRat::from_display(ring, Int(coef(rng)), Int(coef(rng)),
                                     Int(den(rng)));
      };
      Quaternion u(d, mk(), mk(), mk(), mk());
      Quaternion back = parse_unit(format_unit(u), d);
      CHECK(back == u);
    }
  }
}

TEST_CASE("format rejects coefficients outside the grammar") {
  SquareFreeD d = D7();
  QuadRing ring = ring_of_radicand(Int(-7));
  Quaternion third(d, QuadRat(QuadInt::from_int(ring, Int(1)), Int(3)),
                   QR(ring, 0, 0, 1), QR(ring, 0, 0, 1), QR(ring, 0, 0, 1));
  CHECK_THROWS_AS(format_unit(third), std::domain_error);
}
