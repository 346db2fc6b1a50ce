#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <qorder/quadratic.hpp>
#include <qorder/quaternion.hpp>

#include <random>
#include <vector>

using namespace qorder;

namespace {

SquareFreeD D7() { return SquareFreeD(Int(7)); }

QuadRat QR(const QuadRing& ring, long a, long b, long den) {
  return QuadRat::from_display(ring, Int(a), Int(b), Int(den));
}

// u = (a1 + b1 s)/e1 + ... with s = sqrt(-d), entries given per basis element
Quaternion Q(const SquareFreeD& d, std::array<std::array<long, 3>, 4> rows) {
  QuadRing ring = ring_of_radicand(-d.value());
  return Quaternion(d, QR(ring, rows[0][0], rows[0][1], rows[0][2]),
                    QR(ring, rows[1][0], rows[1][1], rows[1][2]),
                    QR(ring, rows[2][0], rows[2][1], rows[2][2]),
                    QR(ring, rows[3][0], rows[3][1], rows[3][2]));
}

Quaternion rand_quat(const SquareFreeD& d, std::mt19937& rng) {
  std::uniform_int_distribution<long> coef(-20, 20);
  std::uniform_int_distribution<int> den(1, 2);
  QuadRing ring = ring_of_radicand(-d.value());
  auto mk = [&]() {
    return QuadRat(QuadInt(ring, Int(coef(rng)), Int(coef(rng))), Int(den(rng)));
  };
  return Quaternion(d, mk(), mk(), mk(), mk());
}

}  // namespace

TEST_CASE("multiplication table of the basis") {
  SquareFreeD d = D7();
  Quaternion one = Quaternion::basis(d, Basis::One);
  Quaternion i = Quaternion::basis(d, Basis::I);
  Quaternion j = Quaternion::basis(d, Basis::J);
  Quaternion k = Quaternion::basis(d, Basis::K);

  CHECK(i * i == -one);
  CHECK(j * j == -one);
  CHECK(k * k == -one);
  CHECK(i * j == k);
  CHECK(j * i == -k);
  CHECK(j * k == i);
  CHECK(k * j == -i);
  CHECK(k * i == j);
  CHECK(i * k == -j);
  CHECK(one * k == k);
}

TEST_CASE("associativity on random triples") {
  std::mt19937 rng(777u);
  for (long long dv : {2, 7}) {
    SquareFreeD d{Int(dv)};
    for (int t = 0; t < 60; ++t) {
      Quaternion a = rand_quat(d, rng), b = rand_quat(d, rng), c = rand_quat(d, rng);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
    }
  }
}

TEST_CASE("mixed parameters are rejected") {
  Quaternion a = Quaternion::basis(D7(), Basis::I);
  Quaternion b = Quaternion::basis(SquareFreeD(Int(2)), Basis::I);
  CHECK_THROWS_AS(a * b, std::invalid_argument);
  CHECK_THROWS_AS(a + b, std::invalid_argument);
  CHECK_THROWS_AS(Quaternion::basis(SquareFreeD(Int(-2)), Basis::One), std::domain_error);
}

TEST_CASE("norm values and multiplicativity") {
  // eta(6 sqrt(-7) + 15i + 5j + k) = -252 + 225 + 25 + 1 = -1
  Quaternion v = Q(D7(), {{{0, 6, 1}, {15, 0, 1}, {5, 0, 1}, {1, 0, 1}}});
  CHECK(v.norm().equals_int(Int(-1)));

  Quaternion u = Q(D7(), {{{0, 3, 1}, {8, 0, 1}, {0, 0, 1}, {0, 0, 1}}});
  CHECK(u.norm().equals_int(Int(1)));

  CHECK(Quaternion::one(D7()).norm().equals_int(Int(1)));
  CHECK(Quaternion::zero(D7()).norm().is_zero());

  std::mt19937 rng(20260816u);
  for (long long dv : {2, 3, 7, 15}) {
    SquareFreeD d{Int(dv)};
    for (int t = 0; t < 250; ++t) {
      Quaternion a = rand_quat(d, rng), b = rand_quat(d, rng);
      CHECK((a * b).norm() == a.norm() * b.norm());
    }
  }
}

TEST_CASE("conjugation and inverse") {
  SquareFreeD d = D7();
  Quaternion i = Quaternion::basis(d, Basis::I);
  CHECK(i.inverse() == -i);

  // (3 sqrt(-7) + 8i)^-1 = conj / eta = 3 sqrt(-7) - 8i
  Quaternion u = Q(d, {{{0, 3, 1}, {8, 0, 1}, {0, 0, 1}, {0, 0, 1}}});
  Quaternion inv = u.inverse();
  CHECK(inv == Q(d, {{{0, 3, 1}, {-8, 0, 1}, {0, 0, 1}, {0, 0, 1}}}));
  CHECK(u * inv == Quaternion::one(d));
  CHECK(inv * u == Quaternion::one(d));

  CHECK(u * u.conj() == Quaternion::one(d));  // eta = 1 here
  CHECK_THROWS_AS(Quaternion::zero(d).inverse(), ZeroNorm);

  // eta = -1: inverse is -conj
  Quaternion v = Q(d, {{{0, 6, 1}, {15, 0, 1}, {5, 0, 1}, {1, 0, 1}}});
  CHECK(v * v.inverse() == Quaternion::one(d));
}

TEST_CASE("a zero divisor has no inverse") {
  SquareFreeD d1{Int(1)};
  QuadRing ring = ring_of_radicand(Int(-1));
  // sqrt(-1) * 1 + i has eta = 0
  Quaternion z(d1, QuadRat(QuadInt(ring, Int(0), Int(1))),
               QuadRat::from_int(ring, Int(1)), QuadRat::from_int(ring, Int(0)),
               QuadRat::from_int(ring, Int(0)));
  CHECK(z.norm().is_zero());
  CHECK_THROWS_AS(z.inverse(), ZeroNorm);
}

TEST_CASE("support") {
  SquareFreeD d = D7();
  CHECK(Quaternion::zero(d).support().empty());
  Quaternion u = Q(d, {{{0, 3, 1}, {8, 0, 1}, {0, 0, 1}, {0, 0, 1}}});
  auto s = u.support();
  REQUIRE(s.size() == 2);
  CHECK(s[0] == Basis::One);
  CHECK(s[1] == Basis::I);
  Quaternion v = Q(d, {{{0, 6, 1}, {15, 0, 1}, {5, 0, 1}, {1, 0, 1}}});
  CHECK(v.support().size() == 4);
}

TEST_CASE("order membership") {
  SquareFreeD d = D7();
  // (1 + i + j + k)/2 is not in H(R): 1/2 is not an integer of Q(sqrt(-7))
  Quaternion half = Q(d, {{{1, 0, 2}, {1, 0, 2}, {1, 0, 2}, {1, 0, 2}}});
  CHECK_FALSE(half.in_order());
  // (1 + sqrt(-7))/2 + ((1 - sqrt(-7))/2) i + 2j is in H(R)
  Quaternion s = Q(d, {{{1, 1, 2}, {1, -1, 2}, {2, 0, 1}, {0, 0, 1}}});
  CHECK(s.in_order());
  CHECK(s.norm().equals_int(Int(1)));
  CHECK(s.is_unit_of_order());

  CHECK(Quaternion::basis(d, Basis::K).is_unit_of_order());
  // 2 + i has eta = 5
  Quaternion w = Q(d, {{{2, 0, 1}, {1, 0, 1}, {0, 0, 1}, {0, 0, 1}}});
  CHECK(w.in_order());
  CHECK_FALSE(w.is_unit_of_order());
}

TEST_CASE("units of imaginary quadratic rings") {
  auto u1 = units_of_ring(ring_of_radicand(Int(-1)));
  CHECK(u1.size() == 4);
  auto u3 = units_of_ring(ring_of_radicand(Int(-3)));
  CHECK(u3.size() == 6);
  auto u7 = units_of_ring(ring_of_radicand(Int(-7)));
  CHECK(u7.size() == 2);
  for (const auto& e : u3) CHECK(e.norm() == 1);
  CHECK_THROWS_AS(units_of_ring(ring_of(SquareFreeD(Int(7)))), std::domain_error);
}

TEST_CASE("square_reduce: u^2 = 2 u1 u - eta(u)") {
  SquareFreeD d = D7();
  Quaternion u = Q(d, {{{0, 3, 1}, {8, 0, 1}, {0, 0, 1}, {0, 0, 1}}});
  auto [tr, eta] = square_reduce(u);
  CHECK(tr == QR(ring_of_radicand(Int(-7)), 0, 6, 1));
  CHECK(eta.equals_int(Int(1)));

  std::mt19937 rng(99u);
  for (long long dv : {2, 7}) {
    SquareFreeD dd{Int(dv)};
    for (int t = 0; t < 200; ++t) {
      Quaternion a = rand_quat(dd, rng);
      CHECK_NOTHROW(square_reduce(a));  // identity is asserted inside
    }
  }
}

TEST_CASE("torsion classification in the division case d = 7") {
  SquareFreeD d = D7();
  auto t1 = torsion_order(Quaternion::one(d));
  CHECK(t1.kind == TorsionVerdict::Kind::FiniteOrder);
  CHECK(t1.order == 1);
  auto tm = torsion_order(-Quaternion::one(d));
  CHECK(tm.order == 2);
  auto ti = torsion_order(Quaternion::basis(d, Basis::I));
  CHECK(ti.kind == TorsionVerdict::Kind::FiniteOrder);
  CHECK(ti.order == 4);

  // norm -1 unit: infinite order
  Quaternion v = Q(d, {{{0, 6, 1}, {15, 0, 1}, {5, 0, 1}, {1, 0, 1}}});
  CHECK(torsion_order(v).kind == TorsionVerdict::Kind::Infinite);

  // norm 1 but trace coefficient outside {-1, 0, 1}: infinite order
  Quaternion u = Q(d, {{{0, 3, 1}, {8, 0, 1}, {0, 0, 1}, {0, 0, 1}}});
  CHECK(torsion_order(u).kind == TorsionVerdict::Kind::Infinite);

  CHECK_THROWS_AS(torsion_order(Q(d, {{{2, 0, 1}, {1, 0, 1}, {0, 0, 1}, {0, 0, 1}}})),
                  std::domain_error);
}

TEST_CASE("torsion outside the division case uses the bounded power search") {
  // d = 3: the sixth root of unity (1 + sqrt(-3))/2 as a scalar
  SquareFreeD d3{Int(3)};
  Quaternion w = Q(d3, {{{1, 1, 2}, {0, 0, 1}, {0, 0, 1}, {0, 0, 1}}});
  auto t = torsion_order(w);
  CHECK(t.kind == TorsionVerdict::Kind::FiniteOrder);
  CHECK(t.order == 6);

  // d = 2: sqrt(-2) i + j squares to 1
  SquareFreeD d2{Int(2)};
  Quaternion u = Q(d2, {{{0, 0, 1}, {0, 1, 1}, {1, 0, 1}, {0, 0, 1}}});
  auto t2 = torsion_order(u);
  CHECK(t2.kind == TorsionVerdict::Kind::FiniteOrder);
  CHECK(t2.order == 2);

  // d = 2: 3 + 2 sqrt(-2) i has eta 1 and infinite order; the search gives up
  Quaternion inf = Q(d2, {{{3, 0, 1}, {0, 2, 1}, {0, 0, 1}, {0, 0, 1}}});
  CHECK(torsion_order(inf).kind == TorsionVerdict::Kind::Unknown);
}

TEST_CASE("division ring test and stufe") {
  CHECK(is_division(SquareFreeD(Int(7))));
  CHECK(is_division(SquareFreeD(Int(15))));
  CHECK(is_division(SquareFreeD(Int(23))));
  CHECK_FALSE(is_division(SquareFreeD(Int(3))));
  CHECK_FALSE(is_division(SquareFreeD(Int(1))));
  CHECK_FALSE(is_division(SquareFreeD(Int(-7))));

  CHECK(stufe(SquareFreeD(Int(7))) == 4);
  CHECK(stufe(SquareFreeD(Int(1))) == 1);
  CHECK(stufe(SquareFreeD(Int(3))) == 2);
  CHECK(stufe(SquareFreeD(Int(2))) == 2);
  CHECK(stufe(SquareFreeD(Int(15))) == 4);
  CHECK_FALSE(stufe(SquareFreeD(Int(-5))).has_value());  // formally real: infinite
}

TEST_CASE("zero divisor search") {
  auto z1 = find_zero_divisor(SquareFreeD(Int(1)), 1);
  REQUIRE(z1.has_value());
  CHECK(z1->norm().is_zero());
  CHECK(z1->in_order());
  CHECK_FALSE(z1->support().empty());

  auto z3 = find_zero_divisor(SquareFreeD(Int(3)), 2);
  REQUIRE(z3.has_value());
  CHECK(z3->norm().is_zero());
  CHECK(z3->in_order());

  CHECK_FALSE(find_zero_divisor(SquareFreeD(Int(7)), 3).has_value());

  // deterministic: repeated runs return the same witness
  auto again = find_zero_divisor(SquareFreeD(Int(1)), 1);
  REQUIRE(again.has_value());
  CHECK(*again == *z1);
}

TEST_CASE("powers") {
  SquareFreeD d = D7();
  Quaternion i = Quaternion::basis(d, Basis::I);
  CHECK(i.pow(4) == Quaternion::one(d));
  CHECK(i.pow(0) == Quaternion::one(d));
  CHECK(i.pow(-1) == -i);
  Quaternion u = Q(d, {{{0, 3, 1}, {8, 0, 1}, {0, 0, 1}, {0, 0, 1}}});
  CHECK(u.pow(3) == u * u * u);
  CHECK(u.pow(-2) * u.pow(2) == Quaternion::one(d));
}
