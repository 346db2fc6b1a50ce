#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qorder {

using Int = boost::multiprecision::cpp_int;

Int isqrt_floor(const Int& n);          // floor(sqrt(n)), n >= 0
bool is_perfect_square(const Int& n);
bool is_square_free(const Int& n);      // nonzero, no prime square divides it
Int gcd_int(const Int& a, const Int& b);

/** Square-free integer d with d != 0, -1. */
class SquareFreeD {
 public:
  explicit SquareFreeD(Int value);
  const Int& value() const { return value_; }
  bool operator==(const SquareFreeD& o) const { return value_ == o.value_; }

 private:
  Int value_;
};

enum class OmegaKind { Sqrt, HalfPlusSqrt };

/** Ring of integers of Q(sqrt(D)): Z[omega] with omega = sqrt(D) or (1+sqrt(D))/2. */
class QuadRing {
 public:
  const Int& D() const { return D_; }
  OmegaKind omega_kind() const { return kind_; }
  bool operator==(const QuadRing& o) const { return D_ == o.D_; }
  bool operator!=(const QuadRing& o) const { return !(*this == o); }

 private:
  friend QuadRing ring_of_radicand(const Int& D);
  QuadRing(Int D, OmegaKind kind) : D_(std::move(D)), kind_(kind) {}
  Int D_;
  OmegaKind kind_;
};

QuadRing ring_of(const SquareFreeD& D);

/**
 * Ring of integers for a raw field radicand. Unlike the d-parameter set,
 * -1 is a legitimate radicand (Q(sqrt(-1)) with ring Z[i]); 0 and 1 are not.
 */
QuadRing ring_of_radicand(const Int& D);

/** Element x + y*omega of a QuadRing. */
class QuadInt {
 public:
  QuadInt(QuadRing ring, Int x, Int y)
      : ring_(std::move(ring)), x_(std::move(x)), y_(std::move(y)) {}

  static QuadInt from_int(const QuadRing& ring, const Int& v) { return {ring, v, 0}; }
  static QuadInt omega(const QuadRing& ring) { return {ring, 0, 1}; }
  static QuadInt sqrt_d(const QuadRing& ring);

  const QuadRing& ring() const { return ring_; }
  const Int& x() const { return x_; }
  const Int& y() const { return y_; }

  QuadInt operator+(const QuadInt& o) const;
  QuadInt operator-(const QuadInt& o) const;
  QuadInt operator*(const QuadInt& o) const;
  QuadInt operator-() const { return {ring_, -x_, -y_}; }
  bool operator==(const QuadInt& o) const;
  bool operator!=(const QuadInt& o) const { return !(*this == o); }
  // lexicographic on (x, y); used as a map key, same ring assumed
  bool operator<(const QuadInt& o) const;

  QuadInt conj() const;
  Int norm() const;        // x^2 - D y^2 resp. x^2 + xy + y^2 (1-D)/4
  Int trace() const;
  bool is_zero() const { return x_ == 0 && y_ == 0; }
  bool is_unit() const;    // |norm| == 1

  /** Value as (a + b*sqrt(D))/den with minimal den (1 or 2 for ring elements). */
  struct Display {
    Int a, b, den;
  };
  Display display() const;
  /** Parse a display form back into the ring; nullopt if not integral. */
  static std::optional<QuadInt> from_display(const QuadRing& ring, const Int& a,
                                             const Int& b, const Int& den);

  std::string str() const;

 private:
  void check_same_ring(const QuadInt& o) const;
  QuadRing ring_;
  Int x_, y_;
};

/** num/den with num a QuadInt, den > 0, gcd(content(num), den) = 1. */
class QuadRat {
 public:
  explicit QuadRat(QuadInt num, Int den = 1);
  static QuadRat from_int(const QuadRing& ring, const Int& v) {
    return QuadRat(QuadInt::from_int(ring, v));
  }
  static QuadRat from_display(const QuadRing& ring, const Int& a, const Int& b,
                              const Int& den);

  const QuadRing& ring() const { return num_.ring(); }
  const QuadInt& num() const { return num_; }
  const Int& den() const { return den_; }

  QuadRat operator+(const QuadRat& o) const;
  QuadRat operator-(const QuadRat& o) const;
  QuadRat operator*(const QuadRat& o) const;
  QuadRat operator-() const;
  bool operator==(const QuadRat& o) const;
  bool operator!=(const QuadRat& o) const { return !(*this == o); }

  QuadRat conj() const;
  QuadRat inverse() const;  // throws std::domain_error on zero
  bool is_zero() const { return num_.is_zero(); }
  bool in_ring() const { return den_ == 1; }
  bool is_rational_integer() const { return den_ == 1 && num_.y() == 0; }
  std::optional<Int> as_int() const;
  bool equals_int(const Int& v) const;

  QuadInt::Display display() const;  // minimal den, no {1,2} restriction
  std::string str() const;

 private:
  QuadInt num_;
  Int den_;
};

/** Solution of x^2 - D y^2 = norm with x, y >= 0 and norm in {1, -1}. */
struct PellSolution {
  Int D;
  Int x;
  Int y;
  int norm;
  bool satisfies() const { return x * x - D * y * y == norm; }
};

/** Least positive solution of x^2 - D y^2 = 1; D > 1 and not a perfect square. */
PellSolution fundamental_pell(const Int& D);

/** Least solution of x^2 - D y^2 = -1, if one exists. */
std::optional<PellSolution> negative_pell(const Int& D);

/** (x + y sqrt(D))^n, n >= 1. */
PellSolution pell_power(const PellSolution& sol, unsigned n);

struct ThreeSquares {
  Int n;
  Int p, q, r;  // p >= q >= r >= 0, p^2 + q^2 + r^2 = n
};

/** Thrown when n = 4^a (8b + 7) admits no three-square decomposition. */
struct NotRepresentable : std::domain_error {
  NotRepresentable(Int n_, Int a_, Int b_);
  Int n, a, b;
};

/** True iff n is a sum of three integer squares. */
bool three_squares_representable(const Int& n);

/** Exponents (a, b) with n = 4^a (8b + 7), if n has that form. */
std::optional<std::pair<Int, Int>> legendre_witness(const Int& n);

/**
 * Lexicographically greatest decomposition n = p^2 + q^2 + r^2, p >= q >= r.
 * Throws NotRepresentable for excluded n, std::domain_error past the bound.
 */
ThreeSquares three_squares(const Int& n, const Int& bound = Int(1000000));

/** All (m, p) with m, p >= 0 and m^2 + 2 p^2 = n, ascending in m. */
std::vector<std::pair<Int, Int>> solve_m2_plus_2p2(const Int& n);

}  // namespace qorder
