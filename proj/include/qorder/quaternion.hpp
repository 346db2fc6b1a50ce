#pragma once

#include <qorder/quadratic.hpp>

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qorder {

enum class Basis : int { One = 0, I = 1, J = 2, K = 3 };

const char* basis_name(Basis b);  // "1", "i", "j", "k"

struct ZeroNorm : std::domain_error {
  ZeroNorm() : std::domain_error("quaternion has norm zero") {}
};

/**
 * Element of H(K) = K[i, j : i^2 = j^2 = -1, ij = -ji = k] with
 * K = Q(sqrt(-d)), d positive square-free. Coefficients are QuadRat
 * values over ring_of(-d); the order H(R) is the subset with all four
 * coefficients integral.
 */
class Quaternion {
 public:
  Quaternion(SquareFreeD d, QuadRat c1, QuadRat ci, QuadRat cj, QuadRat ck);

  static Quaternion zero(const SquareFreeD& d);
  static Quaternion one(const SquareFreeD& d);
  static Quaternion basis(const SquareFreeD& d, Basis b);

  const SquareFreeD& d() const { return d_; }
  const QuadRing& ring() const { return c_[0].ring(); }
  const QuadRat& coeff(Basis b) const { return c_[static_cast<int>(b)]; }
  const QuadRat& c1() const { return c_[0]; }
  const QuadRat& ci() const { return c_[1]; }
  const QuadRat& cj() const { return c_[2]; }
  const QuadRat& ck() const { return c_[3]; }

  Quaternion operator+(const Quaternion& o) const;
  Quaternion operator-(const Quaternion& o) const;
  Quaternion operator*(const Quaternion& o) const;
  Quaternion operator-() const;
  Quaternion scale(const QuadRat& s) const;
  bool operator==(const Quaternion& o) const;
  bool operator!=(const Quaternion& o) const { return !(*this == o); }

  Quaternion conj() const;   // negates the i, j, k parts
  QuadRat norm() const;      // eta = c1^2 + ci^2 + cj^2 + ck^2
  Quaternion inverse() const;  // conj/eta; throws ZeroNorm
  Quaternion pow(long long n) const;

  bool is_zero() const;
  std::vector<Basis> support() const;
  bool in_order() const;
  bool is_unit_of_order() const;

 private:
  void check_compatible(const Quaternion& o) const;
  SquareFreeD d_;
  std::array<QuadRat, 4> c_;
};

/** (2 u1, eta(u)); asserts u^2 = 2 u1 u - eta(u) exactly. */
std::pair<QuadRat, QuadRat> square_reduce(const Quaternion& u);

struct TorsionVerdict {
  enum class Kind { FiniteOrder, Infinite, Unknown } kind;
  int order = 0;  // meaningful for FiniteOrder only
  std::string justification;
};

/**
 * Order of a unit of H(R). Exact trace test in the division case
 * d = 7 (mod 8); bounded power search (exponents up to 24) otherwise.
 */
TorsionVerdict torsion_order(const Quaternion& u);

/** H(Q(sqrt(-d))) is a division ring iff d > 0 and d = 7 (mod 8). */
bool is_division(const SquareFreeD& d);

/** Stufe of Q(sqrt(-d)): 1, 2 or 4; nullopt when the field is formally real (d < 0). */
std::optional<int> stufe(const SquareFreeD& d);

/** Unit group of an imaginary quadratic ring: 2, 4 or 6 elements. */
std::vector<QuadInt> units_of_ring(const QuadRing& ring);

bool is_ring_unit(const QuadRat& q);

/**
 * Smallest-height nonzero u in H(R) with eta(u) = 0, coefficients
 * x + y*omega bounded by max(|x|, |y|) <= height_bound; nullopt if none.
 */
std::optional<Quaternion> find_zero_divisor(const SquareFreeD& d, long height_bound);

}  // namespace qorder
