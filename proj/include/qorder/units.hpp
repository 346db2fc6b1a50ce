#pragma once

#include <qorder/quaternion.hpp>

#include <json.hpp>

#include <variant>
#include <vector>

namespace qorder {

enum class UnitFamily { TwoUnit, PellUnit, PellThreeUnit, GaussUnit, SGenerator, Adhoc };
const char* family_name(UnitFamily f);  // "two_unit", "pell_unit", ...

enum class PellSign { Upper, Lower };

// Distinct basis placements for the radical and integer parts of a unit.
struct BasisPair {
  Basis xi, psi;
  BasisPair(Basis xi_, Basis psi_);
};

struct BasisTriple {
  Basis xi, psi, phi;
  BasisTriple(Basis xi_, Basis psi_, Basis phi_);
};

// A norm -1 Pell solution fed to pell_unit would force eta(u) = 0.
struct DegenerateNorm : std::domain_error {
  DegenerateNorm()
      : std::domain_error(
            "pell_unit requires a norm +1 solution; norm -1 collapses the "
            "quaternion norm to 0") {}
};

// epsilon = p + m*sqrt(d) with p^2 - d m^2 = norm; signs unrestricted, unlike
// PellSolution, so inverses and conjugates can be carried as provenance.
struct QuadUnitData {
  Int p, m;
  int norm;
};

struct TwoUnitProv {
  QuadUnitData eps;
  Basis xi, psi;
};
struct PellUnitProv {
  PellSolution sol;  // the caller's solution, before any parity squaring
  PellSign sign;
};
struct PellThreeProv {
  Int p, m;
  Basis xi, psi, phi;
};
struct GaussProv {
  Int m;
  ThreeSquares squares;
};
struct SGenProv {
  Int m, p;
};
using Provenance = std::variant<std::monostate, TwoUnitProv, PellUnitProv,
                                PellThreeProv, GaussProv, SGenProv>;

struct UnitRecord {
  Quaternion unit;
  UnitFamily family;
  int norm;  // +1 or -1, equals eta(unit)
  Provenance provenance;
};

/**
 * u = m sqrt(-d) xi + p psi for epsilon = p + m sqrt(d) with p^2 - d m^2 = +-1.
 * eta(u) = N(epsilon). Requires d = 2 or 3 (mod 4); rejects solutions over the
 * wrong field or violating the Pell equation.
 */
UnitRecord two_unit(const SquareFreeD& d, const PellSolution& eps,
                    const BasisPair& pair);

// Same construction with signed (p, m); needed for inverses like 8 - 3 sqrt(7).
UnitRecord two_unit_signed(const SquareFreeD& d, const Int& p, const Int& m,
                           const BasisPair& pair);

/**
 * Exact product identity u_(mu) u_(nu) = u_(mu nu). Holds when the rational
 * integer part of both factors sits on basis 1 and the radical parts share a
 * basis; rejects any other placement and non-two-unit records.
 */
UnitRecord two_unit_product(const UnitRecord& u, const UnitRecord& v);

/**
 * With 1 outside {xi, psi} the two-unit has zero 1-part, so u^2 = -eta(u):
 * order 4 when eta = 1, order 2 when eta = -1. Verified by exact powers.
 */
TorsionVerdict two_unit_torsion_check(const SquareFreeD& d, const PellSolution& eps,
                                      const BasisPair& pair);

/**
 * Four-coefficient unit from a Pell solution x^2 - d y^2 = 1, d = 7 (mod 8):
 *   y even: (y/2) sqrt(-d) (1 + i) + ((1 +- x)/2) j + ((1 -+ x)/2) k
 *   y odd:  built from the squared solution (x^2 + d y^2, 2xy).
 * Upper puts the + on j. eta(u) = 1 exactly.
 */
UnitRecord pell_unit(const SquareFreeD& d, const PellSolution& sol, PellSign sign);

/**
 * u = m sqrt(-d) xi + p psi + (1 - p) phi for (2p - 1)^2 - 2d m^2 = 1;
 * requires d = 3 (mod 4). eta(u) = 1 exactly.
 */
UnitRecord pell_three_unit(const SquareFreeD& d, const Int& p, const Int& m,
                           const BasisTriple& triple);

/**
 * u = m sqrt(-d) + p i + q j + r k where (p, q, r) = three_squares(d m^2 + n)
 * for target norm n = +-1. Deterministic through the three-squares tie-break;
 * throws NotRepresentable when the instance is infeasible (never for
 * m = 2 mod 4, which is asserted).
 */
UnitRecord gauss_unit(const SquareFreeD& d, const Int& m, int target_norm);

/**
 * Pell l-unit: support has cardinality l in {2, 3} and exactly one coefficient
 * is a non-integer of the shape m sqrt(-d); the rest are rational integers.
 * Gauss l-unit: the same shape plus three-squares representability of
 * d m^2 + eta(u). Both require is_unit_of_order(u).
 */
bool is_pell_l_unit(const Quaternion& u, int l);
bool is_gauss_l_unit(const Quaternion& u, int l);

/**
 * For d = 7 (mod 8): one unit (m + sqrt(-d))/2 + ((m - sqrt(-d))/2) i + p j
 * per solution of m^2 + 2p^2 = 2 + d, in ascending m order. All have eta = 1.
 */
std::vector<UnitRecord> s_generator_units(const SquareFreeD& d);

// Wraps an arbitrary verified unit with eta = +-1; provenance is empty.
UnitRecord wrap_adhoc_unit(const Quaternion& u);

/**
 * {d, family, coefficients, norm, provenance}; coefficient objects are
 * {a, b, den} meaning (a + b sqrt(-d))/den. Field order is byte-stable.
 */
nlohmann::ordered_json unit_record_json(const UnitRecord& rec);

}  // namespace qorder
