#pragma once

#include <array>
#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include <qorder/quaternion.hpp>
#include <qorder/units.hpp>

namespace qorder {

/*
 * Numerical freeness certificates for groups generated by powers of units.
 *
 * Units embed into M2(C) via
 *   x1 + xi*i + xj*j + xk*k  ->  [[x1 + xi*z, xj + xk*z], [-xj + xk*z, x1 - xi*z]]
 * where z = sqrt(-1) and the field radical sqrt(-d) maps to +z*sqrt(d).
 * The determinant of the image equals eta(u), so eta = 1 units land in SL2(C)
 * and act on the upper half space / Riemann sphere as Mobius transformations.
 *
 * A Schottky certificate for generators u_1..u_n at power m exhibits 2n
 * pairwise disjoint isometric circles for u_t^m and u_t^-m; the classical
 * ping-pong argument then proves <u_1^m, ..., u_n^m> is free of rank n.
 * Circle disjointness is checked in floating point with a safety margin tau;
 * relation_search provides the exact-arithmetic falsifier for the same data.
 */

// to_complex evaluates a field coefficient at the embedding sqrt(-d) -> +i*sqrt(d).
std::complex<double> to_complex(const QuadRat& q);

// source is retained when the matrix arises from a quaternion; matrices built
// by conjugation or by hand carry no source.
struct MobiusMatrix {
  std::complex<double> a, b, c, e;
  std::optional<Quaternion> source;
};

MobiusMatrix embed(const Quaternion& u);

struct IsometricCircle {
  std::complex<double> center;
  double radius = 0;
};

// Raised when a matrix fixes infinity (|c| <= 1e-12): it is affine on C and
// has no isometric circle.
struct AffineElement : std::domain_error {
  using std::domain_error::domain_error;
};

// center -c_e / c_c, radius 1 / |c_c|; assumes det = 1.
IsometricCircle isometric_circle(const MobiusMatrix& M);

/*
 * Certificate that <u_1^m, ..., u_n^m> is free of rank n.
 *
 * Circles appear in generator order, positive power before negative:
 * u_1^m, u_1^-m, u_2^m, u_2^-m, ...  Every matrix is conjugated by the fixed
 * integer matrix W = [[1, 1], [1, 2]] before its circle is computed; units
 * whose image is diagonal (for example when the support is {1, i}) fix
 * infinity at every power, and conjugation by W moves their fixed points into
 * C without changing the group up to isomorphism.  min_gap is the smallest
 * |center_1 - center_2| - r_1 - r_2 over circle pairs and exceeds tau.
 */
struct SchottkyCertificate {
  Int d;
  long long m = 0;
  double tau = 0;
  std::vector<UnitRecord> generators;
  std::vector<IsometricCircle> circles;
  double min_gap = 0;
};

// The conjugation applied before circle computation, row major.
std::array<std::array<int, 2>, 2> schottky_conjugation();

/*
 * Searches m = 1..max_m for the smallest power with pairwise disjoint circles
 * (gap > tau) and returns the first certificate found, or nullopt when no
 * power up to max_m separates.  A nullopt is not a refutation: the generators
 * may still generate a free group.
 *
 * Requires a nonempty list over one field with every generator of infinite
 * order (throws std::domain_error otherwise).  When any generator has
 * eta = -1 only even powers are searched, so all certified matrices have
 * determinant 1.  Powers where some circle degenerates to an affine element
 * are skipped.
 */
std::optional<SchottkyCertificate> schottky_certificate(
    const std::vector<UnitRecord>& units, long long max_m, double tau = 1e-6);

// Diagnostic: the min_gap the certificate search would see at exactly power m,
// or nullopt when some element is affine there.
std::optional<double> min_gap_at(const std::vector<UnitRecord>& units,
                                 long long m);

/*
 * Exhaustive exact-arithmetic search for a relation among u_1^m .. u_n^m.
 *
 * Enumerates freely reduced words (no letter adjacent to its own inverse) in
 * the 2n letters u_t^{+m}, u_t^{-m} by increasing length, lexicographic within
 * a length, and returns the first word whose exact quaternion product is 1.
 * Letters render as 'a' + t for u_t^m and 'A' + t for u_t^-m.  Distinct list
 * entries are independent letters even when they coincide as quaternions.
 * Returns nullopt when no relation of length <= max_len exists; by soundness
 * of the ping-pong argument this always holds when schottky_certificate
 * succeeded for the same units and power.
 */
std::optional<std::string> relation_search(const std::vector<UnitRecord>& units,
                                           long long m, int max_len);

// Optional exact cross-check attached to a serialized certificate.
struct CrossCheck {
  int max_len = 0;
  int relations_found = 0;
};

nlohmann::ordered_json certificate_json(
    const SchottkyCertificate& cert,
    const std::optional<CrossCheck>& cross = std::nullopt);

}  // namespace qorder
