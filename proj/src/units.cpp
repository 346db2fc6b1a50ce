#include <qorder/units.hpp>

#include <qorder/json_util.hpp>

#include <sstream>

namespace qorder {
namespace {

QuadRing ring_for(const SquareFreeD& d) { return ring_of_radicand(-d.value()); }

QuadRat rat_int(const QuadRing& ring, const Int& v) {
  return QuadRat::from_int(ring, v);
}

QuadRat rat_radical(const QuadRing& ring, const Int& m) {
  return QuadRat::from_display(ring, Int(0), m, Int(1));
}

Quaternion place(const SquareFreeD& d, const std::vector<std::pair<Basis, QuadRat>>& parts) {
  QuadRing ring = ring_for(d);
  QuadRat coeffs[4] = {rat_int(ring, Int(0)), rat_int(ring, Int(0)),
                       rat_int(ring, Int(0)), rat_int(ring, Int(0))};
  for (const auto& [basis, value] : parts) coeffs[static_cast<int>(basis)] = value;
  return Quaternion(d, coeffs[0], coeffs[1], coeffs[2], coeffs[3]);
}

void require_norm(const UnitRecord& rec, const char* who) {
  if (!rec.unit.norm().equals_int(Int(rec.norm)) || !rec.unit.is_unit_of_order()) {
    std::ostringstream os;
    os << who << ": constructed value fails its own unit contract";
    throw std::logic_error(os.str());
  }
}

int mod4(const Int& v) { return static_cast<int>(((v % 4) + 4) % 4); }
int mod8(const Int& v) { return static_cast<int>(((v % 8) + 8) % 8); }

}  // namespace

const char* family_name(UnitFamily f) {
  switch (f) {
    case UnitFamily::TwoUnit: return "two_unit";
    case UnitFamily::PellUnit: return "pell_unit";
    case UnitFamily::PellThreeUnit: return "pell_three_unit";
    case UnitFamily::GaussUnit: return "gauss_unit";
    case UnitFamily::SGenerator: return "s_generator";
    case UnitFamily::Adhoc: return "adhoc";
  }
  throw std::logic_error("family_name: unreachable");
}

BasisPair::BasisPair(Basis xi_, Basis psi_) : xi(xi_), psi(psi_) {
  if (xi == psi) throw std::invalid_argument("BasisPair: xi and psi must differ");
}

BasisTriple::BasisTriple(Basis xi_, Basis psi_, Basis phi_)
    : xi(xi_), psi(psi_), phi(phi_) {
  if (xi == psi || xi == phi || psi == phi)
    throw std::invalid_argument("BasisTriple: entries must be pairwise distinct");
}

UnitRecord two_unit_signed(const SquareFreeD& d, const Int& p, const Int& m,
                           const BasisPair& pair) {
  if (mod4(d.value()) != 2 && mod4(d.value()) != 3)
    throw std::domain_error("two_unit: d must be 2 or 3 (mod 4)");
  Int norm = p * p - d.value() * m * m;
  if (norm != 1 && norm != -1)
    throw std::domain_error("two_unit: p^2 - d m^2 must be +1 or -1");
  QuadRing ring = ring_for(d);
  Quaternion u = place(d, {{pair.xi, rat_radical(ring, m)}, {pair.psi, rat_int(ring, p)}});
  UnitRecord rec{u, UnitFamily::TwoUnit, static_cast<int>(norm),
                 TwoUnitProv{QuadUnitData{p, m, static_cast<int>(norm)}, pair.xi,
                             pair.psi}};
  require_norm(rec, "two_unit");
  return rec;
}

UnitRecord two_unit(const SquareFreeD& d, const PellSolution& eps,
                    const BasisPair& pair) {
  if (eps.D != d.value())
    throw std::domain_error("two_unit: Pell solution is over a different field");
  if (!eps.satisfies())
    throw std::domain_error("two_unit: (p, m) does not solve p^2 - d m^2 = +-1");
  return two_unit_signed(d, eps.x, eps.y, pair);
}

UnitRecord two_unit_product(const UnitRecord& u, const UnitRecord& v) {
  if (u.family != UnitFamily::TwoUnit || v.family != UnitFamily::TwoUnit)
    throw std::domain_error("two_unit_product: both factors must be two-units");
  const auto& pu = std::get<TwoUnitProv>(u.provenance);
  const auto& pv = std::get<TwoUnitProv>(v.provenance);
  if (pu.psi != Basis::One || pv.psi != Basis::One)
    throw std::domain_error(
        "two_unit_product: the product identity needs the rational part on "
        "basis 1");
  if (pu.xi != pv.xi)
    throw std::domain_error(
        "two_unit_product: radical parts must sit on the same basis");
  if (u.unit.d().value() != v.unit.d().value())
    throw std::invalid_argument("two_unit_product: mixed fields");
  Int dv = u.unit.d().value();
  Int p = pu.eps.p * pv.eps.p + dv * pu.eps.m * pv.eps.m;
  Int m = pu.eps.p * pv.eps.m + pu.eps.m * pv.eps.p;
  UnitRecord rec = two_unit_signed(u.unit.d(), p, m, BasisPair{pu.xi, pu.psi});
  if (!(rec.unit == u.unit * v.unit))
    throw std::logic_error("two_unit_product: product identity violated");
  return rec;
}

TorsionVerdict two_unit_torsion_check(const SquareFreeD& d, const PellSolution& eps,
                                      const BasisPair& pair) {
  if (pair.xi == Basis::One || pair.psi == Basis::One)
    throw std::domain_error(
        "two_unit_torsion_check: torsion requires 1 outside the support");
  UnitRecord rec = two_unit(d, eps, pair);
  // zero 1-part makes u^2 = -eta(u), a rational scalar
  int order = rec.norm == 1 ? 4 : 2;
  Quaternion one = Quaternion::one(d);
  if (!(rec.unit.pow(order) == one) ||
      (order == 4 && rec.unit.pow(2) == one) || rec.unit == one)
    throw std::logic_error("two_unit_torsion_check: exact order verification failed");
  std::ostringstream os;
  os << "zero 1-part gives u^2 = " << (rec.norm == 1 ? "-1" : "1")
     << ", so the order is " << order;
  return TorsionVerdict{TorsionVerdict::Kind::FiniteOrder, order, os.str()};
}

UnitRecord pell_unit(const SquareFreeD& d, const PellSolution& sol, PellSign sign) {
  if (sol.norm == -1) throw DegenerateNorm();
  if (mod8(d.value()) != 7)
    throw std::domain_error("pell_unit: d must be 7 (mod 8)");
  if (sol.D != d.value())
    throw std::domain_error("pell_unit: Pell solution is over a different field");
  if (!sol.satisfies())
    throw std::domain_error("pell_unit: (x, y) does not solve x^2 - d y^2 = 1");

  Int x = sol.x, y = sol.y;
  if (y % 2 != 0) {
    // square x + y sqrt(d) so the radical coefficient becomes even
    Int x2 = x * x + d.value() * y * y;
    y = 2 * x * y;
    x = x2;
  }
  Int half_y = y / 2;
  Int plus = (1 + x) / 2, minus = (1 - x) / 2;
  if ((1 + x) % 2 != 0)
    throw std::logic_error("pell_unit: x must be odd when y is even");
  Int cj = sign == PellSign::Upper ? plus : minus;
  Int ck = sign == PellSign::Upper ? minus : plus;

  QuadRing ring = ring_for(d);
  Quaternion u = place(d, {{Basis::One, rat_radical(ring, half_y)},
                           {Basis::I, rat_radical(ring, half_y)},
                           {Basis::J, rat_int(ring, cj)},
                           {Basis::K, rat_int(ring, ck)}});
  UnitRecord rec{u, UnitFamily::PellUnit, 1, PellUnitProv{sol, sign}};
  require_norm(rec, "pell_unit");
  return rec;
}

UnitRecord pell_three_unit(const SquareFreeD& d, const Int& p, const Int& m,
                           const BasisTriple& triple) {
  if (mod4(d.value()) != 3)
    throw std::domain_error("pell_three_unit: d must be 3 (mod 4)");
  Int lhs = (2 * p - 1) * (2 * p - 1) - 2 * d.value() * m * m;
  if (lhs != 1)
    throw std::domain_error(
        "pell_three_unit: (2p - 1)^2 - 2d m^2 = 1 fails for these inputs");
  QuadRing ring = ring_for(d);
  Quaternion u = place(d, {{triple.xi, rat_radical(ring, m)},
                           {triple.psi, rat_int(ring, p)},
                           {triple.phi, rat_int(ring, Int(1) - p)}});
  UnitRecord rec{u, UnitFamily::PellThreeUnit, 1, PellThreeProv{p, m, triple.xi,
                                                                triple.psi, triple.phi}};
  require_norm(rec, "pell_three_unit");
  return rec;
}

UnitRecord gauss_unit(const SquareFreeD& d, const Int& m, int target_norm) {
  if (target_norm != 1 && target_norm != -1)
    throw std::invalid_argument("gauss_unit: target norm must be +1 or -1");
  if (!is_division(d))
    throw std::domain_error("gauss_unit: needs a division ring (d = 7 mod 8)");
  Int n = d.value() * m * m + target_norm;
  ThreeSquares squares{Int(0), Int(0), Int(0), Int(0)};
  try {
    squares = three_squares(n, Int(1000000000));
  } catch (const NotRepresentable&) {
    if (((m % 4) + 4) % 4 == 2)
      throw std::logic_error(
          "gauss_unit: representability is guaranteed for m = 2 (mod 4)");
    throw;
  }
  QuadRing ring = ring_for(d);
  Quaternion u = place(d, {{Basis::One, rat_radical(ring, m)},
                           {Basis::I, rat_int(ring, squares.p)},
                           {Basis::J, rat_int(ring, squares.q)},
                           {Basis::K, rat_int(ring, squares.r)}});
  UnitRecord rec{u, UnitFamily::GaussUnit, target_norm, GaussProv{m, squares}};
  require_norm(rec, "gauss_unit");
  return rec;
}

namespace {

// Shared shape test: support of size l, exactly one coefficient m sqrt(-d)
// with integer m != 0, all other support coefficients rational integers.
// Returns the radical multiplier when the shape matches.
std::optional<Int> pell_shape(const Quaternion& u, int l) {
  if (l != 2 && l != 3)
    throw std::invalid_argument("pell/gauss l-units are defined for l in {2, 3}");
  if (!u.is_unit_of_order())
    throw std::domain_error("l-unit recognizers require a unit of the order");
  std::vector<Basis> support = u.support();
  if (static_cast<int>(support.size()) != l) return std::nullopt;
  std::optional<Int> radical;
  for (Basis b : support) {
    QuadInt::Display disp = u.coeff(b).display();
    if (disp.den != 1) return std::nullopt;
    if (disp.b == 0) continue;          // rational integer
    if (disp.a != 0) return std::nullopt;  // mixed coefficient
    if (radical) return std::nullopt;   // second radical coefficient
    radical = disp.b;
  }
  if (!radical) return std::nullopt;
  return radical;
}

}  // namespace

bool is_pell_l_unit(const Quaternion& u, int l) {
  return pell_shape(u, l).has_value();
}

bool is_gauss_l_unit(const Quaternion& u, int l) {
  std::optional<Int> m = pell_shape(u, l);
  if (!m) return false;
  QuadRat eta = u.norm();
  Int target = eta.equals_int(Int(1)) ? Int(1) : Int(-1);
  return three_squares_representable(u.d().value() * (*m) * (*m) + target);
}

std::vector<UnitRecord> s_generator_units(const SquareFreeD& d) {
  if (mod8(d.value()) != 7)
    throw std::domain_error(
        "s_generator_units: half-integer coefficients need d = 7 (mod 8)");
  QuadRing ring = ring_for(d);
  std::vector<UnitRecord> out;
  for (const auto& [m, p] : solve_m2_plus_2p2(Int(2) + d.value())) {
    if (m % 2 == 0) continue;  // even m would leave the order; cannot occur here
    Quaternion u = place(d, {{Basis::One, QuadRat::from_display(ring, m, Int(1), Int(2))},
                             {Basis::I, QuadRat::from_display(ring, m, Int(-1), Int(2))},
                             {Basis::J, rat_int(ring, p)}});
    UnitRecord rec{u, UnitFamily::SGenerator, 1, SGenProv{m, p}};
    require_norm(rec, "s_generator_units");
    out.push_back(rec);
  }
  return out;
}

UnitRecord wrap_adhoc_unit(const Quaternion& u) {
  if (!u.is_unit_of_order())
    throw std::domain_error("wrap_adhoc_unit: value is not a unit of the order");
  QuadRat eta = u.norm();
  int norm;
  if (eta.equals_int(Int(1)))
    norm = 1;
  else if (eta.equals_int(Int(-1)))
    norm = -1;
  else
    throw std::domain_error("wrap_adhoc_unit: records require eta(u) = +-1");
  return UnitRecord{u, UnitFamily::Adhoc, norm, std::monostate{}};
}

nlohmann::ordered_json unit_record_json(const UnitRecord& rec) {
  nlohmann::ordered_json doc;
  doc["d"] = json_int(rec.unit.d().value());
  doc["family"] = family_name(rec.family);
  nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
  for (int idx = 0; idx < 4; ++idx) {
    QuadInt::Display disp = rec.unit.coeff(static_cast<Basis>(idx)).display();
    coeffs.push_back({{"a", json_int(disp.a)},
                      {"b", json_int(disp.b)},
                      {"den", json_int(disp.den)}});
  }
  doc["coefficients"] = coeffs;
  doc["norm"] = rec.norm;

  nlohmann::ordered_json prov;
  if (const auto* two = std::get_if<TwoUnitProv>(&rec.provenance)) {
    prov["eps"] = {{"p", json_int(two->eps.p)}, {"m", json_int(two->eps.m)}};
    prov["xi"] = basis_name(two->xi);
    prov["psi"] = basis_name(two->psi);
  } else if (const auto* pell = std::get_if<PellUnitProv>(&rec.provenance)) {
    prov["pell"] = {{"x", json_int(pell->sol.x)}, {"y", json_int(pell->sol.y)}};
    prov["sign"] = pell->sign == PellSign::Upper ? "upper" : "lower";
  } else if (const auto* three = std::get_if<PellThreeProv>(&rec.provenance)) {
    prov["p"] = json_int(three->p);
    prov["m"] = json_int(three->m);
    prov["xi"] = basis_name(three->xi);
    prov["psi"] = basis_name(three->psi);
    prov["phi"] = basis_name(three->phi);
  } else if (const auto* gauss = std::get_if<GaussProv>(&rec.provenance)) {
    prov["m"] = json_int(gauss->m);
    prov["three_squares"] = {{"p", json_int(gauss->squares.p)},
                             {"q", json_int(gauss->squares.q)},
                             {"r", json_int(gauss->squares.r)}};
  } else if (const auto* sgen = std::get_if<SGenProv>(&rec.provenance)) {
    prov["m"] = json_int(sgen->m);
    prov["p"] = json_int(sgen->p);
  } else {
    prov = nullptr;
  }
  doc["provenance"] = prov;
  return doc;
}

}  // namespace qorder
