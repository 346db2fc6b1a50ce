#include <qorder/freeness.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

#include <qorder/json_util.hpp>

namespace qorder {

namespace {

using cplx = std::complex<double>;

constexpr double kAffineEps = 1e-12;

struct Mat2 {
  cplx a, b, c, e;
};

Mat2 mul(const Mat2& x, const Mat2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.e,
          x.c * y.a + x.e * y.c, x.c * y.b + x.e * y.e};
}

// W and its inverse both have determinant 1.
const Mat2 kW{cplx(1), cplx(1), cplx(1), cplx(2)};
const Mat2 kWinv{cplx(2), cplx(-1), cplx(-1), cplx(1)};

MobiusMatrix conjugated(const Quaternion& u) {
  MobiusMatrix M = embed(u);
  Mat2 C = mul(mul(kW, Mat2{M.a, M.b, M.c, M.e}), kWinv);
  return {C.a, C.b, C.c, C.e, std::nullopt};
}

void validate_family(const std::vector<UnitRecord>& units) {
  if (units.empty()) throw std::invalid_argument("generator list is empty");
  Int d = units.front().unit.d().value();
  for (const UnitRecord& rec : units)
    if (rec.unit.d().value() != d)
      throw std::invalid_argument("generators live over different fields");
}

// Circles for u_1^m, u_1^-m, u_2^m, ... after conjugation, or nullopt when
// some power is affine.
std::optional<std::vector<IsometricCircle>> circles_at(
    const std::vector<UnitRecord>& units, long long m) {
  std::vector<IsometricCircle> circles;
  circles.reserve(2 * units.size());
  for (const UnitRecord& rec : units)
    for (long long sign : {1, -1}) {
      MobiusMatrix M = conjugated(rec.unit.pow(sign * m));
      if (std::abs(M.c) <= kAffineEps) return std::nullopt;
      circles.push_back(isometric_circle(M));
    }
  return circles;
}

double min_gap_of(const std::vector<IsometricCircle>& circles) {
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < circles.size(); ++i)
    for (std::size_t j = i + 1; j < circles.size(); ++j)
      gap = std::min(gap, std::abs(circles[i].center - circles[j].center) -
                              circles[i].radius - circles[j].radius);
  return gap;
}

}  // namespace

std::complex<double> to_complex(const QuadRat& q) {
  QuadInt::Display disp = q.display();
  double den = disp.den.convert_to<double>();
  double root = std::sqrt(std::abs(q.ring().D().convert_to<double>()));
  return {disp.a.convert_to<double>() / den,
          disp.b.convert_to<double>() * root / den};
}

MobiusMatrix embed(const Quaternion& u) {
  cplx x1 = to_complex(u.coeff(Basis::One));
  cplx xi = to_complex(u.coeff(Basis::I));
  cplx xj = to_complex(u.coeff(Basis::J));
  cplx xk = to_complex(u.coeff(Basis::K));
  cplx z(0, 1);
  return {x1 + xi * z, xj + xk * z, -xj + xk * z, x1 - xi * z, u};
}

IsometricCircle isometric_circle(const MobiusMatrix& M) {
  double size = std::abs(M.c);
  if (size <= kAffineEps)
    throw AffineElement("matrix fixes infinity, no isometric circle");
  return {-M.e / M.c, 1.0 / size};
}

std::array<std::array<int, 2>, 2> schottky_conjugation() {
  return {{{1, 1}, {1, 2}}};
}

std::optional<SchottkyCertificate> schottky_certificate(
    const std::vector<UnitRecord>& units, long long max_m, double tau) {
  validate_family(units);
  if (max_m < 1) throw std::invalid_argument("max_m must be positive");
  if (!(tau > 0)) throw std::invalid_argument("tau must be positive");
  for (const UnitRecord& rec : units)
    if (torsion_order(rec.unit).kind != TorsionVerdict::Kind::Infinite)
      throw std::domain_error("every generator must have infinite order");

  bool even_only = std::any_of(units.begin(), units.end(),
                               [](const UnitRecord& r) { return r.norm == -1; });
  for (long long m = 1; m <= max_m; ++m) {
    if (even_only && m % 2 != 0) continue;
    std::optional<std::vector<IsometricCircle>> circles = circles_at(units, m);
    if (!circles) continue;
    double gap = min_gap_of(*circles);
    if (gap > tau)
      return SchottkyCertificate{units.front().unit.d().value(), m,    tau,
                                 units,                          *circles, gap};
  }
  return std::nullopt;
}

std::optional<double> min_gap_at(const std::vector<UnitRecord>& units,
                                 long long m) {
  validate_family(units);
  if (m < 1) throw std::invalid_argument("m must be positive");
  std::optional<std::vector<IsometricCircle>> circles = circles_at(units, m);
  if (!circles) return std::nullopt;
  return min_gap_of(*circles);
}

std::optional<std::string> relation_search(const std::vector<UnitRecord>& units,
                                           long long m, int max_len) {
  validate_family(units);
  if (m < 1) throw std::invalid_argument("m must be positive");
  if (max_len < 1) throw std::invalid_argument("max_len must be positive");
  if (units.size() > 26)
    throw std::invalid_argument("at most 26 generators are supported");

  // letter 2t is u_t^m, letter 2t + 1 is u_t^-m
  std::vector<Quaternion> letter;
  letter.reserve(2 * units.size());
  for (const UnitRecord& rec : units) {
    letter.push_back(rec.unit.pow(m));
    letter.push_back(rec.unit.pow(-m));
  }
  Quaternion one = Quaternion::one(units.front().unit.d());
  int alphabet = static_cast<int>(letter.size());

  std::vector<int> word;
  std::vector<Quaternion> prefix;  // prefix[k] = product of word[0..k]
  auto dfs = [&](auto&& self, int len) -> bool {
    if (static_cast<int>(word.size()) == len)
      return prefix.back() == one;
    for (int l = 0; l < alphabet; ++l) {
      if (!word.empty() && (word.back() ^ 1) == l) continue;
      word.push_back(l);
      prefix.push_back(prefix.empty() ? letter[l] : prefix.back() * letter[l]);
      if (self(self, len)) return true;
      word.pop_back();
      prefix.pop_back();
    }
    return false;
  };
  for (int len = 1; len <= max_len; ++len) {
    if (dfs(dfs, len)) {
      std::string text;
      for (int l : word)
        text += static_cast<char>((l % 2 == 0 ? 'a' : 'A') + l / 2);
      return text;
    }
  }
  return std::nullopt;
}

nlohmann::ordered_json certificate_json(const SchottkyCertificate& cert,
                                        const std::optional<CrossCheck>& cross) {
  nlohmann::ordered_json doc;
  doc["d"] = json_int(cert.d);
  doc["m"] = cert.m;
  doc["tau"] = cert.tau;
  auto w = schottky_conjugation();
  doc["conjugation"] = {{w[0][0], w[0][1]}, {w[1][0], w[1][1]}};
  doc["generators"] = nlohmann::ordered_json::array();
  for (const UnitRecord& rec : cert.generators)
    doc["generators"].push_back(unit_record_json(rec));
  doc["circles"] = nlohmann::ordered_json::array();
  for (const IsometricCircle& c : cert.circles)
    doc["circles"].push_back({{"center", {c.center.real(), c.center.imag()}},
                              {"radius", c.radius}});
  doc["min_gap"] = cert.min_gap;
  if (cross)
    doc["cross_check"] = {{"max_len", cross->max_len},
                          {"relations_found", cross->relations_found}};
  else
    doc["cross_check"] = nullptr;
  return doc;
}

}  // namespace qorder
