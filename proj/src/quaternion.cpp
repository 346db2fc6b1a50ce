#include <qorder/quaternion.hpp>

#include <map>

namespace qorder {

const char* basis_name(Basis b) {
  switch (b) {
    case Basis::One: return "1";
    case Basis::I: return "i";
    case Basis::J: return "j";
    case Basis::K: return "k";
  }
  return "?";
}

Quaternion::Quaternion(SquareFreeD d, QuadRat c1, QuadRat ci, QuadRat cj, QuadRat ck)
    : d_(std::move(d)), c_{std::move(c1), std::move(ci), std::move(cj), std::move(ck)} {
  if (d_.value() <= 0)
    throw std::domain_error("Quaternion: d must be positive");
  Int expect = -d_.value();
  for (const auto& c : c_)
    if (c.ring().D() != expect)
      throw std::invalid_argument("Quaternion: coefficient ring must be ring_of(-d)");
}

Quaternion Quaternion::zero(const SquareFreeD& d) {
  QuadRing ring = ring_of_radicand(-d.value());
  QuadRat z = QuadRat::from_int(ring, 0);
  return {d, z, z, z, z};
}

Quaternion Quaternion::one(const SquareFreeD& d) { return basis(d, Basis::One); }

Quaternion Quaternion::basis(const SquareFreeD& d, Basis b) {
  QuadRing ring = ring_of_radicand(-d.value());
  QuadRat z = QuadRat::from_int(ring, 0);
  QuadRat o = QuadRat::from_int(ring, 1);
  std::array<QuadRat, 4> c{z, z, z, z};
  c[static_cast<int>(b)] = o;
  return {d, c[0], c[1], c[2], c[3]};
}

void Quaternion::check_compatible(const Quaternion& o) const {
  if (d_.value() != o.d_.value())
    throw std::invalid_argument("Quaternion: operands over different d");
}

Quaternion Quaternion::operator+(const Quaternion& o) const {
  check_compatible(o);
  return {d_, c_[0] + o.c_[0], c_[1] + o.c_[1], c_[2] + o.c_[2], c_[3] + o.c_[3]};
}

Quaternion Quaternion::operator-(const Quaternion& o) const {
  check_compatible(o);
  return {d_, c_[0] - o.c_[0], c_[1] - o.c_[1], c_[2] - o.c_[2], c_[3] - o.c_[3]};
}

Quaternion Quaternion::operator*(const Quaternion& o) const {
  check_compatible(o);
  const QuadRat &a1 = c_[0], &ai = c_[1], &aj = c_[2], &ak = c_[3];
  const QuadRat &b1 = o.c_[0], &bi = o.c_[1], &bj = o.c_[2], &bk = o.c_[3];
  return {d_,
          a1 * b1 - ai * bi - aj * bj - ak * bk,
          a1 * bi + ai * b1 + aj * bk - ak * bj,
          a1 * bj - ai * bk + aj * b1 + ak * bi,
          a1 * bk + ai * bj - aj * bi + ak * b1};
}

Quaternion Quaternion::operator-() const {
  return {d_, -c_[0], -c_[1], -c_[2], -c_[3]};
}

Quaternion Quaternion::scale(const QuadRat& s) const {
  return {d_, s * c_[0], s * c_[1], s * c_[2], s * c_[3]};
}

bool Quaternion::operator==(const Quaternion& o) const {
  return d_.value() == o.d_.value() && c_ == o.c_;
}

Quaternion Quaternion::conj() const {
  return {d_, c_[0], -c_[1], -c_[2], -c_[3]};
}

QuadRat Quaternion::norm() const {
  return c_[0] * c_[0] + c_[1] * c_[1] + c_[2] * c_[2] + c_[3] * c_[3];
}

Quaternion Quaternion::inverse() const {
  QuadRat eta = norm();
  if (eta.is_zero()) throw ZeroNorm();
  return conj().scale(eta.inverse());
}

Quaternion Quaternion::pow(long long n) const {
  if (n < 0) return inverse().pow(-n);
  Quaternion acc = Quaternion::one(d_);
  Quaternion base = *this;
  unsigned long long e = static_cast<unsigned long long>(n);
  while (e > 0) {
    if (e & 1ull) acc = acc * base;
    e >>= 1ull;
    if (e > 0) base = base * base;
  }
  return acc;
}

bool Quaternion::is_zero() const {
  for (const auto& c : c_)
    if (!c.is_zero()) return false;
  return true;
}

std::vector<Basis> Quaternion::support() const {
  std::vector<Basis> out;
  for (int t = 0; t < 4; ++t)
    if (!c_[t].is_zero()) out.push_back(static_cast<Basis>(t));
  return out;
}

bool Quaternion::in_order() const {
  for (const auto& c : c_)
    if (!c.in_ring()) return false;
  return true;
}

bool Quaternion::is_unit_of_order() const {
  return in_order() && is_ring_unit(norm());
}

std::pair<QuadRat, QuadRat> square_reduce(const Quaternion& u) {
  QuadRat tr = u.c1() + u.c1();
  QuadRat eta = u.norm();
  Quaternion lhs = u * u;
  Quaternion rhs = u.scale(tr) - Quaternion::one(u.d()).scale(eta);
  if (lhs != rhs)
    throw std::logic_error("square_reduce: trace identity failed");
  return {tr, eta};
}

bool is_division(const SquareFreeD& d) {
  if (d.value() <= 0) return false;
  return d.value() % 8 == 7;
}

std::optional<int> stufe(const SquareFreeD& d) {
  if (d.value() < 0) return std::nullopt;
  if (d.value() == 1) return 1;
  if (d.value() % 8 == 7) return 4;
  return 2;
}

bool is_ring_unit(const QuadRat& q) {
  if (!q.in_ring()) return false;
  Int n = q.num().norm();
  return n == 1 || n == -1;
}

std::vector<QuadInt> units_of_ring(const QuadRing& ring) {
  if (ring.D() > 0)
    throw std::domain_error("units_of_ring: infinite unit group for real fields");
  std::vector<QuadInt> out;
  QuadInt one = QuadInt::from_int(ring, 1);
  out.push_back(one);
  out.push_back(-one);
  if (ring.D() == -1) {
    QuadInt i = QuadInt::omega(ring);  // sqrt(-1)
    out.push_back(i);
    out.push_back(-i);
  } else if (ring.D() == -3) {
    QuadInt w = QuadInt::omega(ring);  // (1 + sqrt(-3))/2, a sixth root of unity
    QuadInt w2 = w - one;
    out.push_back(w);
    out.push_back(-w);
    out.push_back(w2);
    out.push_back(-w2);
  }
  return out;
}

TorsionVerdict torsion_order(const Quaternion& u) {
  if (!u.is_unit_of_order())
    throw std::domain_error("torsion_order: not a unit of H(R)");

  if (is_division(u.d())) {
    QuadRat eta = u.norm();
    if (eta.equals_int(Int(-1)))
      return {TorsionVerdict::Kind::Infinite, 0, "norm -1 unit in a division ring"};
    // eta = 1: torsion iff the coefficient of 1 lies in {-1, 0, 1}
    const QuadRat& c1 = u.c1();
    if (c1.equals_int(Int(1)) || c1.equals_int(Int(-1)) || c1.is_zero()) {
      if (u == Quaternion::one(u.d()))
        return {TorsionVerdict::Kind::FiniteOrder, 1, "identity"};
      if (u == -Quaternion::one(u.d()))
        return {TorsionVerdict::Kind::FiniteOrder, 2, "negated identity"};
      Quaternion sq = u * u;
      if (sq != -Quaternion::one(u.d()))
        throw std::logic_error("torsion_order: trace-zero unit must square to -1");
      return {TorsionVerdict::Kind::FiniteOrder, 4, "trace zero, u^2 = -1"};
    }
    return {TorsionVerdict::Kind::Infinite, 0,
            "division ring: trace coefficient outside {-1, 0, 1}"};
  }

  Quaternion p = u;
  for (int n = 1; n <= 24; ++n) {
    if (p == Quaternion::one(u.d()))
      return {TorsionVerdict::Kind::FiniteOrder, n, "power search"};
    p = p * u;
  }
  return {TorsionVerdict::Kind::Unknown, 0, "no power up to 24 equals 1"};
}

namespace {

using CoefKey = std::pair<Int, Int>;

CoefKey key_of(const QuadInt& v) { return {v.x(), v.y()}; }

}  // namespace

std::optional<Quaternion> find_zero_divisor(const SquareFreeD& d, long height_bound) {
  if (d.value() <= 0) throw std::domain_error("find_zero_divisor: d must be positive");
  if (height_bound < 0) throw std::domain_error("find_zero_divisor: negative bound");
  QuadRing ring = ring_of_radicand(-d.value());

  for (long h = 0; h <= height_bound; ++h) {
    std::vector<QuadInt> coeffs;
    for (long x = -h; x <= h; ++x)
      for (long y = -h; y <= h; ++y) coeffs.emplace_back(ring, Int(x), Int(y));

    // c1^2 + ci^2 = -(cj^2 + ck^2): hash the left side, scan the right.
    struct Slot {
      size_t first;          // lexicographically least pair
      size_t first_nonzero;  // least pair that is not (0, 0)
      bool has_nonzero;
    };
    std::map<CoefKey, Slot> sums;
    const size_t n = coeffs.size();
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        QuadInt s = coeffs[i] * coeffs[i] + coeffs[j] * coeffs[j];
        bool zero_pair = coeffs[i].is_zero() && coeffs[j].is_zero();
        auto [it, fresh] = sums.try_emplace(key_of(s), Slot{i * n + j, i * n + j, !zero_pair});
        if (!fresh && !zero_pair && !it->second.has_nonzero) {
          it->second.first_nonzero = i * n + j;
          it->second.has_nonzero = true;
        }
      }

    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        QuadInt t = -(coeffs[i] * coeffs[i] + coeffs[j] * coeffs[j]);
        auto it = sums.find(key_of(t));
        if (it == sums.end()) continue;
        bool right_zero = coeffs[i].is_zero() && coeffs[j].is_zero();
        size_t pick;
        if (right_zero) {
          if (!it->second.has_nonzero) continue;  // would give u = 0
          pick = it->second.first_nonzero;
        } else {
          pick = it->second.first;
        }
        return Quaternion(d, QuadRat(coeffs[pick / n]), QuadRat(coeffs[pick % n]),
                          QuadRat(coeffs[i]), QuadRat(coeffs[j]));
      }
  }
  return std::nullopt;
}

}  // namespace qorder
