#include <qorder/quadratic.hpp>

#include <algorithm>
#include <sstream>

namespace qorder {

namespace {

Int abs_int(const Int& v) { return v < 0 ? Int(-v) : v; }

// floor division remainder, result in [0, m)
Int mod_floor(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

}  // namespace

Int gcd_int(const Int& a, const Int& b) {
  return boost::multiprecision::gcd(abs_int(a), abs_int(b));
}

Int isqrt_floor(const Int& n) {
  if (n < 0) throw std::domain_error("isqrt_floor: negative argument");
  return boost::multiprecision::sqrt(n);
}

bool is_perfect_square(const Int& n) {
  if (n < 0) return false;
  Int r = isqrt_floor(n);
  return r * r == n;
}

bool is_square_free(const Int& n) {
  if (n == 0) return false;
  Int m = abs_int(n);
  for (Int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      m /= p;
      if (m % p == 0) return false;
    }
  }
  return true;
}

SquareFreeD::SquareFreeD(Int value) : value_(std::move(value)) {
  if (value_ == 0 || value_ == -1)
    throw std::domain_error("SquareFreeD: value must not be 0 or -1");
  if (!is_square_free(value_))
    throw std::domain_error("SquareFreeD: " + value_.str() + " is not square-free");
}

QuadRing ring_of_radicand(const Int& D) {
  if (D == 0 || D == 1)
    throw std::domain_error("ring_of_radicand: degenerate radicand " + D.str());
  if (!is_square_free(D))
    throw std::domain_error("ring_of_radicand: " + D.str() + " is not square-free");
  OmegaKind kind = mod_floor(D, 4) == 1 ? OmegaKind::HalfPlusSqrt : OmegaKind::Sqrt;
  return QuadRing(D, kind);
}

QuadRing ring_of(const SquareFreeD& D) { return ring_of_radicand(D.value()); }

QuadInt QuadInt::sqrt_d(const QuadRing& ring) {
  // sqrt(D) = omega in the Sqrt basis, 2*omega - 1 in the half basis
  if (ring.omega_kind() == OmegaKind::Sqrt) return {ring, 0, 1};
  return {ring, -1, 2};
}

void QuadInt::check_same_ring(const QuadInt& o) const {
  if (ring_ != o.ring_)
    throw std::invalid_argument("QuadInt: operands from different rings");
}

QuadInt QuadInt::operator+(const QuadInt& o) const {
  check_same_ring(o);
  return {ring_, x_ + o.x_, y_ + o.y_};
}

QuadInt QuadInt::operator-(const QuadInt& o) const {
  check_same_ring(o);
  return {ring_, x_ - o.x_, y_ - o.y_};
}

QuadInt QuadInt::operator*(const QuadInt& o) const {
  check_same_ring(o);
  if (ring_.omega_kind() == OmegaKind::Sqrt) {
    return {ring_, x_ * o.x_ + ring_.D() * y_ * o.y_, x_ * o.y_ + y_ * o.x_};
  }
  // omega^2 = omega + (D-1)/4
  Int c = (ring_.D() - 1) / 4;
  return {ring_, x_ * o.x_ + c * y_ * o.y_, x_ * o.y_ + y_ * o.x_ + y_ * o.y_};
}

bool QuadInt::operator==(const QuadInt& o) const {
  return ring_ == o.ring_ && x_ == o.x_ && y_ == o.y_;
}

bool QuadInt::operator<(const QuadInt& o) const {
  if (x_ != o.x_) return x_ < o.x_;
  return y_ < o.y_;
}

QuadInt QuadInt::conj() const {
  if (ring_.omega_kind() == OmegaKind::Sqrt) return {ring_, x_, -y_};
  return {ring_, x_ + y_, -y_};  // conj(omega) = 1 - omega
}

Int QuadInt::norm() const {
  if (ring_.omega_kind() == OmegaKind::Sqrt) return x_ * x_ - ring_.D() * y_ * y_;
  return x_ * x_ + x_ * y_ + y_ * y_ * ((1 - ring_.D()) / 4);
}

Int QuadInt::trace() const {
  if (ring_.omega_kind() == OmegaKind::Sqrt) return 2 * x_;
  return 2 * x_ + y_;
}

bool QuadInt::is_unit() const { return abs_int(norm()) == 1; }

QuadInt::Display QuadInt::display() const {
  if (ring_.omega_kind() == OmegaKind::Sqrt) return {x_, y_, 1};
  Int a = 2 * x_ + y_;
  if (mod_floor(a, 2) == 0 && mod_floor(y_, 2) == 0) return {a / 2, y_ / 2, 1};
  return {a, y_, 2};
}

std::optional<QuadInt> QuadInt::from_display(const QuadRing& ring, const Int& a,
                                             const Int& b, const Int& den) {
  if (den <= 0) return std::nullopt;
  if (ring.omega_kind() == OmegaKind::Sqrt) {
    if (a % den != 0 || b % den != 0) return std::nullopt;
    return QuadInt(ring, a / den, b / den);
  }
  // (a + b sqrt(D))/den = ((a - b) + 2b*omega)/den
  Int u = a - b, v = 2 * b;
  if (u % den != 0 || v % den != 0) return std::nullopt;
  return QuadInt(ring, u / den, v / den);
}

std::string QuadInt::str() const {
  Display d = display();
  std::ostringstream out;
  if (d.b == 0) {
    out << d.a;
  } else if (d.a == 0 && d.den == 1) {
    out << d.b << "s";
  } else {
    out << "(" << d.a << (d.b < 0 ? "-" : "+") << abs_int(d.b) << "s)";
    if (d.den != 1) out << "/" << d.den;
  }
  return out.str();
}

QuadRat::QuadRat(QuadInt num, Int den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw std::domain_error("QuadRat: zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  Int g = gcd_int(gcd_int(num_.x(), num_.y()), den_);
  if (g > 1) {
    num_ = QuadInt(num_.ring(), num_.x() / g, num_.y() / g);
    den_ /= g;
  }
}

QuadRat QuadRat::from_display(const QuadRing& ring, const Int& a, const Int& b,
                              const Int& den) {
  if (den == 0) throw std::domain_error("QuadRat: zero denominator");
  if (ring.omega_kind() == OmegaKind::Sqrt) return QuadRat(QuadInt(ring, a, b), den);
  return QuadRat(QuadInt(ring, 2 * (a - b), 4 * b), 2 * den);
}

QuadRat QuadRat::operator+(const QuadRat& o) const {
  Int g = gcd_int(den_, o.den_);
  Int l = den_ / g * o.den_;
  Int s1 = l / den_, s2 = l / o.den_;
  QuadInt n(num_.ring(), num_.x() * s1, num_.y() * s1);
  QuadInt m(o.num_.ring(), o.num_.x() * s2, o.num_.y() * s2);
  return QuadRat(n + m, l);
}

QuadRat QuadRat::operator-(const QuadRat& o) const { return *this + (-o); }

QuadRat QuadRat::operator*(const QuadRat& o) const {
  return QuadRat(num_ * o.num_, den_ * o.den_);
}

QuadRat QuadRat::operator-() const { return QuadRat(-num_, den_); }

bool QuadRat::operator==(const QuadRat& o) const {
  return num_ == o.num_ && den_ == o.den_;
}

QuadRat QuadRat::conj() const { return QuadRat(num_.conj(), den_); }

QuadRat QuadRat::inverse() const {
  if (num_.is_zero()) throw std::domain_error("QuadRat: inverse of zero");
  // 1 / (num/den) = den * conj(num) / N(num)
  QuadInt c = num_.conj();
  return QuadRat(QuadInt(c.ring(), c.x() * den_, c.y() * den_), num_.norm());
}

std::optional<Int> QuadRat::as_int() const {
  if (is_rational_integer()) return num_.x();
  return std::nullopt;
}

bool QuadRat::equals_int(const Int& v) const {
  return den_ == 1 && num_.y() == 0 && num_.x() == v;
}

QuadInt::Display QuadRat::display() const {
  QuadInt::Display d = num_.display();
  d.den *= den_;
  Int g = gcd_int(gcd_int(d.a, d.b), d.den);
  if (g > 1) {
    d.a /= g;
    d.b /= g;
    d.den /= g;
  }
  return d;
}

std::string QuadRat::str() const {
  QuadInt::Display d = display();
  std::ostringstream out;
  if (d.b == 0) {
    out << d.a;
    if (d.den != 1) out << "/" << d.den;
  } else if (d.a == 0 && d.den == 1) {
    out << d.b << "s";
  } else {
    out << "(" << d.a << (d.b < 0 ? "-" : "+") << abs_int(d.b) << "s)";
    if (d.den != 1) out << "/" << d.den;
  }
  return out.str();
}

namespace {

struct CfResult {
  Int x, y;     // convergent h_{r-1}, k_{r-1}
  bool odd_period;
};

// Continued fraction of sqrt(D); returns the convergent just before the
// period closes (the term 2*a0).
CfResult pell_cf(const Int& D) {
  if (D <= 1) throw std::domain_error("Pell: D must exceed 1");
  Int a0 = isqrt_floor(D);
  if (a0 * a0 == D) throw std::domain_error("Pell: D must not be a perfect square");
  Int m = 0, den = 1, a = a0;
  Int h_prev = 1, h = a0, k_prev = 0, k = 1;
  for (unsigned long step = 1;; ++step) {
    m = den * a - m;
    den = (D - m * m) / den;
    a = (a0 + m) / den;
    if (a == 2 * a0) return {h, k, step % 2 == 1};
    Int h_next = a * h + h_prev;
    Int k_next = a * k + k_prev;
    h_prev = h;
    k_prev = k;
    h = h_next;
    k = k_next;
  }
}

}  // namespace

PellSolution fundamental_pell(const Int& D) {
  CfResult c = pell_cf(D);
  if (!c.odd_period) return {D, c.x, c.y, 1};
  // odd period: (x + y sqrt(D))^2 gives the least +1 solution
  return {D, c.x * c.x + D * c.y * c.y, 2 * c.x * c.y, 1};
}

std::optional<PellSolution> negative_pell(const Int& D) {
  CfResult c = pell_cf(D);
  if (!c.odd_period) return std::nullopt;
  return PellSolution{D, c.x, c.y, -1};
}

PellSolution pell_power(const PellSolution& sol, unsigned n) {
  if (n == 0) throw std::domain_error("pell_power: exponent must be positive");
  if (!sol.satisfies()) throw std::domain_error("pell_power: input violates its Pell equation");
  Int rx = 1, ry = 0;
  Int bx = sol.x, by = sol.y;
  unsigned e = n;
  while (e > 0) {
    if (e & 1u) {
      Int nx = rx * bx + sol.D * ry * by;
      ry = rx * by + ry * bx;
      rx = nx;
    }
    e >>= 1u;
    if (e > 0) {
      Int nx = bx * bx + sol.D * by * by;
      by = 2 * bx * by;
      bx = nx;
    }
  }
  int norm = (sol.norm == -1 && n % 2 == 1) ? -1 : 1;
  return {sol.D, rx, ry, norm};
}

NotRepresentable::NotRepresentable(Int n_, Int a_, Int b_)
    : std::domain_error("three_squares: " + n_.str() + " = 4^" + a_.str() + "(8*" +
                        b_.str() + "+7) is not a sum of three squares"),
      n(std::move(n_)),
      a(std::move(a_)),
      b(std::move(b_)) {}

std::optional<std::pair<Int, Int>> legendre_witness(const Int& n) {
  if (n < 0) return std::nullopt;
  Int m = n, a = 0;
  while (m > 0 && m % 4 == 0) {
    m /= 4;
    ++a;
  }
  if (m % 8 == 7) return std::make_pair(a, (m - 7) / 8);
  return std::nullopt;
}

bool three_squares_representable(const Int& n) {
  if (n < 0) return false;
  return !legendre_witness(n).has_value();
}

ThreeSquares three_squares(const Int& n, const Int& bound) {
  if (n < 0) throw std::domain_error("three_squares: negative argument");
  if (bound < 0 || bound > Int("4000000000000000000"))
    throw std::domain_error("three_squares: unsupported bound");
  if (n > bound)
    throw std::domain_error("three_squares: " + n.str() + " exceeds search bound " +
                            bound.str());
  if (auto w = legendre_witness(n)) throw NotRepresentable(n, w->first, w->second);

  auto nn = n.convert_to<unsigned long long>();
  auto root = [](unsigned long long v) {
    auto r = static_cast<unsigned long long>(std::sqrt(static_cast<double>(v)));
    while (r > 0 && r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
  };
  for (unsigned long long p = root(nn);; --p) {
    unsigned long long rem = nn - p * p;
    unsigned long long qmax = std::min(p, root(rem));
    for (unsigned long long q = qmax;; --q) {
      unsigned long long rr = rem - q * q;
      unsigned long long r = root(rr);
      if (r * r == rr && r <= q) return {n, Int(p), Int(q), Int(r)};
      if (q == 0) break;
    }
    if (p == 0) break;
  }
  throw std::logic_error("three_squares: search failed for representable n");
}

std::vector<std::pair<Int, Int>> solve_m2_plus_2p2(const Int& n) {
  if (n < 0) throw std::domain_error("solve_m2_plus_2p2: negative argument");
  std::vector<std::pair<Int, Int>> out;
  for (Int m = 0; m * m <= n; ++m) {
    Int t = n - m * m;
    if (t % 2 != 0) continue;
    Int h = t / 2;
    Int r = isqrt_floor(h);
    if (r * r == h) out.emplace_back(m, r);
  }
  return out;
}

}  // namespace qorder
