#include <qorder/unit_literal.hpp>

#include <array>
#include <cctype>
#include <sstream>

namespace qorder {
namespace {

struct Cursor {
  const std::string& s;
  std::size_t pos = 0;
  bool done() const { return pos >= s.size(); }
  char peek() const { return s[pos]; }
};

[[noreturn]] void fail(const Cursor& c, const std::string& what) {
  std::ostringstream os;
  os << "unit literal: " << what << " at position " << c.pos << " of \"" << c.s
     << "\"";
  throw std::invalid_argument(os.str());
}

// Signs between terms belong to the unit level; an int carries its own sign
// only inside parentheses.
Int parse_int(Cursor& c, bool allow_sign) {
  bool neg = false;
  if (allow_sign && !c.done() && (c.peek() == '+' || c.peek() == '-')) {
    neg = c.peek() == '-';
    ++c.pos;
  }
  std::string digits;
  while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
    digits += c.peek();
    ++c.pos;
  }
  if (digits.empty()) fail(c, "expected an integer");
  Int v(digits);
  return neg ? -v : v;
}

QuadRat parse_coeff(Cursor& c, const QuadRing& ring) {
  if (!c.done() && c.peek() == '(') {
    ++c.pos;
    Int a = parse_int(c, true);
    if (c.done() || (c.peek() != '+' && c.peek() != '-'))
      fail(c, "expected '+' or '-' before the s part");
    bool minus = c.peek() == '-';
    ++c.pos;
    Int b = parse_int(c, false);
    if (minus) b = -b;
    if (c.done() || c.peek() != 's') fail(c, "expected 's'");
    ++c.pos;
    if (c.done() || c.peek() != ')') fail(c, "expected ')'");
    ++c.pos;
    Int den(1);
    if (!c.done() && c.peek() == '/') {
      ++c.pos;
      if (parse_int(c, false) != 2) fail(c, "only /2 denominators are allowed");
      den = 2;
    }
    return QuadRat::from_display(ring, a, b, den);
  }
  Int n = parse_int(c, false);
  if (!c.done() && c.peek() == 's') {
    ++c.pos;
    return QuadRat::from_display(ring, Int(0), n, Int(1));
  }
  return QuadRat::from_display(ring, n, Int(0), Int(1));
}

}  // namespace

Quaternion parse_unit(const std::string& text, const SquareFreeD& d) {
  QuadRing ring = ring_of_radicand(-d.value());
  std::string stripped;
  stripped.reserve(text.size());
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) stripped += ch;

  Cursor c{stripped};
  if (c.done()) fail(c, "empty literal");

  std::array<QuadRat, 4> coeffs{
      QuadRat::from_int(ring, Int(0)), QuadRat::from_int(ring, Int(0)),
      QuadRat::from_int(ring, Int(0)), QuadRat::from_int(ring, Int(0))};
  bool first = true;
  while (first || !c.done()) {
    int sign = 1;
    if (!c.done() && (c.peek() == '+' || c.peek() == '-')) {
      sign = c.peek() == '-' ? -1 : 1;
      ++c.pos;
    } else if (!first) {
      fail(c, "expected '+' or '-' between terms");
    }
    QuadRat coeff = parse_coeff(c, ring);
    int idx = 0;
    if (!c.done() && (c.peek() == 'i' || c.peek() == 'j' || c.peek() == 'k')) {
      idx = c.peek() == 'i' ? 1 : (c.peek() == 'j' ? 2 : 3);
      ++c.pos;
    }
    coeffs[idx] = coeffs[idx] + (sign < 0 ? -coeff : coeff);
    first = false;
  }
  return Quaternion(d, coeffs[0], coeffs[1], coeffs[2], coeffs[3]);
}

std::string format_unit(const Quaternion& u) {
  static constexpr const char* kSuffix[4] = {"", "i", "j", "k"};
  std::string out;
  for (int idx = 0; idx < 4; ++idx) {
    QuadRat c = u.coeff(static_cast<Basis>(idx));
    if (c.is_zero()) continue;
    QuadInt::Display disp = c.display();
    if (disp.den != 1 && disp.den != 2)
      throw std::domain_error(
          "format_unit: coefficient denominator exceeds 2, not expressible");
    std::string term;
    char join = '+';
    if (disp.den == 1 && disp.b == 0) {
      if (disp.a < 0) join = '-';
      term = Int(abs(disp.a)).str();
    } else if (disp.den == 1 && disp.a == 0) {
      if (disp.b < 0) join = '-';
      term = Int(abs(disp.b)).str() + "s";
    } else {
      term = "(" + disp.a.str() + (disp.b < 0 ? "-" : "+") + Int(abs(disp.b)).str() +
             "s)";
      if (disp.den == 2) term += "/2";
    }
    term += kSuffix[idx];
    if (out.empty()) {
      if (join == '-') out += '-';
    } else {
      out += join;
    }
    out += term;
  }
  return out.empty() ? "0" : out;
}

}  // namespace qorder
