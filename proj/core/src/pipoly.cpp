#include "qturan/pipoly.hpp"

#include <cctype>
#include <sstream>

namespace qturan {

namespace {

std::string coefficient_text(const ExactRational& c) { return c.get_str(); }

}  // namespace

// ---------------------------------------------------------------------------
// PiPoly

PiPoly::PiPoly(long c) { add_term(0, ExactRational(c)); }

PiPoly::PiPoly(const ExactRational& c) { add_term(0, c); }

PiPoly PiPoly::monomial(const ExactRational& c, long pi_power) {
  if (pi_power < 0) throw ArgumentError("PiPoly powers of pi must be non-negative");
  PiPoly p;
  p.add_term(pi_power, c);
  return p;
}

void PiPoly::add_term(long power, const ExactRational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(power, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ExactRational PiPoly::coefficient(long pi_power) const {
  const auto it = terms_.find(pi_power);
  return it == terms_.end() ? ExactRational(0) : it->second;
}

bool PiPoly::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

PiPoly& PiPoly::operator+=(const PiPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

PiPoly& PiPoly::operator-=(const PiPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

PiPoly& PiPoly::operator*=(const PiPoly& o) {
  *this = *this * o;
  return *this;
}

PiPoly operator+(PiPoly a, const PiPoly& b) { return a += b; }
PiPoly operator-(PiPoly a, const PiPoly& b) { return a -= b; }
PiPoly operator-(const PiPoly& a) { return PiPoly() - a; }

PiPoly operator*(const PiPoly& a, const PiPoly& b) {
  PiPoly out;
  for (const auto& [i, x] : a.terms()) {
    for (const auto& [j, y] : b.terms()) out += PiPoly::monomial(x * y, i + j);
  }
  return out;
}

PiPoly pow(const PiPoly& a, unsigned k) {
  PiPoly out(1);
  for (unsigned i = 0; i < k; ++i) out *= a;
  return out;
}

Enclosure PiPoly::evaluate(Precision bits) const {
  const Enclosure pi = pi_enclosure(bits);
  Enclosure acc = Enclosure::from_long(0, bits);
  for (const auto& [k, c] : terms_) acc = acc + pow(pi, k) * c;
  return acc;
}

std::string PiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    const bool negative = c < 0;
    const ExactRational mag = abs(c);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (k == 0) {
      out += coefficient_text(mag);
      continue;
    }
    if (mag != 1) out += coefficient_text(mag) + "*";
    out += k == 1 ? "pi" : "pi^" + std::to_string(k);
  }
  return out;
}

PiPoly PiPoly::parse(const std::string& text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  if (s.empty()) throw ArgumentError("empty PiPoly text");
  PiPoly out;
  std::size_t i = 0;
  auto fail = [&]() { throw ArgumentError("malformed PiPoly text: " + text); };
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      fail();
    }
    ExactRational coeff = 1;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      std::size_t j = i;
      while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '/')) ++j;
      if (coeff.set_str(s.substr(i, j - i), 10) != 0) fail();
      coeff.canonicalize();
      i = j;
      if (i < s.size() && s[i] == '*') {
        ++i;
        if (s.compare(i, 2, "pi") != 0) fail();
      }
    }
    long power = 0;
    if (s.compare(i, 2, "pi") == 0) {
      i += 2;
      power = 1;
      if (i < s.size() && s[i] == '^') {
        std::size_t j = ++i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j == i) fail();
        power = std::stol(s.substr(i, j - i));
        i = j;
      }
    } else if (coeff == 1 && (i == 0 || !std::isdigit(static_cast<unsigned char>(s[i - 1])))) {
      fail();
    }
    out += monomial(sign * coeff, power);
  }
  return out;
}

// ---------------------------------------------------------------------------
// NuLaurent

NuLaurent::NuLaurent(const PiPoly& c) { add_term(0, c); }

NuLaurent NuLaurent::monomial(const PiPoly& c, long nu_power) {
  NuLaurent p;
  p.add_term(nu_power, c);
  return p;
}

void NuLaurent::add_term(long power, const PiPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(power, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PiPoly NuLaurent::coefficient(long nu_power) const {
  const auto it = terms_.find(nu_power);
  return it == terms_.end() ? PiPoly() : it->second;
}

long NuLaurent::degree() const {
  if (terms_.empty()) throw ArgumentError("degree of the zero Laurent polynomial");
  return terms_.rbegin()->first;
}

long NuLaurent::min_degree() const {
  if (terms_.empty()) throw ArgumentError("degree of the zero Laurent polynomial");
  return terms_.begin()->first;
}

NuLaurent& NuLaurent::operator+=(const NuLaurent& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

NuLaurent& NuLaurent::operator-=(const NuLaurent& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

NuLaurent& NuLaurent::operator*=(const NuLaurent& o) {
  *this = *this * o;
  return *this;
}

NuLaurent NuLaurent::shifted(long k) const {
  NuLaurent out;
  for (const auto& [j, c] : terms_) out.terms_.emplace(j + k, c);
  return out;
}

NuLaurent operator+(NuLaurent a, const NuLaurent& b) { return a += b; }
NuLaurent operator-(NuLaurent a, const NuLaurent& b) { return a -= b; }
NuLaurent operator-(const NuLaurent& a) { return NuLaurent() - a; }

NuLaurent operator*(const NuLaurent& a, const NuLaurent& b) {
  NuLaurent out;
  for (const auto& [i, x] : a.terms()) {
    for (const auto& [j, y] : b.terms()) out += NuLaurent::monomial(x * y, i + j);
  }
  return out;
}

NuLaurent pow(const NuLaurent& a, unsigned k) {
  NuLaurent out(1);
  for (unsigned i = 0; i < k; ++i) out *= a;
  return out;
}

Enclosure NuLaurent::evaluate(const Enclosure& nu_value) const {
  const Precision bits = nu_value.precision();
  Enclosure acc = Enclosure::from_long(0, bits);
  for (const auto& [k, c] : terms_) acc = acc + c.evaluate(bits) * pow(nu_value, k);
  return acc;
}

std::string NuLaurent::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) out << " + ";
    first = false;
    out << "(" << it->second.to_string() << ")";
    if (it->first != 0) out << "*nu^" << it->first;
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// ShiftPoly

ShiftPoly::ShiftPoly(int side) : side_(side) {
  if (side != -1 && side != 1) throw ArgumentError("shift side must be -1 or +1");
}

ShiftPoly ShiftPoly::x_power(int side, long power, const NuLaurent& coeff) {
  if (power < 0) throw ArgumentError("ShiftPoly powers must be non-negative");
  ShiftPoly p(side);
  p.add_term(power, coeff);
  return p;
}

void ShiftPoly::add_term(long power, const NuLaurent& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(power, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ShiftPoly& ShiftPoly::operator+=(const ShiftPoly& o) {
  if (o.side_ != side_) throw ArgumentError("cannot mix nu(n-1) and nu(n+1) polynomials");
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

ShiftPoly& ShiftPoly::operator*=(const ShiftPoly& o) {
  if (o.side_ != side_) throw ArgumentError("cannot mix nu(n-1) and nu(n+1) polynomials");
  ShiftPoly out(side_);
  for (const auto& [i, x] : terms_) {
    for (const auto& [j, y] : o.terms_) out.add_term(i + j, x * y);
  }
  *this = std::move(out);
  return *this;
}

ShiftPoly operator+(ShiftPoly a, const ShiftPoly& b) { return a += b; }
ShiftPoly operator*(ShiftPoly a, const ShiftPoly& b) { return a *= b; }

NuLaurent shifted_nu_squared(int side) {
  if (side != -1 && side != 1) throw ArgumentError("shift side must be -1 or +1");
  return NuLaurent::nu(2) + NuLaurent(PiPoly::monomial(make_rational(side, 3), 2));
}

NuLaurent ShiftPoly::substitute() const {
  const NuLaurent square = shifted_nu_squared(side_);
  NuLaurent out;
  for (const auto& [k, c] : terms_) {
    if (k % 2 != 0) {
      throw OddPowerError("odd power " + std::to_string(k) + " of a shifted nu");
    }
    out += c * pow(square, static_cast<unsigned>(k / 2));
  }
  return out;
}

// ---------------------------------------------------------------------------
// QuadSqrt2

std::string QuadSqrt2::to_string() const {
  if (b == 0) return a.get_str();
  const std::string root = b.get_str() + "*sqrt2";
  if (a == 0) return root;
  return a.get_str() + (b < 0 ? " - " : " + ") + ExactRational(abs(b)).get_str() + "*sqrt2";
}

QuadSqrt2 operator+(const QuadSqrt2& x, const QuadSqrt2& y) { return {x.a + y.a, x.b + y.b}; }

QuadSqrt2 operator*(const QuadSqrt2& x, const QuadSqrt2& y) {
  return {x.a * y.a + 2 * x.b * y.b, x.a * y.b + x.b * y.a};
}

QuadSqrt2 operator*(const ExactRational& c, const QuadSqrt2& y) { return {c * y.a, c * y.b}; }

}  // namespace qturan
