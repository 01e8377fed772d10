#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>

namespace mbqc {

// An exact rational multiple of pi, normalized into the half-open interval
// (-pi, pi].  Pauli-axis tests must be exact, so no floats are stored; the
// simulator converts with to_double() at the last moment.
struct Angle {
  long long num = 0;
  long long den = 1;  // > 0, gcd(|num|, den) = 1, num/den in (-1, 1]

  Angle() = default;
  Angle(long long n, long long d) : num(n), den(d) { normalize(); }

  static Angle zero() { return Angle(0, 1); }
  static Angle pi() { return Angle(1, 1); }
  static Angle half_pi() { return Angle(1, 2); }

  void normalize() {
    if (den == 0) { num = 0; den = 1; return; }
    if (den < 0) { num = -num; den = -den; }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
    // reduce mod 2 (a full turn) into (-1, 1]
    long long two = 2 * den;
    num %= two;
    if (num > den) num -= two;
    if (num <= -den) num += two;
  }

  bool is_zero() const { return num == 0; }
  bool is_pi() const { return num == den; }
  // value in {0, pi}: angles invariant under sign change
  bool is_multiple_of_pi() const { return is_zero() || is_pi(); }
  // value in {0, +-pi/2, pi}
  bool is_pauli_axis() const { return is_multiple_of_pi() || den == 2; }
  // odd multiple of pi/2
  bool is_odd_half_pi() const { return den == 2; }

  double to_double() const {
    return M_PI * static_cast<double>(num) / static_cast<double>(den);
  }

  Angle operator+(const Angle& o) const {
    return Angle(num * o.den + o.num * den, den * o.den);
  }
  Angle operator-(const Angle& o) const {
    return Angle(num * o.den - o.num * den, den * o.den);
  }
  Angle operator-() const { return Angle(-num, den); }

  bool operator==(const Angle& o) const { return num == o.num && den == o.den; }
  bool operator!=(const Angle& o) const { return !(*this == o); }
  bool operator<(const Angle& o) const {
    if (num * o.den != o.num * den) return num * o.den < o.num * den;
    return false;
  }

  std::string str() const {
    if (num == 0) return "0";
    std::string s = (num == 1 ? "" : num == -1 ? "-" : std::to_string(num) + "*");
    s += "pi";
    if (den != 1) s += "/" + std::to_string(den);
    return s;
  }
};

}  // namespace mbqc
