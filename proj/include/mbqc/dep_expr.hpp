#pragma once

#include <set>
#include <string>
#include <vector>

namespace mbqc {

// Parity (mod-2 sum) of a set of measurement result bits.  The bit produced
// by measuring qubit v is written s[v]; we key entries by the qubit label.
// Canonical form: sorted, duplicate-free (duplicates cancel mod 2); the empty
// set is the constant 0.
struct DepExpr {
  std::set<std::string> bits;

  DepExpr() = default;
  explicit DepExpr(std::set<std::string> b) : bits(std::move(b)) {}
  DepExpr(std::initializer_list<std::string> b) : bits(b) {}

  static DepExpr single(const std::string& v) { return DepExpr({v}); }

  bool empty() const { return bits.empty(); }
  bool contains(const std::string& v) const { return bits.count(v) > 0; }

  // mod-2 sum: symmetric difference of the bit sets
  DepExpr operator^(const DepExpr& o) const {
    DepExpr r = *this;
    r ^= o;
    return r;
  }
  DepExpr& operator^=(const DepExpr& o) {
    for (const auto& b : o.bits) {
      auto it = bits.find(b);
      if (it != bits.end())
        bits.erase(it);
      else
        bits.insert(b);
    }
    return *this;
  }

  bool operator==(const DepExpr& o) const { return bits == o.bits; }
  bool operator!=(const DepExpr& o) const { return bits != o.bits; }

  std::string str() const {
    if (bits.empty()) return "0";
    std::string s;
    for (const auto& b : bits) {
      if (!s.empty()) s += "+";
      s += "s[" + b + "]";
    }
    return s;
  }
};

}  // namespace mbqc
