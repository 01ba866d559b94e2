#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace edf {

// Unbounded natural number. Level counts and sequence codes overflow 64 bits
// almost immediately, so everything value-like uses Nat; positions and level
// indices stay machine-sized.
using Nat = boost::multiprecision::cpp_int;

using FinSeq = std::vector<Nat>;     // finite sequence of naturals
using Bits = std::vector<uint8_t>;   // finite 0/1 sequence

// Natural number extended with a single point at infinity. Ordered so that
// inf compares greater than every finite value; finite arithmetic is exact,
// anything involving inf is inf (there is no subtraction).
class ExtNat {
 public:
  ExtNat() : inf_(false), v_(0) {}
  ExtNat(Nat v) : inf_(false), v_(std::move(v)) {}
  ExtNat(uint64_t v) : inf_(false), v_(v) {}
  ExtNat(int v) : inf_(false), v_(v) {
    if (v < 0) throw std::invalid_argument("ExtNat: negative");
  }

  static ExtNat infinity() {
    ExtNat e;
    e.inf_ = true;
    return e;
  }

  bool is_inf() const { return inf_; }
  bool is_finite() const { return !inf_; }

  const Nat& value() const {
    if (inf_) throw std::logic_error("ExtNat: value() of infinity");
    return v_;
  }

  friend bool operator==(const ExtNat& a, const ExtNat& b) {
    return a.inf_ == b.inf_ && (a.inf_ || a.v_ == b.v_);
  }
  friend bool operator!=(const ExtNat& a, const ExtNat& b) { return !(a == b); }
  friend bool operator<(const ExtNat& a, const ExtNat& b) {
    if (a.inf_) return false;
    if (b.inf_) return true;
    return a.v_ < b.v_;
  }
  friend bool operator<=(const ExtNat& a, const ExtNat& b) { return a < b || a == b; }
  friend bool operator>(const ExtNat& a, const ExtNat& b) { return b < a; }
  friend bool operator>=(const ExtNat& a, const ExtNat& b) { return b <= a; }

  friend ExtNat operator+(const ExtNat& a, const ExtNat& b) {
    if (a.inf_ || b.inf_) return infinity();
    return ExtNat(a.v_ + b.v_);
  }
  friend ExtNat operator*(const ExtNat& a, const ExtNat& b) {
    if (a.inf_ || b.inf_) return infinity();  // values here are never 0*inf-relevant: counts >= 1
    return ExtNat(a.v_ * b.v_);
  }

  std::string str() const { return inf_ ? "inf" : v_.str(); }

 private:
  bool inf_;
  Nat v_;
};

// Cantor pairing: a bijection NxN -> N, pi(x,y) = (x+y)(x+y+1)/2 + y.
inline Nat pair(const Nat& x, const Nat& y) {
  Nat s = x + y;
  return s * (s + 1) / 2 + y;
}

inline void unpair(const Nat& z, Nat& x, Nat& y) {
  // w = floor((sqrt(8z+1)-1)/2) is the diagonal index.
  Nat disc = 8 * z + 1;
  Nat w = (boost::multiprecision::sqrt(disc) - 1) / 2;
  Nat t = w * (w + 1) / 2;
  y = z - t;
  x = w - y;
}

inline Nat pow2(uint64_t e) {
  Nat r = 1;
  return r << e;
}

}  // namespace edf
