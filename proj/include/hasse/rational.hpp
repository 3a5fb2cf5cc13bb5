#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hasse {

// Exact rational on int64 with normalized sign and gcd-reduced terms.
// Comparisons cross-multiply in __int128, so any two representable values
// compare exactly; chain labels rely on exact strict comparisons.
class rational {
 public:
  rational() : num_(0), den_(1) {}
  rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

  long long num() const { return num_; }
  long long den() const { return den_; }

  friend rational operator+(const rational& a, const rational& b) {
    return rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend rational operator-(const rational& a, const rational& b) {
    return rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend rational operator*(const rational& a, const rational& b) {
    return rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend rational operator/(const rational& a, const rational& b) {
    return rational(a.num_ * b.den_, a.den_ * b.num_);
  }
  rational operator-() const { return rational(-num_, den_); }

  friend bool operator==(const rational& a, const rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const rational& a, const rational& b) {
    return !(a == b);
  }
  friend bool operator<(const rational& a, const rational& b) {
    return static_cast<__int128>(a.num_) * b.den_ <
           static_cast<__int128>(b.num_) * a.den_;
  }
  friend bool operator>(const rational& a, const rational& b) { return b < a; }
  friend bool operator<=(const rational& a, const rational& b) {
    return !(b < a);
  }
  friend bool operator>=(const rational& a, const rational& b) {
    return !(a < b);
  }

  // Midpoint stays exact; used for label grids between adjacent values.
  static rational mid(const rational& a, const rational& b) {
    return (a + b) / rational(2);
  }

  // Accepts "p" or "p/q"; q must be nonzero.
  static rational parse(const std::string& s) {
    auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return rational(std::stoll(s));
      long long p = std::stoll(s.substr(0, slash));
      long long q = std::stoll(s.substr(slash + 1));
      return rational(p, q);
    } catch (const std::logic_error&) {
      throw std::invalid_argument("bad rational literal: " + s);
    }
  }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  long long num_, den_;

  void normalize() {
    if (den_ == 0) throw std::invalid_argument("rational with zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }
};

}  // namespace hasse
