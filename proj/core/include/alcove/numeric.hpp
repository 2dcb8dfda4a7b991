// Exact integer and rational arithmetic.  Int keeps values in a 64-bit word
// until an operation would overflow, then promotes to GMP and demotes again
// as soon as the value fits; callers never see the switch.  Rat is a reduced
// fraction over Int with positive denominator.
#ifndef ALCOVE_NUMERIC_HPP
#define ALCOVE_NUMERIC_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "alcove/errors.hpp"

namespace alcove {

class Int {
public:
  Int() : v_(0LL) {}
  Int(int x) : v_(static_cast<long long>(x)) {}
  Int(long x) : v_(static_cast<long long>(x)) {}
  Int(long long x) : v_(x) {}
  explicit Int(const mpz_class& z) : v_(z) { demote(); }
  explicit Int(const std::string& decimal);

  bool small() const { return v_.index() == 0; }
  long long as_ll() const; // errc::internal if the value does not fit
  mpz_class as_mpz() const;

  Int operator-() const;
  Int& operator+=(const Int& o) { *this = *this + o; return *this; }
  Int& operator-=(const Int& o) { *this = *this - o; return *this; }
  Int& operator*=(const Int& o) { *this = *this * o; return *this; }

  friend Int operator+(const Int& a, const Int& b);
  friend Int operator-(const Int& a, const Int& b);
  friend Int operator*(const Int& a, const Int& b);
  friend bool operator==(const Int& a, const Int& b) { return cmp(a, b) == 0; }
  friend bool operator!=(const Int& a, const Int& b) { return cmp(a, b) != 0; }
  friend bool operator<(const Int& a, const Int& b) { return cmp(a, b) < 0; }
  friend bool operator<=(const Int& a, const Int& b) { return cmp(a, b) <= 0; }
  friend bool operator>(const Int& a, const Int& b) { return cmp(a, b) > 0; }
  friend bool operator>=(const Int& a, const Int& b) { return cmp(a, b) >= 0; }

  static int cmp(const Int& a, const Int& b);

  int sign() const;
  bool is_zero() const { return sign() == 0; }
  std::string str() const;

private:
  std::variant<long long, mpz_class> v_;
  void demote();
  friend Int int_from_mpz(mpz_class z);
};

Int abs(const Int& a);
Int gcd(const Int& a, const Int& b);      // nonnegative
Int floor_div(const Int& a, const Int& b); // b != 0, rounds toward -inf
Int floor_mod(const Int& a, const Int& b); // a - b*floor_div(a,b), in [0,|b|)
Int div_exact(const Int& a, const Int& b); // errc::not_divisible if b does not divide a

// Reduced fraction, den > 0.
class Rat {
public:
  Rat() : num_(0), den_(1) {}
  Rat(Int n) : num_(std::move(n)), den_(1) {}
  Rat(int n) : num_(n), den_(1) {}
  Rat(Int n, Int d); // normalizes; errc::internal if d == 0

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }
  bool is_integer() const { return den_ == Int(1); }
  bool is_zero() const { return num_.is_zero(); }
  int sign() const { return num_.sign(); }

  Rat operator-() const { return Rat(-num_, den_); }
  friend Rat operator+(const Rat& a, const Rat& b);
  friend Rat operator-(const Rat& a, const Rat& b);
  friend Rat operator*(const Rat& a, const Rat& b);
  friend Rat operator/(const Rat& a, const Rat& b); // errc::internal on /0
  Rat& operator+=(const Rat& o) { *this = *this + o; return *this; }
  Rat& operator-=(const Rat& o) { *this = *this - o; return *this; }
  Rat& operator*=(const Rat& o) { *this = *this * o; return *this; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b);

  std::string str() const; // "n" when integral, else "n/d"

private:
  Int num_, den_;
};

// Lexicographic comparison of integer vectors (shared by Weight ordering).
int lex_cmp(const std::vector<Int>& a, const std::vector<Int>& b);

} // namespace alcove

#endif
