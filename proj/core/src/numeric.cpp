#include "alcove/numeric.hpp"

#include <climits>
#include <numeric>

namespace alcove {

namespace {

mpz_class mpz_of_ll(long long x) { return mpz_class(static_cast<long>(x)); }

} // namespace

Int int_from_mpz(mpz_class z) {
  Int r;
  r.v_ = std::move(z);
  r.demote();
  return r;
}

Int::Int(const std::string& decimal) {
  mpz_class z;
  if (z.set_str(decimal, 10) != 0)
    fail(errc::internal, "bad integer literal '" + decimal + "'");
  v_ = z;
  demote();
}

void Int::demote() {
  if (v_.index() == 1) {
    const mpz_class& z = std::get<1>(v_);
    if (z.fits_slong_p()) v_ = static_cast<long long>(z.get_si());
  }
}

long long Int::as_ll() const {
  if (!small()) fail(errc::internal, "integer too large for 64-bit use: " + str());
  return std::get<0>(v_);
}

mpz_class Int::as_mpz() const {
  return small() ? mpz_of_ll(std::get<0>(v_)) : std::get<1>(v_);
}

Int Int::operator-() const {
  if (small()) {
    long long x = std::get<0>(v_);
    if (x != LLONG_MIN) return Int(-x);
  }
  return int_from_mpz(-as_mpz());
}

Int operator+(const Int& a, const Int& b) {
  if (a.small() && b.small()) {
    long long r;
    if (!__builtin_add_overflow(std::get<0>(a.v_), std::get<0>(b.v_), &r)) return Int(r);
  }
  return int_from_mpz(a.as_mpz() + b.as_mpz());
}

Int operator-(const Int& a, const Int& b) {
  if (a.small() && b.small()) {
    long long r;
    if (!__builtin_sub_overflow(std::get<0>(a.v_), std::get<0>(b.v_), &r)) return Int(r);
  }
  return int_from_mpz(a.as_mpz() - b.as_mpz());
}

Int operator*(const Int& a, const Int& b) {
  if (a.small() && b.small()) {
    long long r;
    if (!__builtin_mul_overflow(std::get<0>(a.v_), std::get<0>(b.v_), &r)) return Int(r);
  }
  return int_from_mpz(a.as_mpz() * b.as_mpz());
}

int Int::cmp(const Int& a, const Int& b) {
  if (a.small() && b.small()) {
    long long x = std::get<0>(a.v_), y = std::get<0>(b.v_);
    return x < y ? -1 : x > y ? 1 : 0;
  }
  int c = ::cmp(a.as_mpz(), b.as_mpz());
  return c < 0 ? -1 : c > 0 ? 1 : 0;
}

int Int::sign() const {
  if (small()) {
    long long x = std::get<0>(v_);
    return x < 0 ? -1 : x > 0 ? 1 : 0;
  }
  return sgn(std::get<1>(v_));
}

std::string Int::str() const {
  return small() ? std::to_string(std::get<0>(v_)) : std::get<1>(v_).get_str();
}

Int abs(const Int& a) { return a.sign() < 0 ? -a : a; }

Int gcd(const Int& a, const Int& b) {
  if (a.small() && b.small()) {
    long long x = a.as_ll(), y = b.as_ll();
    if (x != LLONG_MIN && y != LLONG_MIN)
      return Int(std::gcd(x < 0 ? -x : x, y < 0 ? -y : y));
  }
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.as_mpz().get_mpz_t(), b.as_mpz().get_mpz_t());
  return int_from_mpz(g);
}

Int floor_div(const Int& a, const Int& b) {
  if (b.is_zero()) fail(errc::internal, "floor_div by zero");
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.as_mpz().get_mpz_t(), b.as_mpz().get_mpz_t());
  return int_from_mpz(q);
}

Int floor_mod(const Int& a, const Int& b) {
  if (b.is_zero()) fail(errc::internal, "floor_mod by zero");
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), a.as_mpz().get_mpz_t(), b.as_mpz().get_mpz_t());
  return int_from_mpz(r);
}

Int div_exact(const Int& a, const Int& b) {
  if (b.is_zero()) fail(errc::not_divisible, "division by zero");
  mpz_class q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.as_mpz().get_mpz_t(), b.as_mpz().get_mpz_t());
  if (r != 0) fail(errc::not_divisible, b.str() + " does not divide " + a.str());
  return int_from_mpz(q);
}

Rat::Rat(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) {
  if (den_.is_zero()) fail(errc::internal, "rational with zero denominator");
  if (den_.sign() < 0) { num_ = -num_; den_ = -den_; }
  Int g = gcd(num_, den_);
  if (g > Int(1)) { num_ = div_exact(num_, g); den_ = div_exact(den_, g); }
}

Rat operator+(const Rat& a, const Rat& b) {
  return Rat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
Rat operator-(const Rat& a, const Rat& b) {
  return Rat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}
Rat operator*(const Rat& a, const Rat& b) {
  return Rat(a.num_ * b.num_, a.den_ * b.den_);
}
Rat operator/(const Rat& a, const Rat& b) {
  if (b.is_zero()) fail(errc::internal, "rational division by zero");
  return Rat(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator<(const Rat& a, const Rat& b) {
  return a.num() * b.den() < b.num() * a.den();
}

std::string Rat::str() const {
  return is_integer() ? num_.str() : num_.str() + "/" + den_.str();
}

int lex_cmp(const std::vector<Int>& a, const std::vector<Int>& b) {
  size_t n = std::min(a.size(), b.size());
  for (size_t i = 0; i < n; i++) {
    int c = Int::cmp(a[i], b[i]);
    if (c != 0) return c;
  }
  return a.size() < b.size() ? -1 : a.size() > b.size() ? 1 : 0;
}

const char* errc_name(errc c) {
  switch (c) {
    case errc::unknown_type: return "UnknownType";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::not_a_positive_root: return "NotAPositiveRoot";
    case errc::p_too_small: return "PTooSmall";
    case errc::wall_point: return "WallPoint";
    case errc::fixed_point: return "FixedPoint";
    case errc::not_in_ci: return "NotInCI";
    case errc::no_such_weight: return "NoSuchWeight";
    case errc::wrong_block: return "WrongBlock";
    case errc::wrong_basis: return "WrongBasis";
    case errc::negative_coefficient: return "NegativeCoefficient";
    case errc::not_dominant: return "NotDominant";
    case errc::not_regular: return "NotRegular";
    case errc::check_failed: return "CheckFailed";
    case errc::peel_failed: return "PeelFailed";
    case errc::missing_entry: return "MissingEntry";
    case errc::not_divisible: return "NotDivisible";
    case errc::bound_exceeded: return "BoundExceeded";
    case errc::internal: return "InternalError";
  }
  return "InternalError";
}

} // namespace alcove
