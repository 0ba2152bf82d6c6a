#pragma once

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>

namespace ck {

/// Element a + b*sqrt(2) of Q(sqrt 2) with exact rational parts.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(const mpq_class& a) : a_(a) { a_.canonicalize(); }  // NOLINT
  Scalar(mpq_class a, mpq_class b) : a_(std::move(a)), b_(std::move(b)) {
    a_.canonicalize();
    b_.canonicalize();
  }

  static Scalar sqrt2() { return Scalar(mpq_class(0), mpq_class(1)); }
  static Scalar ratio(long p, long q) { return Scalar(mpq_class(p, q)); }

  const mpq_class& a() const { return a_; }
  const mpq_class& b() const { return b_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }

  Scalar operator-() const { return Scalar(-a_, -b_); }
  Scalar& operator+=(const Scalar& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
  }
  Scalar& operator*=(const Scalar& o) {
    if (is_rational() && o.is_rational()) {
      a_ *= o.a_;
      return *this;
    }
    mpq_class na = a_ * o.a_ + 2 * b_ * o.b_;
    mpq_class nb = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(na);
    b_ = std::move(nb);
    return *this;
  }
  Scalar inverse() const {
    if (is_zero()) throw std::domain_error("division by zero scalar");
    if (is_rational()) return Scalar(mpq_class(1) / a_);
    mpq_class n = a_ * a_ - 2 * b_ * b_;
    return Scalar(a_ / n, -b_ / n);
  }
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }
  friend bool operator==(const Scalar& x, const Scalar& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

  /// Sign of the real number a + b*sqrt(2).
  int sign() const {
    int sa = sgn(a_), sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // compare a^2 with 2 b^2
    int c = cmp(mpq_class(a_ * a_), mpq_class(2 * b_ * b_));
    return c > 0 ? sa : (c < 0 ? sb : 0);
  }

  Scalar pow(unsigned e) const {
    Scalar r(1), base = *this;
    while (e) {
      if (e & 1u) r *= base;
      base *= base;
      e >>= 1u;
    }
    return r;
  }

  std::string str() const {
    if (is_rational()) return a_.get_str();
    std::string s;
    if (sgn(a_) != 0) s = a_.get_str() + (sgn(b_) > 0 ? "+" : "");
    return s + b_.get_str() + "*sqrt2";
  }
  friend std::ostream& operator<<(std::ostream& os, const Scalar& x) { return os << x.str(); }

 private:
  mpq_class a_{0};
  mpq_class b_{0};
};

inline mpq_class parse_rational(const std::string& s) {
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  q.canonicalize();
  return q;
}

}  // namespace ck
