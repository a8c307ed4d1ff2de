#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "coseg/errors.hpp"

namespace coseg {

// Exact rational number, always kept in lowest terms with a positive
// denominator. Thin value wrapper over GMP's mpq_class.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(int value) : q_(value) {}   // NOLINT(google-explicit-constructor)
  Rational(long num, long den) {
    if (den == 0) throw InvalidArgument("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  // Parses "p", "p/q" or "-p/q" (decimal). Non-reduced input is reduced.
  static Rational parse(std::string_view text) {
    if (text.empty()) throw InvalidArgument("empty rational");
    auto valid_int = [](std::string_view s) {
      if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
      if (s.empty()) return false;
      for (char c : s)
        if (c < '0' || c > '9') return false;
      return true;
    };
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
    if (!valid_int(num) || (slash != std::string_view::npos && (!valid_int(den) || den.front() == '-' || den.front() == '+')))
      throw InvalidArgument("malformed rational '" + std::string(text) + "'");
    mpq_class q;
    q.get_num() = mpz_class(std::string(num.front() == '+' ? num.substr(1) : num), 10);
    if (slash != std::string_view::npos) {
      q.get_den() = mpz_class(std::string(den), 10);
      if (q.get_den() == 0) throw InvalidArgument("rational with zero denominator");
    } else {
      q.get_den() = 1;
    }
    return Rational(std::move(q));
  }

  // "num/den", with "/den" omitted when den == 1.
  std::string str() const {
    std::string out = q_.get_num().get_str(10);
    if (q_.get_den() != 1) {
      out += '/';
      out += q_.get_den().get_str(10);
    }
    return out;
  }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sgn(q_) == 0; }
  double to_double() const { return q_.get_d(); }
  const mpq_class& raw() const { return q_; }

  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }

  // Larger of the numerator and denominator bit lengths.
  std::size_t bit_length() const {
    auto bits = [](const mpz_class& z) -> std::size_t {
      return sgn(z) == 0 ? 0 : mpz_sizeinbase(z.get_mpz_t(), 2);
    };
    auto a = bits(q_.get_num()), b = bits(q_.get_den());
    return a > b ? a : b;
  }

  Rational abs() const { return sign() < 0 ? -*this : *this; }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw InvalidArgument("division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

 private:
  mpq_class q_{0};
};

inline Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

// 2^exponent (exponent may be negative).
inline Rational pow2(long exponent) {
  mpz_class one = 1;
  mpz_class p;
  mpz_mul_2exp(p.get_mpz_t(), one.get_mpz_t(), static_cast<mp_bitcnt_t>(exponent < 0 ? -exponent : exponent));
  mpq_class q = exponent < 0 ? mpq_class(one, p) : mpq_class(p, one);
  return Rational(std::move(q));
}

// Largest power of two that is <= x (x > 0).
inline Rational floor_pow2(const Rational& x) {
  if (x.sign() <= 0) throw InvalidArgument("floor_pow2 of non-positive value");
  long e = static_cast<long>(mpz_sizeinbase(x.num().get_mpz_t(), 2)) -
           static_cast<long>(mpz_sizeinbase(x.den().get_mpz_t(), 2));
  Rational p = pow2(e);
  while (p > x) p = p / Rational(2);
  while (p * Rational(2) <= x) p = p * Rational(2);
  return p;
}

// Nearest multiple of 2^-k to x, where 2^-k is the largest power of two <= tol.
// The result differs from x by at most tol / 2.
inline Rational snap_dyadic(const Rational& x, const Rational& tol) {
  Rational step = floor_pow2(tol);
  mpq_class scaled = x.raw() / step.raw() + mpq_class(1, 2);
  mpz_class k;
  mpz_fdiv_q(k.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  return Rational(mpq_class(k)) * step;
}

}  // namespace coseg
