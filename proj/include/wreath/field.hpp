#ifndef WREATH_FIELD_HPP_
#define WREATH_FIELD_HPP_

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "wreath/error.hpp"

namespace wreath {

// Exact scalars.  Two field models are provided:
//   Rational -- arbitrary-precision rationals (the default everywhere),
//   Fp       -- residues modulo a runtime-configured prime.
// Everything that computes with scalars is templated on the field type.

// expression templates off: arithmetic returns plain values, which keeps
// generic code over the field type straightforward
using BigInt =
    boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                  boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

inline BigInt numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

inline std::string to_string(const Rational& r) { return r.str(); }

// Residue field with the modulus carried by each value.  The modulus is a
// runtime parameter (the CLI accepts any prime), so it cannot be a template
// argument; mixing moduli is a programming error and is checked.
class Fp {
 public:
  Fp() : v_(0), p_(0) {}
  Fp(std::int64_t value, std::uint32_t p) : p_(p) {
    check_prime(p);
    std::int64_t m = value % static_cast<std::int64_t>(p);
    if (m < 0) m += p;
    v_ = static_cast<std::uint32_t>(m);
  }

  static Fp from_rational(const Rational& r, std::uint32_t p) {
    BigInt num = numerator(r) % p;
    BigInt den = denominator(r) % p;
    if (num < 0) num += p;
    if (den < 0) den += p;
    Fp result(static_cast<std::int64_t>(num.convert_to<std::int64_t>()), p);
    Fp d(static_cast<std::int64_t>(den.convert_to<std::int64_t>()), p);
    return result / d;
  }

  std::uint32_t modulus() const { return p_; }
  std::uint32_t value() const { return v_; }

  bool is_zero() const { return v_ == 0; }

  friend Fp operator+(const Fp& a, const Fp& b) {
    a.match(b);
    std::uint64_t s = static_cast<std::uint64_t>(a.v_) + b.v_;
    if (s >= a.p_) s -= a.p_;
    return Fp::raw(static_cast<std::uint32_t>(s), a.p_);
  }
  friend Fp operator-(const Fp& a, const Fp& b) {
    a.match(b);
    std::int64_t s = static_cast<std::int64_t>(a.v_) - b.v_;
    if (s < 0) s += a.p_;
    return Fp::raw(static_cast<std::uint32_t>(s), a.p_);
  }
  friend Fp operator*(const Fp& a, const Fp& b) {
    a.match(b);
    std::uint64_t s = static_cast<std::uint64_t>(a.v_) * b.v_ % a.p_;
    return Fp::raw(static_cast<std::uint32_t>(s), a.p_);
  }
  friend Fp operator/(const Fp& a, const Fp& b) {
    a.match(b);
    require(b.v_ != 0, "Fp: division by zero");
    return a * b.inverse();
  }
  Fp operator-() const { return raw(v_ == 0 ? 0 : p_ - v_, p_); }
  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }
  Fp& operator/=(const Fp& o) { return *this = *this / o; }
  friend bool operator==(const Fp& a, const Fp& b) {
    a.match(b);
    return a.v_ == b.v_;
  }
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }
  // canonical order used only for deterministic sorting of containers
  friend bool operator<(const Fp& a, const Fp& b) {
    a.match(b);
    return a.v_ < b.v_;
  }

  Fp inverse() const {
    require(v_ != 0, "Fp: inverse of zero");
    // extended Euclid
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p_, new_r = v_;
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      std::int64_t tmp = t - q * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - q * new_r;
      r = new_r;
      new_r = tmp;
    }
    if (t < 0) t += p_;
    return raw(static_cast<std::uint32_t>(t), p_);
  }

  std::string str() const { return std::to_string(v_); }

  static void check_prime(std::uint32_t p) {
    require(p >= 2, "Fp: modulus must be a prime >= 2");
    for (std::uint64_t d = 2; d * d <= p; ++d)
      require(p % d != 0, "Fp: modulus " + std::to_string(p) + " is not prime");
  }

 private:
  static Fp raw(std::uint32_t v, std::uint32_t p) {
    Fp x;
    x.v_ = v;
    x.p_ = p;
    return x;
  }
  void match(const Fp& o) const {
    require(p_ == o.p_ && p_ != 0, "Fp: mixed or unset moduli");
  }
  std::uint32_t v_;
  std::uint32_t p_;
};

// Field trait helpers used by generic code.  A "maker" carries whatever
// runtime data is needed to build constants (the modulus for Fp).
template <class F>
struct FieldOps;

template <>
struct FieldOps<Rational> {
  struct Maker {
    Rational operator()(std::int64_t v) const { return Rational(v); }
  };
  static bool is_zero(const Rational& x) { return x == 0; }
  static std::string str(const Rational& x) { return x.str(); }
};

template <>
struct FieldOps<Fp> {
  struct Maker {
    std::uint32_t p = 0;
    Fp operator()(std::int64_t v) const { return Fp(v, p); }
  };
  static bool is_zero(const Fp& x) { return x.is_zero(); }
  static std::string str(const Fp& x) { return x.str(); }
};

template <class F>
bool is_zero(const F& x) {
  return FieldOps<F>::is_zero(x);
}

}  // namespace wreath

#endif  // WREATH_FIELD_HPP_
