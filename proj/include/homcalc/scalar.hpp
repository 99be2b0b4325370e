#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>

#include "homcalc/errors.hpp"

namespace homcalc {

/// Exact rational number, always in lowest terms with positive denominator.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long long num, long long den) {
    if (den == 0) throw ValidationError("rational with zero denominator");
    v_ = mpq(num);
    v_ /= mpq(den);
  }

  static Rational parse(std::string_view s);

  Rational operator-() const { return Rational(-v_); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw InternalError("rational division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }

  bool is_zero() const { return v_.is_zero(); }
  bool is_one() const { return v_ == 1; }

  /// Serializes as "n" or "p/q" (lowest terms, '-' in front of the numerator).
  std::string str() const {
    if (denominator(v_) == 1) return numerator(v_).str();
    return numerator(v_).str() + "/" + denominator(v_).str();
  }

 private:
  using mpq = boost::multiprecision::mpq_rational;
  explicit Rational(mpq v) : v_(std::move(v)) {}
  mpq v_;
};

inline Rational Rational::parse(std::string_view s) {
  if (s.empty()) throw ParseError("empty rational literal");
  auto ok = [](std::string_view t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  try {
    auto slash = s.find('/');
    if (slash == std::string_view::npos) {
      if (!ok(s)) throw ParseError("bad rational literal: " + std::string(s));
      return Rational(mpq(std::string(s)));
    }
    auto num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!ok(num) || !ok(den)) throw ParseError("bad rational literal: " + std::string(s));
    mpq q{boost::multiprecision::mpz_int(std::string(num)),
          boost::multiprecision::mpz_int(std::string(den))};
    return Rational(std::move(q));
  } catch (const std::exception& e) {
    throw ParseError("bad rational literal: " + std::string(s));
  }
}

/// Element of a prime field F_p, stored reduced to 0..p-1.
///
/// The modulus travels with each element and is also available as a
/// thread-local default (installed with Fp::Context), which integer
/// literals written by generic code -- K(2) and the like -- bind to.
/// An element with modulus 0 is an unbound literal; it binds to the
/// modulus of the first bound operand it meets. Combining two elements
/// bound to different moduli raises ValidationError.
class Fp {
 public:
  /// RAII guard declaring the modulus for the current thread.
  class Context {
   public:
    explicit Context(std::uint32_t p) : prev_(default_modulus()) {
      if (p < 2) throw ValidationError("prime-field modulus must be >= 2");
      default_modulus() = p;
    }
    ~Context() { default_modulus() = prev_; }
    Context(const Context&) = delete;
    Context& operator=(const Context&) = delete;

   private:
    std::uint32_t prev_;
  };

  static std::uint32_t& default_modulus() {
    static thread_local std::uint32_t p = 0;
    return p;
  }

  Fp() : p_(default_modulus()) {}
  Fp(long long n) : v_(n), p_(default_modulus()) { reduce(); }  // NOLINT(google-explicit-constructor)
  Fp(long long n, std::uint32_t p) : v_(n), p_(p) { reduce(); }

  static Fp in_field(long long n, std::uint32_t p) {
    if (p < 2) throw ValidationError("prime-field modulus must be >= 2");
    return Fp(n, p);
  }

  std::uint32_t modulus() const { return p_; }
  long long raw() const { return v_; }

  Fp operator-() const { return p_ ? Fp(p_ - v_, p_) : Fp(-v_); }

  Fp& operator+=(const Fp& o) { join(o); v_ += bound(o); reduce(); return *this; }
  Fp& operator-=(const Fp& o) { join(o); v_ -= bound(o); reduce(); return *this; }
  Fp& operator*=(const Fp& o) {
    join(o);
    if (p_) {
      v_ = static_cast<long long>((static_cast<unsigned long long>(v_) * bound(o)) % p_);
    } else {
      long long r;
      if (__builtin_mul_overflow(v_, o.v_, &r)) throw InternalError("literal overflow in F_p");
      v_ = r;
    }
    return *this;
  }
  Fp& operator/=(const Fp& o) { return *this *= o.inverse(); }

  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
  friend bool operator==(const Fp& a, const Fp& b) {
    if (a.p_ && b.p_ && a.p_ != b.p_) throw ValidationError("prime-field modulus mismatch");
    if (a.p_) return a.v_ == Fp(b.v_, a.p_).v_;
    if (b.p_) return b.v_ == Fp(a.v_, b.p_).v_;
    return a.v_ == b.v_;
  }
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

  Fp inverse() const {
    if (!p_) {
      if (v_ == 1 || v_ == -1) return *this;
      throw InternalError("inverse of unbound F_p literal");
    }
    if (v_ == 0) throw InternalError("division by zero in F_p");
    // extended Euclid on (v, p)
    long long a = v_, b = p_, x0 = 1, x1 = 0;
    while (b) {
      long long q = a / b;
      long long t = a - q * b; a = b; b = t;
      t = x0 - q * x1; x0 = x1; x1 = t;
    }
    if (a != 1) throw ValidationError("modulus is not prime: " + std::to_string(p_));
    return Fp(x0, p_);
  }

  bool is_zero() const { return p_ ? v_ == 0 : v_ == 0; }
  bool is_one() const { return p_ ? v_ == 1 % p_ : v_ == 1; }

  std::string str() const { return std::to_string(v_); }

 private:
  void reduce() {
    if (!p_) return;
    v_ %= p_;
    if (v_ < 0) v_ += p_;
  }
  void join(const Fp& o) {
    if (p_ && o.p_ && p_ != o.p_) throw ValidationError("prime-field modulus mismatch");
    if (!p_ && o.p_) { p_ = o.p_; reduce(); }
  }
  long long bound(const Fp& o) const { return p_ ? Fp(o.v_, p_).v_ : o.v_; }

  long long v_ = 0;
  std::uint32_t p_ = 0;
};

/// Field-specific text formats: rationals as "n" or "p/q", prime-field
/// elements as integers 0..p-1 (bound to the thread's declared modulus).
template <class K>
struct scalar_io;

template <>
struct scalar_io<Rational> {
  static constexpr const char* field_name = "Q";
  static Rational parse(std::string_view s) { return Rational::parse(s); }
};

template <>
struct scalar_io<Fp> {
  static constexpr const char* field_name = "Fp";
  static Fp parse(std::string_view s) {
    if (Fp::default_modulus() == 0)
      throw ValidationError("prime-field scalar read before a modulus was declared");
    if (s.empty()) throw ParseError("empty prime-field literal");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw ParseError("bad prime-field literal: " + std::string(s));
    long long v = 0;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw ParseError("bad prime-field literal: " + std::string(s));
      v = v * 10 % Fp::default_modulus() + (s[i] - '0');
    }
    return Fp(s[0] == '-' ? -v : v);
  }
};

/// base^e with exact field inverses for negative exponents.
template <class K>
K scalar_pow(const K& base, long long e) {
  if (e < 0) return scalar_pow(K(1) / base, -e);
  K r(1), b = base;
  for (long long k = e; k > 0; k >>= 1) {
    if (k & 1) r = r * b;
    b = b * b;
  }
  return r;
}

template <class K>
concept field_scalar = std::regular<K> && requires(K a, const K b) {
  K(0); K(1); K(-1);
  { a + b } -> std::convertible_to<K>;
  { a - b } -> std::convertible_to<K>;
  { a * b } -> std::convertible_to<K>;
  { a / b } -> std::convertible_to<K>;
  { -a } -> std::convertible_to<K>;
  { b.is_zero() } -> std::convertible_to<bool>;
  { b.str() } -> std::convertible_to<std::string>;
};

static_assert(field_scalar<Rational>);
static_assert(field_scalar<Fp>);

}  // namespace homcalc
