#pragma once

#include <cctype>
#include <map>
#include <string>
#include <string_view>

#include "homcalc/errors.hpp"
#include "homcalc/report.hpp"
#include "homcalc/scalar.hpp"

namespace homcalc {

/// Sparse Laurent polynomial over an exact field; zero coefficients are
/// never stored.
template <field_scalar K>
class LaurentPoly {
 public:
  LaurentPoly() = default;

  static LaurentPoly monomial(long long exponent, K coeff) {
    LaurentPoly p;
    p.set(exponent, std::move(coeff));
    return p;
  }
  static LaurentPoly constant(K value) { return monomial(0, std::move(value)); }
  static LaurentPoly one() { return constant(K(1)); }

  const std::map<long long, K>& terms() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  K coeff(long long exponent) const {
    auto it = c_.find(exponent);
    return it == c_.end() ? K(0) : it->second;
  }
  void set(long long exponent, K value) {
    if (value.is_zero()) c_.erase(exponent);
    else c_[exponent] = std::move(value);
  }
  void add_term(long long exponent, const K& value) { set(exponent, coeff(exponent) + value); }

  LaurentPoly operator-() const {
    LaurentPoly r;
    for (const auto& [n, c] : c_) r.c_.emplace(n, -c);
    return r;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    for (const auto& [n, c] : b.c_) a.add_term(n, c);
    return a;
  }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
    for (const auto& [n, c] : b.c_) a.add_term(n, -c);
    return a;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [n, cn] : a.c_)
      for (const auto& [m, cm] : b.c_) r.add_term(n + m, cn * cm);
    return r;
  }
  friend LaurentPoly operator*(const K& s, const LaurentPoly& p) {
    LaurentPoly r;
    for (const auto& [n, c] : p.c_) r.set(n, s * c);
    return r;
  }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  /// Multiplication by u^k.
  LaurentPoly shifted(long long k) const {
    LaurentPoly r;
    for (const auto& [n, c] : c_) r.c_.emplace(n + k, c);
    return r;
  }

  std::string str() const {
    if (c_.empty()) return "0";
    std::string out;
    for (const auto& [n, c] : c_) {
      std::string term;
      const std::string cs = c.str();
      const bool negative = !cs.empty() && cs[0] == '-';
      const std::string abs = negative ? cs.substr(1) : cs;
      std::string upart;
      if (n == 1) upart = "u";
      else if (n != 0) upart = "u^" + std::to_string(n);
      if (upart.empty()) term = abs;
      else if (abs == "1") term = upart;
      else term = abs + "*" + upart;
      if (out.empty()) out = negative ? "-" + term : term;
      else out += (negative ? " - " : " + ") + term;
    }
    return out;
  }

  /// Accepts sums of terms like "3/2*u^-1 + u^2 - 4"; the '*' is optional.
  static LaurentPoly parse(std::string_view s) {
    LaurentPoly out;
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; };
    skip_ws();
    if (i == s.size()) throw ParseError("empty polynomial");
    bool first = true;
    while (i < s.size()) {
      bool negative = false;
      if (!first || s[i] == '+' || s[i] == '-') {
        if (i >= s.size() || (s[i] != '+' && s[i] != '-'))
          throw ParseError("expected '+' or '-' in polynomial");
        negative = s[i] == '-';
        ++i;
        skip_ws();
      }
      first = false;
      // coefficient (absent means 1)
      std::size_t start = i;
      while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/')) ++i;
      K coeff(1);
      const bool had_coeff = i > start;
      if (had_coeff) coeff = scalar_io<K>::parse(s.substr(start, i - start));
      skip_ws();
      if (i < s.size() && s[i] == '*') {
        if (!had_coeff) throw ParseError("'*' without a coefficient");
        ++i;
        skip_ws();
        if (i >= s.size() || s[i] != 'u') throw ParseError("expected 'u' after '*'");
      }
      long long exponent = 0;
      if (i < s.size() && s[i] == 'u') {
        ++i;
        exponent = 1;
        if (i < s.size() && s[i] == '^') {
          ++i;
          std::size_t estart = i;
          if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
          while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
          if (i == estart || (i == estart + 1 && !std::isdigit(static_cast<unsigned char>(s[estart]))))
            throw ParseError("bad exponent in polynomial");
          exponent = std::stoll(std::string(s.substr(estart, i - estart)));
        }
      } else if (!had_coeff) {
        throw ParseError("expected a coefficient or 'u' in polynomial");
      }
      out.add_term(exponent, negative ? -coeff : coeff);
      skip_ws();
    }
    return out;
  }

 private:
  std::map<long long, K> c_;
};

/// Deformation parameter of the calculus u du = q du u. q = 1 selects the
/// ordinary derivative in place of the q-difference quotient.
template <field_scalar K>
struct QParam {
  K q;

  QParam() = default;
  explicit QParam(K value) : q(std::move(value)) {
    if (q.is_zero()) throw ValidationError("q must be nonzero");
  }
  bool is_classical() const { return q == K(1); }
};

/// f(gamma u): coefficient-wise scaling c_n -> c_n gamma^n.
template <field_scalar K>
LaurentPoly<K> scale_substitute(const LaurentPoly<K>& f, const K& gamma) {
  if (gamma.is_zero()) throw MathRefusal("substitution scale must be nonzero");
  LaurentPoly<K> r;
  for (const auto& [n, c] : f.terms()) r.set(n, c * scalar_pow(gamma, n));
  return r;
}

/// The q-difference derivative (f(qu) - f(u)) / ((q - 1) u), or the formal
/// derivative when q = 1.
template <field_scalar K>
LaurentPoly<K> jackson_derivative(const LaurentPoly<K>& f, const QParam<K>& q) {
  if (q.is_classical()) {
    LaurentPoly<K> r;
    for (const auto& [n, c] : f.terms()) r.set(n - 1, c * K(n));
    return r;
  }
  const K inv = K(1) / (q.q - K(1));
  return (inv * (scale_substitute(f, q.q) - f)).shifted(-1);
}

/// The hom-connection attached to an algebra element a:
/// f |-> a f(q^{-1} u) + d_q(f(q^{-1} u)). Evaluated maps satisfy the
/// classification identity D(m f(qu)) = D(m) f(u) + m d_q f(u).
template <field_scalar K>
struct LaurentHomConnection {
  LaurentPoly<K> a;
  QParam<K> q;

  LaurentPoly<K> operator()(const LaurentPoly<K>& f) const {
    const LaurentPoly<K> g = scale_substitute(f, K(1) / q.q);
    return a * g + jackson_derivative(g, q);
  }
};

template <field_scalar K>
LaurentHomConnection<K> homconn_from_element(LaurentPoly<K> a, QParam<K> q) {
  return {std::move(a), std::move(q)};
}

/// D(m f(qu)) - D(m) f(u) - m d_q f(u), which must vanish for any map of
/// the classified form.
template <field_scalar K>
bool classification_identity_holds(const LaurentHomConnection<K>& conn, const LaurentPoly<K>& m,
                                   const LaurentPoly<K>& f) {
  const LaurentPoly<K> lhs = conn(m * scale_substitute(f, conn.q.q));
  const LaurentPoly<K> rhs = conn(m) * f + m * jackson_derivative(f, conn.q);
  return lhs == rhs;
}

/// The inner hom-connection m |-> m u^{-1} / (q - 1); only defined away
/// from q = 1. Agreement with the classified map at a = u^{-1}/(q-1) is
/// asserted on each call.
template <field_scalar K>
LaurentPoly<K> inner_xi_connection(const QParam<K>& q, const LaurentPoly<K>& m) {
  if (q.is_classical()) throw MathRefusal("the inner form needs q != 1");
  const K inv = K(1) / (q.q - K(1));
  const LaurentPoly<K> result = m * LaurentPoly<K>::monomial(-1, inv);
  const auto conn = homconn_from_element(LaurentPoly<K>::monomial(-1, inv), q);
  internal_check(result == conn(m), "inner connection disagrees with its classifying element");
  return result;
}

/// The bimodule commutation rule f(u) du = du f(qu), checked as an identity
/// of coefficient maps on du A. The left route iterates u du = q du u one
/// power at a time; the right route substitutes q directly.
template <field_scalar K>
Report commutation_check(const LaurentPoly<K>& f, const QParam<K>& q) {
  Report rep;
  LaurentPoly<K> left;  // coefficient of du in f du
  for (const auto& [n, c] : f.terms()) {
    // u^n du = q^n du u^n, derived one factor of u at a time
    K factor(1);
    for (long long k = 0; k < (n < 0 ? -n : n); ++k)
      factor = n < 0 ? factor / q.q : factor * q.q;
    left.add_term(n, c * factor);
  }
  const LaurentPoly<K> right = scale_substitute(f, q.q);
  if (left != right)
    rep.add("f du and du f(qu) disagree: " + left.str() + " vs " + right.str());
  return rep;
}

}  // namespace homcalc
