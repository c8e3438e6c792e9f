#ifndef GSC_RAT_FUNC_HPP
#define GSC_RAT_FUNC_HPP

#include <string>
#include <string_view>
#include <utility>

#include "gsc/error.hpp"
#include "gsc/laurent_poly.hpp"

namespace gsc {

namespace detail {

inline Integer content(const LaurentPoly& p) {
  Integer g = 0;
  for (const auto& [e, c] : p.terms()) {
    g = boost::multiprecision::gcd(g, c);
    if (g == 1) break;
  }
  return g < 0 ? Integer(-g) : g;
}

inline LaurentPoly divide_by_integer(const LaurentPoly& p, const Integer& d) {
  LaurentPoly r;
  for (const auto& [e, c] : p.terms()) r.add_term(e, c / d);
  return r;
}

/// Primitive part with a positive leading coefficient.
inline LaurentPoly primitive_part(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  Integer c = content(p);
  if (p.leading_coefficient() < 0) c = -c;
  return divide_by_integer(p, c);
}

// Both arguments must be ordinary polynomials (valuation >= 0).
inline LaurentPoly pseudo_remainder(LaurentPoly a, const LaurentPoly& b) {
  const int db = b.degree();
  const Integer& lb = b.leading_coefficient();
  while (!a.is_zero() && a.degree() >= db) {
    LaurentPoly t = LaurentPoly::monomial(a.leading_coefficient(), a.degree() - db);
    a = a * LaurentPoly(lb) - t * b;
  }
  return a;
}

/// GCD in Z[q] of two polynomials, with positive leading coefficient.
inline LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return primitive_part(b) * LaurentPoly(content(b));
  if (b.is_zero()) return primitive_part(a) * LaurentPoly(content(a));
  const Integer c = boost::multiprecision::gcd(content(a), content(b));
  LaurentPoly x = primitive_part(a);
  LaurentPoly y = primitive_part(b);
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    LaurentPoly r = pseudo_remainder(x, y);
    x = std::move(y);
    y = primitive_part(r);
  }
  return primitive_part(x) * LaurentPoly(c);
}

}  // namespace detail

/// Element of Q(q), stored as num/den in lowest terms over Z[q, q^-1].
///
/// Canonical form: den is an ordinary polynomial with a nonzero constant
/// term and positive leading coefficient, and num/den share no common
/// factor (polynomial or integer). Powers of q always live in num, so a
/// value is a Laurent polynomial exactly when den == 1.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(int c) : num_(c), den_(1) {}                      // NOLINT
  RatFunc(const LaurentPoly& p) : num_(p), den_(1) {}      // NOLINT
  RatFunc(const LaurentPoly& num, const LaurentPoly& den) : num_(num), den_(den) {
    normalize();
  }

  const LaurentPoly& numerator() const noexcept { return num_; }
  const LaurentPoly& denominator() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_laurent() const { return den_ == LaurentPoly(1); }

  RatFunc operator-() const { return from_canonical(-num_, den_); }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_laurent() && b.is_laurent()) return from_canonical(a.num_ * b.num_, a.den_);
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw Error(ErrorKind::invalid_input, "division by zero rational function");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
  }
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

  RatFunc inverse() const { return RatFunc(1) / *this; }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// `num` when den == 1, otherwise `(num)/(den)`.
  std::string to_string() const {
    if (is_laurent()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
  }

 private:
  static RatFunc from_canonical(LaurentPoly num, LaurentPoly den) {
    RatFunc r;
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    if (r.num_.is_zero()) r.den_ = LaurentPoly(1);
    return r;
  }

  void normalize() {
    if (den_.is_zero()) throw Error(ErrorKind::invalid_input, "zero denominator");
    if (num_.is_zero()) {
      den_ = LaurentPoly(1);
      return;
    }
    const int dv = den_.valuation();
    den_ = den_.shifted(-dv);
    const int nv = num_.valuation() - dv;
    LaurentPoly n = num_.shifted(-num_.valuation());
    LaurentPoly g = detail::poly_gcd(n, den_);
    if (!(g == LaurentPoly(1))) {
      n = divide_exact(n, g);
      den_ = divide_exact(den_, g);
    }
    if (den_.leading_coefficient() < 0) {
      n = -n;
      den_ = -den_;
    }
    num_ = n.shifted(nv);
  }

  LaurentPoly num_;
  LaurentPoly den_;
};

inline std::ostream& operator<<(std::ostream& os, const RatFunc& r) {
  return os << r.to_string();
}

/// Inverse of RatFunc::to_string.
inline RatFunc parse_ratfunc(std::string_view text) {
  const auto slash = text.find(")/(");
  if (slash == std::string_view::npos) return RatFunc(parse_laurent(text));
  if (text.size() < 2 || text.front() != '(' || text.back() != ')')
    throw Error(ErrorKind::parse, "malformed rational function '" + std::string(text) + "'");
  return RatFunc(parse_laurent(text.substr(1, slash - 1)),
                 parse_laurent(text.substr(slash + 3, text.size() - slash - 4)));
}

}  // namespace gsc

#endif  // GSC_RAT_FUNC_HPP
