#ifndef GSC_LAURENT_POLY_HPP
#define GSC_LAURENT_POLY_HPP

#include <cctype>
#include <cstddef>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "gsc/error.hpp"

namespace gsc {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Laurent polynomial in one variable q with arbitrary-precision integer
/// coefficients. Only nonzero coefficients are stored.
class LaurentPoly {
 public:
  using TermMap = std::map<int, Integer>;

  LaurentPoly() = default;
  LaurentPoly(int c) { add_term(0, Integer(c)); }  // NOLINT: implicit constant
  LaurentPoly(const Integer& c) { add_term(0, c); }  // NOLINT

  static LaurentPoly monomial(const Integer& c, int exponent) {
    LaurentPoly p;
    p.add_term(exponent, c);
    return p;
  }
  static LaurentPoly q(int exponent = 1) { return monomial(1, exponent); }

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  /// Smallest exponent with a nonzero coefficient. Undefined on zero.
  int valuation() const {
    require_nonzero("valuation");
    return terms_.begin()->first;
  }
  int degree() const {
    require_nonzero("degree");
    return terms_.rbegin()->first;
  }
  const Integer& leading_coefficient() const {
    require_nonzero("leading_coefficient");
    return terms_.rbegin()->second;
  }

  Integer coefficient(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  void add_term(int exponent, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponent, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Value at q = 1.
  Integer sum_of_coefficients() const {
    Integer s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
  }

  bool is_polynomial() const { return is_zero() || valuation() >= 0; }

  bool has_nonnegative_coefficients() const {
    for (const auto& [e, c] : terms_)
      if (c < 0) return false;
    return true;
  }

  /// Multiplication by q^k.
  LaurentPoly shifted(int k) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e + k, c);
    return r;
  }

  LaurentPoly operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    return a += b;
  }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
    return a -= b;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.terms_ == b.terms_;
  }

  /// Exact quotient a / b in Z[q, q^-1]. Throws if b does not divide a.
  friend LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw Error(ErrorKind::invalid_input, "division by zero polynomial");
    LaurentPoly rem = a;
    LaurentPoly quot;
    const int db = b.degree();
    const int vb = b.valuation();
    const Integer& lb = b.leading_coefficient();
    // Terms of the remainder below this exponent can never be cleared.
    const int floor = a.is_zero() ? 0 : a.valuation() - vb;
    while (!rem.is_zero() && rem.degree() - db >= floor) {
      const int shift = rem.degree() - db;
      const Integer& lr = rem.leading_coefficient();
      if (lr % lb != 0) break;
      LaurentPoly t = monomial(lr / lb, shift);
      quot += t;
      rem -= t * b;
    }
    if (!rem.is_zero())
      throw Error(ErrorKind::invalid_input, "inexact polynomial division");
    return quot;
  }

  std::string to_string() const;

 private:
  void require_nonzero(const char* what) const {
    if (terms_.empty())
      throw Error(ErrorKind::invalid_input,
                  std::string(what) + " of the zero polynomial");
  }

  TermMap terms_;
};

/// Text form in ascending exponent order: `q^-2+q^2`, `1-2*q^3`, `0`.
inline std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    const Integer mag = negative ? Integer(-c) : c;
    if (negative)
      out += '-';
    else if (!first)
      out += '+';
    first = false;
    if (e == 0) {
      out += mag.str();
      continue;
    }
    if (mag != 1) {
      out += mag.str();
      out += '*';
    }
    out += 'q';
    if (e != 1) {
      out += '^';
      out += std::to_string(e);
    }
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) {
  return os << p.to_string();
}

namespace detail {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  LaurentPoly parse() {
    LaurentPoly result;
    skip_space();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [exponent, coeff] = term();
      result.add_term(exponent, sign * coeff);
      skip_space();
    }
    return result;
  }

 private:
  std::pair<int, Integer> term() {
    Integer coeff = 1;
    bool have_coeff = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = digits();
      have_coeff = true;
      skip_space();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_space();
        if (at_end() || peek() != 'q') fail("expected 'q' after '*'");
      }
    }
    if (at_end() || peek() != 'q') {
      if (!have_coeff) fail("expected coefficient or 'q'");
      return {0, coeff};
    }
    ++pos_;
    skip_space();
    int exponent = 1;
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_space();
      int esign = 1;
      if (!at_end() && (peek() == '-' || peek() == '+')) {
        esign = peek() == '-' ? -1 : 1;
        ++pos_;
      }
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
        fail("expected exponent digits");
      exponent = esign * static_cast<int>(digits());
    }
    return {exponent, coeff};
  }

  Integer digits() {
    Integer v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      ++pos_;
    }
    return v;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::parse, "polynomial parse error at column " +
                                      std::to_string(pos_ + 1) + ": " + msg +
                                      " in '" + std::string(text_) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses the grammar `[-]c*q^e` joined by `+`/`-`. The coefficient and the
/// `*` are optional (`q^2`, `2q^3` and `2*q^3` are all accepted).
inline LaurentPoly parse_laurent(std::string_view text) {
  return detail::PolyParser(text).parse();
}

}  // namespace gsc

#endif  // GSC_LAURENT_POLY_HPP
