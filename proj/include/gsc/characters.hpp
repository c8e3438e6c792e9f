#ifndef GSC_CHARACTERS_HPP
#define GSC_CHARACTERS_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/integer.hpp>

#include "gsc/coxeter_group.hpp"
#include "gsc/detail/mod_prime.hpp"
#include "gsc/error.hpp"
#include "gsc/laurent_poly.hpp"

namespace gsc {

/// A rational-valued class function on a fixed group.
class ClassFunction {
 public:
  ClassFunction() = default;
  ClassFunction(GroupPtr group, std::vector<Rational> values)
      : group_(std::move(group)), values_(std::move(values)) {
    if (!group_ || values_.size() != group_->class_count())
      throw Error(ErrorKind::invalid_input, "class function has the wrong number of values");
  }

  const GroupPtr& group() const noexcept { return group_; }
  const std::vector<Rational>& values() const noexcept { return values_; }
  const Rational& operator[](std::size_t c) const { return values_[c]; }
  const Rational& at_identity() const {
    return values_[static_cast<std::size_t>(group_->identity_class())];
  }

  friend ClassFunction operator+(const ClassFunction& a, const ClassFunction& b) {
    return combine(a, b, [](const Rational& x, const Rational& y) { return Rational(x + y); });
  }
  friend ClassFunction operator-(const ClassFunction& a, const ClassFunction& b) {
    return combine(a, b, [](const Rational& x, const Rational& y) { return Rational(x - y); });
  }
  friend ClassFunction operator*(const Rational& s, const ClassFunction& a) {
    ClassFunction r = a;
    for (auto& v : r.values_) v *= s;
    return r;
  }
  friend bool operator==(const ClassFunction& a, const ClassFunction& b) {
    return a.group_ == b.group_ && a.values_ == b.values_;
  }

  /// Pointwise product, the character of the tensor product.
  friend ClassFunction tensor(const ClassFunction& a, const ClassFunction& b) {
    return combine(a, b, [](const Rational& x, const Rational& y) { return Rational(x * y); });
  }

 private:
  template <class Op>
  static ClassFunction combine(const ClassFunction& a, const ClassFunction& b, Op op) {
    if (a.group_ != b.group_)
      throw Error(ErrorKind::group_mismatch, "class functions live on different groups");
    std::vector<Rational> v(a.values_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = op(a.values_[i], b.values_[i]);
    return ClassFunction(a.group_, std::move(v));
  }

  GroupPtr group_;
  std::vector<Rational> values_;
};

/// (a, b) = 1/|W| sum_w a(w) b(w^-1).
inline Rational inner_product(const ClassFunction& a, const ClassFunction& b) {
  if (a.group() != b.group())
    throw Error(ErrorKind::group_mismatch, "class functions live on different groups");
  const auto& g = *a.group();
  Rational s = 0;
  for (std::size_t c = 0; c < g.class_count(); ++c)
    s += Rational(Integer(g.classes()[c].size)) * a[c] *
         b[static_cast<std::size_t>(g.inverse_class(static_cast<int>(c)))];
  return s / Rational(Integer(g.order()));
}

inline ClassFunction trivial_character(const GroupPtr& g) {
  return ClassFunction(g, std::vector<Rational>(g->class_count(), Rational(1)));
}

/// det of the reflection representation.
inline ClassFunction sign_character(const GroupPtr& g) {
  std::vector<Rational> v;
  for (const auto& c : g->classes()) v.emplace_back(g->sign(c.representative));
  return ClassFunction(g, std::move(v));
}

inline ClassFunction reflection_character(const GroupPtr& g) {
  std::vector<Rational> v;
  const auto n = static_cast<std::size_t>(g->rank());
  for (const auto& c : g->classes()) v.emplace_back(n == 0 ? 0LL : -c.char_poly[n - 1]);
  return ClassFunction(g, std::move(v));
}

/// Character of S^k of the reflection representation. With
/// det(1 - t w) = sum_i d_i t^i, the traces h_k satisfy
/// h_k = -sum_{i=1}^{min(k,n)} d_i h_{k-i}.
inline ClassFunction sym_power_character(const GroupPtr& g, int k) {
  if (k < 0) throw Error(ErrorKind::invalid_input, "negative symmetric power");
  const auto n = static_cast<std::size_t>(g->rank());
  std::vector<Rational> v;
  for (const auto& c : g->classes()) {
    std::vector<Integer> h(static_cast<std::size_t>(k) + 1, 0);
    h[0] = 1;
    for (std::size_t m = 1; m < h.size(); ++m)
      for (std::size_t i = 1; i <= std::min(m, n); ++i)
        h[m] -= Integer(c.char_poly[n - i]) * h[m - i];
    v.emplace_back(h.back());
  }
  return ClassFunction(g, std::move(v));
}

inline ClassFunction regular_character(const GroupPtr& g) {
  std::vector<Rational> v(g->class_count(), Rational(0));
  v[static_cast<std::size_t>(g->identity_class())] = Rational(Integer(g->order()));
  return ClassFunction(g, std::move(v));
}

/// Gamma_chi = 1/|W| sum_w chi(w) P_W(q)(q-1)^n / det(q - w), the fake
/// degree of chi twisted by the sign. Integral for virtual characters;
/// a non-integral coefficient means the input was not one.
inline LaurentPoly gamma_poly(const ClassFunction& chi) {
  const auto& g = *chi.group();
  std::map<int, Rational> acc;
  for (std::size_t c = 0; c < g.class_count(); ++c) {
    if (chi[c] == 0) continue;
    const Rational w = Rational(Integer(g.classes()[c].size)) * chi[c];
    for (const auto& [e, coef] : g.gamma_kernel(static_cast<int>(c)).terms())
      acc[e] += w * Rational(coef);
  }
  LaurentPoly out;
  const Rational ord = Rational(Integer(g.order()));
  for (auto& [e, r] : acc) {
    const Rational v = r / ord;
    if (denominator(v) != 1)
      throw Error(ErrorKind::not_virtual_character,
                  "Gamma has a non-integral coefficient; input is not a virtual character");
    out.add_term(e, numerator(v));
  }
  return out;
}

struct Irreducible {
  ClassFunction character;
  std::string label;  // phi{d},{b} with primes for repeats
  int dimension = 0;
  int b = 0;           // lowest q-power of Gamma(chi tensor sign)
  LaurentPoly gamma;   // Gamma_chi
};

/// The irreducible characters of a group, ordered by (dimension, b, values).
class CharacterTable {
 public:
  const GroupPtr& group() const noexcept { return group_; }
  const std::vector<Irreducible>& irreducibles() const noexcept { return irr_; }
  std::size_t size() const noexcept { return irr_.size(); }
  const Irreducible& operator[](std::size_t i) const { return irr_[i]; }

  /// Indices of the irreducibles with the given dimension and b-invariant.
  std::vector<std::size_t> identify(int dimension, int b) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < irr_.size(); ++i)
      if (irr_[i].dimension == dimension && irr_[i].b == b) out.push_back(i);
    return out;
  }

  std::size_t index_of_label(const std::string& label) const {
    for (std::size_t i = 0; i < irr_.size(); ++i)
      if (irr_[i].label == label) return i;
    throw Error(ErrorKind::invalid_input, "no irreducible labelled " + label);
  }

  friend CharacterTable character_table(const GroupPtr& g);

 private:
  GroupPtr group_;
  std::vector<Irreducible> irr_;
};

/// (irreducible index, multiplicity) for each nonzero multiplicity.
inline std::vector<std::pair<std::size_t, Integer>> decompose(const CharacterTable& table,
                                                              const ClassFunction& chi) {
  if (chi.group() != table.group())
    throw Error(ErrorKind::group_mismatch, "class function lives on another group");
  std::vector<std::pair<std::size_t, Integer>> out;
  for (std::size_t i = 0; i < table.size(); ++i) {
    const Rational m = inner_product(chi, table[i].character);
    if (denominator(m) != 1)
      throw Error(ErrorKind::not_virtual_character,
                  "multiplicity is not an integer; input is not a virtual character");
    if (m != 0) out.emplace_back(i, numerator(m));
  }
  return out;
}

namespace detail {

/// Lowest exponent of Gamma(chi tensor sign).
inline int b_invariant(const ClassFunction& chi) {
  return gamma_poly(tensor(chi, sign_character(chi.group()))).valuation();
}

/// Splits the class algebra into its one-dimensional common eigenspaces
/// (Dixon's method over F_p). Each returned vector is proportional to the
/// central character omega_chi(C_m) = |C_m| chi(g_m) / chi(1).
inline ModMat central_characters(const CoxeterGroup& g) {
  using F = ModPrime;
  const std::size_t k = g.class_count();
  // a[(j*k + l)*k + m] = #{x in C_j : x^-1 g_m in C_l}
  std::vector<std::uint64_t> a(k * k * k, 0);
  for (std::size_t m = 0; m < k; ++m) {
    const ElementId gm = g.classes()[m].representative;
    for (ElementId x = 0; x < g.order(); ++x) {
      const auto j = static_cast<std::size_t>(g.class_of(x));
      const auto l = static_cast<std::size_t>(g.class_of(g.multiply(g.inverse(x), gm)));
      ++a[(j * k + l) * k + m];
    }
  }

  std::vector<ModMat> spaces;
  {
    ModMat full(k, ModVec(k, 0));
    for (std::size_t i = 0; i < k; ++i) full[i][i] = 1;
    spaces.push_back(std::move(full));
  }
  for (std::size_t j = 0; j < k && spaces.size() < k; ++j) {
    const auto bound = static_cast<long long>(g.classes()[j].size);
    std::vector<ModMat> next;
    for (auto& basis : spaces) {
      const std::size_t d = basis.size();
      if (d == 1) {
        next.push_back(std::move(basis));
        continue;
      }
      const auto pivots = rref(basis);
      // Coordinates of A_j b_r in the basis, read off at the pivot columns.
      ModMat r(d, ModVec(d, 0));
      for (std::size_t c = 0; c < d; ++c) {
        ModVec v(k, 0);
        for (std::size_t l = 0; l < k; ++l) {
          std::uint64_t s = 0;
          for (std::size_t m = 0; m < k; ++m)
            if (a[(j * k + l) * k + m] && basis[c][m])
              s = F::add(s, F::mul(a[(j * k + l) * k + m], basis[c][m]));
          v[l] = s;
        }
        for (std::size_t s = 0; s < d; ++s) r[s][c] = v[pivots[s]];
      }
      const ModVec cp = char_poly(r);
      std::size_t found = 0;
      std::vector<ModMat> pieces;
      for (long long lam = -bound; lam <= bound && found < d; ++lam) {
        const auto lm = F::from_signed(lam);
        if (eval_poly(cp, lm) != 0) continue;
        ModMat shifted = r;
        for (std::size_t i = 0; i < d; ++i) shifted[i][i] = F::sub(shifted[i][i], lm);
        const ModMat ns = nullspace(shifted);
        ModMat piece;
        for (const auto& c : ns) {
          ModVec w(k, 0);
          for (std::size_t i = 0; i < d; ++i)
            if (c[i])
              for (std::size_t m = 0; m < k; ++m) w[m] = F::add(w[m], F::mul(c[i], basis[i][m]));
          piece.push_back(std::move(w));
        }
        found += piece.size();
        pieces.push_back(std::move(piece));
      }
      if (found != d)
        throw Error(ErrorKind::table_incomplete,
                    "class algebra does not split over the integers; table incomplete");
      for (auto& p : pieces) next.push_back(std::move(p));
    }
    spaces = std::move(next);
  }
  if (spaces.size() != k)
    throw Error(ErrorKind::table_incomplete, "character table incomplete");
  ModMat out;
  for (auto& s : spaces) out.push_back(std::move(s.front()));
  return out;
}

inline Integer isqrt_exact(std::uint64_t v) {
  const auto r = static_cast<std::uint64_t>(boost::multiprecision::sqrt(Integer(v)));
  if (r * r != v) throw Error(ErrorKind::table_incomplete, "degree is not an integer");
  return Integer(r);
}

}  // namespace detail

inline CharacterTable character_table(const GroupPtr& gp) {
  using F = detail::ModPrime;
  const auto& g = *gp;
  const std::size_t k = g.class_count();
  const auto idc = static_cast<std::size_t>(g.identity_class());
  const auto omegas = detail::central_characters(g);

  std::vector<Irreducible> irr;
  for (auto w : omegas) {
    if (w[idc] == 0) throw Error(ErrorKind::table_incomplete, "degenerate central character");
    const auto inv = F::inv(w[idc]);
    for (auto& x : w) x = F::mul(x, inv);
    // chi(1)^2 = |G| / sum_m w_m w_{m*} / |C_m|
    std::uint64_t s = 0;
    for (std::size_t m = 0; m < k; ++m) {
      const auto ms = static_cast<std::size_t>(g.inverse_class(static_cast<int>(m)));
      s = F::add(s, F::mul(F::mul(w[m], w[ms]), F::inv(g.classes()[m].size % F::p)));
    }
    if (s == 0) throw Error(ErrorKind::table_incomplete, "degenerate central character");
    const std::uint64_t d2 = F::mul(g.order() % F::p, F::inv(s));
    const Integer dim = detail::isqrt_exact(d2);
    const auto dm = static_cast<std::uint64_t>(dim);
    std::vector<Rational> vals;
    for (std::size_t m = 0; m < k; ++m) {
      const auto v = F::mul(F::mul(w[m], dm), F::inv(g.classes()[m].size % F::p));
      vals.emplace_back(F::to_signed(v));
    }
    Irreducible r;
    r.character = ClassFunction(gp, std::move(vals));
    r.dimension = static_cast<int>(dim);
    irr.push_back(std::move(r));
  }

  // Exact check of the row orthogonality relations.
  for (std::size_t i = 0; i < irr.size(); ++i)
    for (std::size_t j = i; j < irr.size(); ++j)
      if (inner_product(irr[i].character, irr[j].character) != (i == j ? 1 : 0))
        throw Error(ErrorKind::table_incomplete, "orthogonality check failed; table incomplete");

  for (auto& r : irr) {
    r.gamma = gamma_poly(r.character);
    r.b = detail::b_invariant(r.character);
  }
  std::sort(irr.begin(), irr.end(), [](const Irreducible& a, const Irreducible& b) {
    if (a.dimension != b.dimension) return a.dimension < b.dimension;
    if (a.b != b.b) return a.b < b.b;
    return a.character.values() < b.character.values();
  });
  std::map<std::pair<int, int>, int> seen;
  for (auto& r : irr) {
    const int dup = seen[{r.dimension, r.b}]++;
    r.label = "phi" + std::to_string(r.dimension) + "," + std::to_string(r.b) + std::string(static_cast<std::size_t>(dup), '\'');
  }

  CharacterTable t;
  t.group_ = gp;
  t.irr_ = std::move(irr);
  return t;
}

/// TSV export: `#` metadata lines describe the classes, then a header row
/// and one row per irreducible.
inline void write_character_table_tsv(std::ostream& os, const CharacterTable& t) {
  const auto& g = *t.group();
  os << "# group\t" << g.spec().label << "\torder\t" << g.order() << "\tclasses\t"
     << g.class_count() << '\n';
  os << "# class\tsize\tlength\tword\n";
  for (std::size_t c = 0; c < g.class_count(); ++c) {
    const auto& cl = g.classes()[c];
    os << "# c" << c << '\t' << cl.size << '\t' << cl.min_length << '\t';
    const auto word = g.reduced_word(cl.representative);
    if (word.empty()) os << "1";
    for (std::size_t i = 0; i < word.size(); ++i)
      os << (i ? "." : "") << g.spec().node_names[static_cast<std::size_t>(word[i])];
    os << '\n';
  }
  os << "irrep";
  for (std::size_t c = 0; c < g.class_count(); ++c) os << "\tc" << c;
  os << '\n';
  for (const auto& r : t.irreducibles()) {
    os << r.label;
    for (const auto& v : r.character.values()) os << '\t' << v;
    os << '\n';
  }
}

}  // namespace gsc

#endif  // GSC_CHARACTERS_HPP
