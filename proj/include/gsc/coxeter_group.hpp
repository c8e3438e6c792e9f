#ifndef GSC_COXETER_GROUP_HPP
#define GSC_COXETER_GROUP_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <numeric>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "gsc/cartan.hpp"
#include "gsc/error.hpp"
#include "gsc/laurent_poly.hpp"

namespace gsc {

using ElementId = std::uint32_t;

inline constexpr std::size_t kDefaultElementCap = 1'000'000;

struct ConjugacyClass {
  ElementId representative = 0;
  std::size_t size = 0;
  /// Coefficients c_0..c_n of det(x - w) for any member w; c_n = 1.
  std::vector<long long> char_poly;
  int min_length = 0;
};

/// A finite Weyl group realized in the root-basis reflection representation,
/// where every element is an integer matrix. Immutable once built; elements
/// are numbered in breadth-first order so id 0 is the identity and lengths
/// never decrease with the id.
class CoxeterGroup {
 public:
  const CartanSpec& spec() const noexcept { return spec_; }
  int rank() const noexcept { return n_; }
  std::size_t order() const noexcept { return length_.size(); }

  ElementId identity() const noexcept { return 0; }
  ElementId generator(int i) const { return left_[static_cast<std::size_t>(i) * order()]; }

  std::span<const std::int8_t> matrix(ElementId e) const {
    const std::size_t sq = static_cast<std::size_t>(n_) * n_;
    return {mats_.data() + e * sq, sq};
  }
  int length(ElementId e) const { return length_[e]; }
  ElementId inverse(ElementId e) const { return inverse_[e]; }

  /// s_i * e
  ElementId left_mul(int i, ElementId e) const {
    return left_[static_cast<std::size_t>(i) * order() + e];
  }
  /// e * s_i
  ElementId right_mul(ElementId e, int i) const {
    return right_[static_cast<std::size_t>(e) * n_ + static_cast<std::size_t>(i)];
  }

  ElementId multiply(ElementId a, ElementId b) const {
    ElementId x = a;
    for (ElementId cur = b; cur != 0; cur = parent_[cur]) x = right_mul(x, parent_gen_[cur]);
    return x;
  }

  /// A reduced word i_1 ... i_k with e = s_{i_1} ... s_{i_k}.
  std::vector<int> reduced_word(ElementId e) const {
    std::vector<int> w;
    for (ElementId cur = e; cur != 0; cur = parent_[cur]) w.push_back(parent_gen_[cur]);
    return w;
  }

  /// det of the reflection representation, (-1)^length.
  int sign(ElementId e) const { return (length_[e] % 2) ? -1 : 1; }

  const std::vector<ConjugacyClass>& classes() const noexcept { return classes_; }
  std::size_t class_count() const noexcept { return classes_.size(); }
  int class_of(ElementId e) const { return class_of_[e]; }
  /// Index of the class containing the inverses of class c.
  int inverse_class(int c) const { return inverse_class_[static_cast<std::size_t>(c)]; }
  int identity_class() const { return class_of_[0]; }

  /// P_W(q) = sum over w of q^length(w).
  const LaurentPoly& poincare() const noexcept { return poincare_; }
  /// Number of reflections, the top degree of the Poincare polynomial.
  int reflection_count() const { return poincare_.is_zero() ? 0 : poincare_.degree(); }

  /// P_W(q) (q-1)^n / det(q - w) for a member w of class c. This is a
  /// polynomial because each eigenvalue multiplicity of w is bounded by the
  /// number of degrees divisible by its order.
  const LaurentPoly& gamma_kernel(int c) const {
    return gamma_kernel_[static_cast<std::size_t>(c)];
  }

  friend std::shared_ptr<const CoxeterGroup> build_group(const CartanSpec& spec,
                                                         std::size_t cap);

 private:
  CoxeterGroup() = default;

  void enumerate(std::size_t cap);
  void compute_inverses(const std::unordered_map<std::string, ElementId>& index);
  void compute_classes();

  CartanSpec spec_;
  int n_ = 0;
  std::vector<std::int8_t> mats_;
  std::vector<int> length_;
  std::vector<ElementId> parent_;
  std::vector<int> parent_gen_;
  std::vector<ElementId> left_;
  std::vector<ElementId> right_;
  std::vector<ElementId> inverse_;
  std::vector<ConjugacyClass> classes_;
  std::vector<int> class_of_;
  std::vector<int> inverse_class_;
  LaurentPoly poincare_;
  std::vector<LaurentPoly> gamma_kernel_;
};

using GroupPtr = std::shared_ptr<const CoxeterGroup>;

namespace detail {

inline std::string matrix_key(std::span<const std::int8_t> m) {
  return std::string(reinterpret_cast<const char*>(m.data()), m.size());
}

/// det(x - A) by Faddeev-LeVerrier; all divisions are exact over Z.
inline std::vector<long long> char_poly(std::span<const std::int8_t> a, int n) {
  const auto N = static_cast<std::size_t>(n);
  std::vector<long long> c(N + 1, 0);
  c[N] = 1;
  std::vector<long long> m(N * N, 0), am(N * N, 0);
  for (std::size_t k = 1; k <= N; ++k) {
    // M_k = A M_{k-1} + c_{n-k+1} I
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) {
        long long s = 0;
        for (std::size_t l = 0; l < N; ++l) s += a[i * N + l] * m[l * N + j];
        am[i * N + j] = s;
      }
    for (std::size_t i = 0; i < N; ++i) am[i * N + i] += c[N - k + 1];
    m = am;
    long long tr = 0;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t l = 0; l < N; ++l) tr += a[i * N + l] * m[l * N + i];
    c[N - k] = -tr / static_cast<long long>(k);
  }
  return c;
}

inline LaurentPoly poly_from_coeffs(const std::vector<long long>& c) {
  LaurentPoly p;
  for (std::size_t i = 0; i < c.size(); ++i) p.add_term(static_cast<int>(i), Integer(c[i]));
  return p;
}

}  // namespace detail

inline void CoxeterGroup::enumerate(std::size_t cap) {
  const auto N = static_cast<std::size_t>(n_);
  const std::size_t sq = N * N;
  std::unordered_map<std::string, ElementId> index;

  mats_.assign(sq, 0);
  for (std::size_t i = 0; i < N; ++i) mats_[i * N + i] = 1;
  length_ = {0};
  parent_ = {0};
  parent_gen_ = {-1};
  index.emplace(detail::matrix_key(matrix(0)), 0);

  std::vector<std::vector<ElementId>> left(N);
  std::vector<int> row(N);
  std::vector<std::int8_t> next(sq);
  for (ElementId e = 0; e < length_.size(); ++e) {
    for (std::size_t i = 0; i < N; ++i) {
      // s_i * M only changes row i: row_i -= sum_j a_ij row_j.
      const std::int8_t* cur = mats_.data() + e * sq;
      std::copy(cur, cur + sq, next.begin());
      for (std::size_t col = 0; col < N; ++col) {
        int v = cur[i * N + col];
        for (std::size_t j = 0; j < N; ++j) v -= spec_.cartan[i][j] * cur[j * N + col];
        if (v < -127 || v > 127)
          throw Error(ErrorKind::too_large, spec_.label + ": infinite or too large");
        next[i * N + col] = static_cast<std::int8_t>(v);
      }
      auto [it, inserted] = index.try_emplace(detail::matrix_key(next),
                                              static_cast<ElementId>(length_.size()));
      if (inserted) {
        if (length_.size() >= cap)
          throw Error(ErrorKind::too_large,
                      spec_.label + ": infinite or too large (more than " +
                          std::to_string(cap) + " elements)");
        mats_.insert(mats_.end(), next.begin(), next.end());
        length_.push_back(length_[e] + 1);
        parent_.push_back(e);
        parent_gen_.push_back(static_cast<int>(i));
      }
      left[i].push_back(it->second);
    }
  }

  left_.clear();
  left_.reserve(N * order());
  for (auto& l : left) left_.insert(left_.end(), l.begin(), l.end());
  compute_inverses(index);
}

inline void CoxeterGroup::compute_inverses(
    const std::unordered_map<std::string, ElementId>& index) {
  const auto N = static_cast<std::size_t>(n_);
  const std::size_t sq = N * N;
  inverse_.assign(order(), 0);
  std::vector<std::int8_t> prod(sq);
  for (ElementId e = 1; e < order(); ++e) {
    // e = s_i p  =>  e^-1 = p^-1 s_i, and (M s_i)_{kl} = M_kl - M_ki a_il.
    const auto i = static_cast<std::size_t>(parent_gen_[e]);
    const auto pinv = matrix(inverse_[parent_[e]]);
    for (std::size_t k = 0; k < N; ++k)
      for (std::size_t l = 0; l < N; ++l)
        prod[k * N + l] = static_cast<std::int8_t>(pinv[k * N + l] - pinv[k * N + i] * spec_.cartan[i][l]);
    inverse_[e] = index.at(detail::matrix_key(prod));
  }
  right_.assign(order() * N, 0);
  for (ElementId e = 0; e < order(); ++e)
    for (std::size_t i = 0; i < N; ++i)
      right_[e * N + i] = inverse_[left_mul(static_cast<int>(i), inverse_[e])];
}

inline void CoxeterGroup::compute_classes() {
  const std::size_t ord = order();
  std::vector<ElementId> uf(ord);
  std::iota(uf.begin(), uf.end(), 0);
  auto find = [&](ElementId x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  for (ElementId e = 0; e < ord; ++e)
    for (int i = 0; i < n_; ++i) {
      ElementId a = find(e), b = find(right_mul(left_mul(i, e), i));
      if (a != b) uf[std::max(a, b)] = std::min(a, b);
    }

  // Roots are the smallest ids, hence minimal-length members.
  std::unordered_map<ElementId, std::size_t> slot;
  std::vector<ConjugacyClass> found;
  std::vector<ElementId> root_of(ord);
  for (ElementId e = 0; e < ord; ++e) {
    const ElementId r = find(e);
    root_of[e] = r;
    auto [it, inserted] = slot.try_emplace(r, found.size());
    if (inserted) {
      ConjugacyClass c;
      c.representative = r;
      c.min_length = length_[r];
      c.char_poly = detail::char_poly(matrix(r), n_);
      found.push_back(std::move(c));
    }
    ++found[it->second].size;
  }
  std::sort(found.begin(), found.end(), [](const ConjugacyClass& a, const ConjugacyClass& b) {
    if (a.size != b.size) return a.size < b.size;
    if (a.char_poly != b.char_poly) return a.char_poly < b.char_poly;
    if (a.min_length != b.min_length) return a.min_length < b.min_length;
    return a.representative < b.representative;
  });
  classes_ = std::move(found);

  std::unordered_map<ElementId, int> class_by_root;
  for (std::size_t c = 0; c < classes_.size(); ++c)
    class_by_root.emplace(classes_[c].representative, static_cast<int>(c));
  class_of_.resize(ord);
  for (ElementId e = 0; e < ord; ++e) class_of_[e] = class_by_root.at(root_of[e]);
  inverse_class_.resize(classes_.size());
  for (std::size_t c = 0; c < classes_.size(); ++c)
    inverse_class_[c] = class_of_[inverse_[classes_[c].representative]];

  poincare_ = LaurentPoly();
  for (ElementId e = 0; e < ord; ++e) poincare_.add_term(length_[e], 1);
  LaurentPoly numer = poincare_;
  for (int i = 0; i < n_; ++i) numer *= LaurentPoly::q(1) - LaurentPoly(1);
  gamma_kernel_.clear();
  for (const auto& c : classes_)
    gamma_kernel_.push_back(divide_exact(numer, detail::poly_from_coeffs(c.char_poly)));
}

/// Enumerates the group generated by the simple reflections of `spec`.
/// Throws ErrorKind::too_large ("infinite or too large") past `cap` elements.
inline GroupPtr build_group(const CartanSpec& spec, std::size_t cap = kDefaultElementCap) {
  validate(spec);
  std::shared_ptr<CoxeterGroup> g(new CoxeterGroup());
  g->spec_ = spec;
  g->n_ = spec.rank();
  g->enumerate(cap);
  g->compute_classes();
  return g;
}

}  // namespace gsc

#endif  // GSC_COXETER_GROUP_HPP
