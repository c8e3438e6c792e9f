#ifndef GSC_SYM_MATRIX_HPP
#define GSC_SYM_MATRIX_HPP

#include <cstddef>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gsc/error.hpp"
#include "gsc/rat_func.hpp"

namespace gsc {

/// Dense row-major matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n, T(0));
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorKind::invalid_input, "matrix shape mismatch");
    Matrix m(a.rows_, b.cols_, T(0));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == T(0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += aik * b(k, j);
      }
    return m;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RatMatrix = Matrix<RatFunc>;

/// Symmetric matrix over Q(q) indexed by an ordered list of integer labels.
class SymMatrix {
 public:
  SymMatrix(std::vector<int> index, RatMatrix entries)
      : index_(std::move(index)), entries_(std::move(entries)) {
    const std::size_t n = index_.size();
    if (entries_.rows() != n || entries_.cols() != n)
      throw Error(ErrorKind::invalid_input, "index set does not match matrix size");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (!(entries_(i, j) == entries_(j, i)))
          throw Error(ErrorKind::invalid_input,
                      "matrix is not symmetric at (" + std::to_string(index_[i]) + "," +
                          std::to_string(index_[j]) + ")");
  }

  const std::vector<int>& index() const noexcept { return index_; }
  const RatMatrix& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return index_.size(); }
  const RatFunc& operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }

 private:
  std::vector<int> index_;
  RatMatrix entries_;
};

/// M = U * diag(D) * U^t with U unit upper triangular.
struct UduFactors {
  RatMatrix upper;  // the transpose of Pi
  std::vector<RatFunc> diagonal;

  RatMatrix lower() const { return upper.transposed(); }
  RatMatrix diagonal_matrix() const {
    RatMatrix d(diagonal.size(), diagonal.size(), RatFunc(0));
    for (std::size_t i = 0; i < diagonal.size(); ++i) d(i, i) = diagonal[i];
    return d;
  }
  RatMatrix reconstruct() const { return upper * diagonal_matrix() * lower(); }
};

/// Symmetric elimination without pivoting, starting from the last index.
/// Pivot k is det(M[k..n)) / det(M[k+1..n)); a vanishing pivot means the
/// factorization does not exist and raises ErrorKind::zero_pivot.
inline UduFactors symmetric_udu(const SymMatrix& m) {
  const std::size_t n = m.size();
  UduFactors f{RatMatrix::identity(n), std::vector<RatFunc>(n)};
  for (std::size_t kk = n; kk-- > 0;) {
    RatFunc pivot = m(kk, kk);
    for (std::size_t j = kk + 1; j < n; ++j)
      if (!f.upper(kk, j).is_zero()) pivot -= f.upper(kk, j) * f.upper(kk, j) * f.diagonal[j];
    if (pivot.is_zero())
      throw Error(ErrorKind::zero_pivot,
                  "zero pivot at index " + std::to_string(m.index()[kk]));
    f.diagonal[kk] = pivot;
    const RatFunc inv = pivot.inverse();
    for (std::size_t i = 0; i < kk; ++i) {
      RatFunc s = m(i, kk);
      for (std::size_t j = kk + 1; j < n; ++j)
        if (!f.upper(i, j).is_zero() && !f.upper(kk, j).is_zero())
          s -= f.upper(i, j) * f.diagonal[j] * f.upper(kk, j);
      f.upper(i, kk) = s * inv;
    }
  }
  return f;
}

enum class CoefficientRing {
  natural_poly,  // N[q]
  laurent,       // Z[q, q^-1]
};

inline bool certify_ring(const RatFunc& p, CoefficientRing ring) {
  if (!p.is_laurent()) return false;
  if (ring == CoefficientRing::laurent) return true;
  return p.numerator().is_polynomial() && p.numerator().has_nonnegative_coefficients();
}

/// Accepts "N[q]" and "Z[q,q^-1]" (the CLI spelling of the two rings).
inline CoefficientRing parse_ring(std::string_view name) {
  if (name == "N[q]") return CoefficientRing::natural_poly;
  if (name == "Z[q,q^-1]") return CoefficientRing::laurent;
  throw Error(ErrorKind::usage, "unknown ring '" + std::string(name) + "'");
}

/// Writes a labelled square matrix as TSV: a header row of labels, then one
/// row per label. Entries use the polynomial text grammar.
inline void write_matrix_tsv(std::ostream& os, const std::vector<int>& labels, const RatMatrix& m) {
  for (int h : labels) os << '\t' << h;
  os << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << labels[i];
    for (std::size_t j = 0; j < m.cols(); ++j) os << '\t' << m(i, j).to_string();
    os << '\n';
  }
}

namespace detail {
inline std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, '\t')) out.push_back(cell);
  if (!line.empty() && line.back() == '\t') out.emplace_back();
  return out;
}
}  // namespace detail

/// Inverse of write_matrix_tsv.
inline std::pair<std::vector<int>, RatMatrix> read_matrix_tsv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw Error(ErrorKind::parse, "empty matrix TSV");
  auto header = detail::split_tabs(line);
  if (header.empty() || !header[0].empty())
    throw Error(ErrorKind::parse, "matrix TSV header must start with an empty cell");
  std::vector<int> labels;
  for (std::size_t i = 1; i < header.size(); ++i) labels.push_back(std::stoi(header[i]));
  const std::size_t n = labels.size();
  RatMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    if (!std::getline(is, line)) throw Error(ErrorKind::parse, "matrix TSV has too few rows");
    auto cells = detail::split_tabs(line);
    if (cells.size() != n + 1 || std::stoi(cells[0]) != labels[r])
      throw Error(ErrorKind::parse, "malformed matrix TSV row " + std::to_string(r + 2));
    for (std::size_t c = 0; c < n; ++c) m(r, c) = parse_ratfunc(cells[c + 1]);
  }
  return {labels, m};
}

}  // namespace gsc

#endif  // GSC_SYM_MATRIX_HPP
