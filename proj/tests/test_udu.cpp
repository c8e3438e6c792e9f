#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <vector>

#include <gtest/gtest.h>

#include "gsc/sym_matrix.hpp"

using namespace gsc;

namespace {

// Leibniz expansion; independent of the elimination under test.
RatFunc determinant(const RatMatrix& m, std::size_t from) {
  const std::size_t n = m.rows() - from;
  if (n == 0) return RatFunc(1);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  RatFunc det(0);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    RatFunc term(inversions % 2 ? -1 : 1);
    for (std::size_t i = 0; i < n; ++i) term *= m(from + i, from + perm[i]);
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

RatFunc random_entry(std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-3, 3), shape(0, 3);
  LaurentPoly num;
  for (int e = -2; e <= 2; ++e) num.add_term(e, coeff(rng));
  if (shape(rng) != 0) return RatFunc(num);
  LaurentPoly den;
  den.add_term(0, 1);
  den.add_term(1, coeff(rng));
  return RatFunc(num, den);
}

SymMatrix random_symmetric(std::mt19937& rng, std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = random_entry(rng);
  std::vector<int> labels(n);
  std::iota(labels.begin(), labels.end(), 0);
  return SymMatrix(labels, m);
}

bool trailing_minors_nonzero(const SymMatrix& s) {
  for (std::size_t k = 0; k < s.size(); ++k)
    if (determinant(s.entries(), k).is_zero()) return false;
  return true;
}

}  // namespace

TEST(SymmetricUdu, IdentityFactorsTrivially) {
  const SymMatrix id({0, 1, 2}, RatMatrix::identity(3));
  const auto f = symmetric_udu(id);
  EXPECT_EQ(f.upper, RatMatrix::identity(3));
  for (const auto& d : f.diagonal) EXPECT_EQ(d, RatFunc(1));
}

TEST(SymmetricUdu, RandomRoundTripAndMinorRatios) {
  std::mt19937 rng(2024);
  int done = 0;
  while (done < 100) {
    const auto s = random_symmetric(rng, 4);
    if (!trailing_minors_nonzero(s)) continue;
    ++done;
    const auto f = symmetric_udu(s);
    ASSERT_EQ(f.reconstruct(), s.entries());
    for (std::size_t i = 0; i < 4; ++i) {
      EXPECT_EQ(f.upper(i, i), RatFunc(1));
      for (std::size_t j = 0; j < i; ++j) EXPECT_TRUE(f.upper(i, j).is_zero());
    }
    // Pivot k is the ratio of the trailing principal minors from k and k+1.
    for (std::size_t k = 0; k < 4; ++k)
      EXPECT_EQ(f.diagonal[k], determinant(s.entries(), k) / determinant(s.entries(), k + 1));
    // Running it again on the product gives the same factors.
    const auto g = symmetric_udu(SymMatrix(s.index(), f.reconstruct()));
    EXPECT_EQ(g.upper, f.upper);
    EXPECT_EQ(g.diagonal, f.diagonal);
  }
}

TEST(SymmetricUdu, ZeroPivotIsReported) {
  RatMatrix m(2, 2, RatFunc(1));
  m(1, 1) = RatFunc(0);
  try {
    symmetric_udu(SymMatrix({0, 1}, m));
    FAIL() << "expected zero pivot";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::zero_pivot);
  }
}

TEST(SymMatrix, RejectsAsymmetricInput) {
  RatMatrix m(2, 2, RatFunc(0));
  m(0, 1) = RatFunc(1);
  EXPECT_THROW(SymMatrix({0, 1}, m), Error);
}

TEST(SymMatrix, TsvRoundTrip) {
  std::mt19937 rng(5);
  const auto s = random_symmetric(rng, 3);
  std::stringstream ss;
  write_matrix_tsv(ss, {3, 4, 9}, s.entries());
  const auto [labels, back] = read_matrix_tsv(ss);
  EXPECT_EQ(labels, (std::vector<int>{3, 4, 9}));
  EXPECT_EQ(back, s.entries());
}
