#pragma once

// Exact integer and rational arithmetic, integer matrices and the Smith
// normal form. No floating point is used anywhere in this header.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace symsig {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Dense row-major matrix of arbitrary-precision integers.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols);
  IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntegerMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  BigInt& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  bool is_square() const { return rows_ == cols_; }
  bool is_diagonal() const;

  friend IntegerMatrix operator*(const IntegerMatrix& lhs, const IntegerMatrix& rhs);
  friend bool operator==(const IntegerMatrix& lhs, const IntegerMatrix& rhs);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> entries_;
};

std::string to_string(const IntegerMatrix& m);

/// U * M * V == D with U, V unimodular and D = diag(d_1, ..., d_r, 0, ...),
/// d_i > 0 and d_i | d_{i+1}.
struct SnfDecomposition {
  IntegerMatrix U;
  IntegerMatrix D;
  IntegerMatrix V;
  std::size_t rank = 0;

  std::vector<BigInt> diagonal() const;
};

/// Smith normal form by row/column gcd reduction. The pivot is always the
/// smallest nonzero entry (by absolute value) of the remaining block, ties
/// broken by lowest (row, col), so the output is deterministic.
SnfDecomposition snf(const IntegerMatrix& m);

/// Product of the diagonal of D. Throws ValidationError if D is not square or
/// has a zero on the diagonal, i.e. the lattice it describes has infinite index.
BigInt abs_det_of_full_rank_kernel(const SnfDecomposition& decomposition);

/// Fraction-free (Bareiss) determinant of a square matrix.
BigInt determinant(const IntegerMatrix& m);

BigInt binomial(std::uint64_t m, std::uint64_t k);

BigInt gcd(const BigInt& a, const BigInt& b);
std::int64_t gcd(std::int64_t a, std::int64_t b);
std::int64_t lcm(std::int64_t a, std::int64_t b);

/// Least nonnegative residue of value mod modulus (modulus > 0).
std::int64_t mod_floor(std::int64_t value, std::int64_t modulus);

/// Canonical "p/q" rendering; integers render as "p/1".
std::string to_string(const Rational& r);
std::string to_string(const BigInt& z);

}  // namespace symsig
