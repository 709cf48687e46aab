#include "symsig/exact_arith.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

#include "symsig/errors.hpp"

namespace symsig {

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw ValidationError("IntegerMatrix: ragged initializer");
    for (long v : row) entries_.emplace_back(v);
  }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool IntegerMatrix::is_diagonal() const {
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (r != c && (*this)(r, c) != 0) return false;
  return true;
}

IntegerMatrix operator*(const IntegerMatrix& lhs, const IntegerMatrix& rhs) {
  if (lhs.cols_ != rhs.rows_) throw ValidationError("IntegerMatrix: dimension mismatch in product");
  IntegerMatrix out(lhs.rows_, rhs.cols_);
  for (std::size_t r = 0; r < lhs.rows_; ++r)
    for (std::size_t k = 0; k < lhs.cols_; ++k) {
      const BigInt& x = lhs(r, k);
      if (x == 0) continue;
      for (std::size_t c = 0; c < rhs.cols_; ++c)
        mpz_addmul(out(r, c).get_mpz_t(), x.get_mpz_t(), rhs(k, c).get_mpz_t());
    }
  return out;
}

bool operator==(const IntegerMatrix& lhs, const IntegerMatrix& rhs) {
  return lhs.rows_ == rhs.rows_ && lhs.cols_ == rhs.cols_ && lhs.entries_ == rhs.entries_;
}

std::string to_string(const IntegerMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? ",[" : "[");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? "," : "") << m(r, c).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

std::vector<BigInt> SnfDecomposition::diagonal() const {
  std::vector<BigInt> out;
  const std::size_t k = std::min(D.rows(), D.cols());
  out.reserve(k);
  for (std::size_t i = 0; i < k; ++i) out.push_back(D(i, i));
  return out;
}

namespace {

// Working state for the reduction. Row operations are mirrored into U and
// column operations into V, so U * M * V == A holds after every step.
struct SnfWork {
  IntegerMatrix a, u, v;

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
    for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u(i, c), u(j, c));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
    for (std::size_t r = 0; r < v.rows(); ++r) std::swap(v(r, i), v(r, j));
  }
  static void addmul(BigInt& dst, const BigInt& factor, const BigInt& x) {
    if (x != 0) mpz_addmul(dst.get_mpz_t(), factor.get_mpz_t(), x.get_mpz_t());
  }
  // row dst += factor * row src
  void add_row(std::size_t dst, std::size_t src, const BigInt& factor) {
    for (std::size_t c = 0; c < a.cols(); ++c) addmul(a(dst, c), factor, a(src, c));
    for (std::size_t c = 0; c < u.cols(); ++c) addmul(u(dst, c), factor, u(src, c));
  }
  // col dst += factor * col src
  void add_col(std::size_t dst, std::size_t src, const BigInt& factor) {
    for (std::size_t r = 0; r < a.rows(); ++r) addmul(a(r, dst), factor, a(r, src));
    for (std::size_t r = 0; r < v.rows(); ++r) addmul(v(r, dst), factor, v(r, src));
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) = -a(i, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u(i, c) = -u(i, c);
  }

  // Smallest |entry| in the block [t.., t..]; row-major scan with strict
  // comparison keeps the lowest (row, col) among ties.
  bool find_pivot(std::size_t t, std::size_t& pr, std::size_t& pc) const {
    const BigInt* best = nullptr;
    for (std::size_t r = t; r < a.rows(); ++r)
      for (std::size_t c = t; c < a.cols(); ++c) {
        const BigInt& x = a(r, c);
        if (x == 0) continue;
        if (!best || mpz_cmpabs(x.get_mpz_t(), best->get_mpz_t()) < 0) {
          best = &x;
          pr = r;
          pc = c;
          if (mpz_cmpabs_ui(x.get_mpz_t(), 1) == 0) return true;
        }
      }
    return best != nullptr;
  }
};

}  // namespace

SnfDecomposition snf(const IntegerMatrix& m) {
  if (m.empty()) throw ValidationError("snf: empty matrix");
  SnfWork w{m, IntegerMatrix::identity(m.rows()), IntegerMatrix::identity(m.cols())};
  const std::size_t limit = std::min(m.rows(), m.cols());

  std::size_t t = 0;
  for (; t < limit; ++t) {
    std::size_t pr = 0, pc = 0;
    if (!w.find_pivot(t, pr, pc)) break;
    for (;;) {
      w.swap_rows(t, pr);
      w.swap_cols(t, pc);

      bool clean = true;
      BigInt q;
      for (std::size_t r = t + 1; r < m.rows(); ++r) {
        if (w.a(r, t) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), w.a(r, t).get_mpz_t(), w.a(t, t).get_mpz_t());
        w.add_row(r, t, -q);
        if (w.a(r, t) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < m.cols(); ++c) {
        if (w.a(t, c) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), w.a(t, c).get_mpz_t(), w.a(t, t).get_mpz_t());
        w.add_col(c, t, -q);
        if (w.a(t, c) != 0) clean = false;
      }

      if (clean) {
        // pivot must divide the rest of the block for the divisibility chain
        bool divides_all = true;
        if (mpz_cmpabs_ui(w.a(t, t).get_mpz_t(), 1) != 0)
          for (std::size_t r = t + 1; r < m.rows() && divides_all; ++r)
            for (std::size_t c = t + 1; c < m.cols(); ++c)
              if (!mpz_divisible_p(w.a(r, c).get_mpz_t(), w.a(t, t).get_mpz_t())) {
                w.add_row(t, r, BigInt(1));
                divides_all = false;
                break;
              }
        if (divides_all) break;
      }
      w.find_pivot(t, pr, pc);
    }
    if (w.a(t, t) < 0) w.negate_row(t);
  }

  return SnfDecomposition{std::move(w.u), std::move(w.a), std::move(w.v), t};
}

BigInt abs_det_of_full_rank_kernel(const SnfDecomposition& decomposition) {
  const IntegerMatrix& d = decomposition.D;
  if (!d.is_square()) throw ValidationError("lattice index requires a square relation matrix");
  BigInt product = 1;
  for (std::size_t i = 0; i < d.rows(); ++i) {
    if (d(i, i) == 0) throw ValidationError("lattice is not full rank: index is infinite");
    product *= d(i, i);
  }
  return abs(product);
}

BigInt determinant(const IntegerMatrix& m) {
  if (!m.is_square()) throw ValidationError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntegerMatrix a = m;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && a(swap_with, k) == 0) ++swap_with;
      if (swap_with == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(swap_with, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

BigInt binomial(std::uint64_t m, std::uint64_t k) {
  BigInt out;
  if (k > m) return out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(k));
  return out;
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt out;
  mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t lcm(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

std::int64_t mod_floor(std::int64_t value, std::int64_t modulus) {
  const std::int64_t r = value % modulus;
  return r < 0 ? r + modulus : r;
}

std::string to_string(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::string to_string(const BigInt& z) { return z.get_str(); }

}  // namespace symsig
