#include "kodim/matrix.hpp"

#include "kodim/errors.hpp"

#include <sstream>

namespace kodim {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  std::vector<std::vector<std::int64_t>> v;
  for (const auto& r : rows) v.emplace_back(r);
  *this = from_rows(v);
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw PreconditionError("matrix rows must have equal length");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<std::vector<std::int64_t>> IntMatrix::to_rows() const {
  std::vector<std::vector<std::int64_t>> out(rows_, std::vector<std::int64_t>(cols_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j);
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows())
    throw PreconditionError("cannot compose " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " with " +
                            std::to_string(b.rows()) + "x" + std::to_string(b.cols()) + " matrix");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      std::int64_t s = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) {
        std::int64_t t;
        if (__builtin_mul_overflow(a(i, k), b(k, j), &t) || __builtin_add_overflow(s, t, &s))
          throw PreconditionError("integer overflow in matrix product");
      }
      c(i, j) = s;
    }
  }
  return c;
}

IntMatrix power(const IntMatrix& m, unsigned k) {
  if (!m.square()) throw PreconditionError("power of a non-square matrix");
  IntMatrix r = IntMatrix::identity(m.rows());
  for (unsigned i = 0; i < k; ++i) r = r * m;
  return r;
}

BigInt determinant(const IntMatrix& m) {
  if (!m.square()) throw PreconditionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
  BigInt prev = 1;
  int sgn = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sgn = -sgn;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    }
    prev = a[k][k];
  }
  return sgn * a[n - 1][n - 1];
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  if (!m.square()) throw PreconditionError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
    a[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw PreconditionError("matrix is singular");
    std::swap(a[c], a[p]);
    const Rational pivot = a[c][c];
    for (auto& x : a[c]) x /= pivot;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  IntMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& x = a[i][n + j];
      if (boost::multiprecision::denominator(x) != 1) throw PreconditionError("matrix is not unimodular");
      inv(i, j) = boost::multiprecision::numerator(x).convert_to<std::int64_t>();
    }
  }
  return inv;
}

std::vector<BigInt> characteristic_polynomial(const IntMatrix& m) {
  if (!m.square()) throw PreconditionError("characteristic polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k.
  using RMat = std::vector<std::vector<Rational>>;
  RMat a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
  std::vector<Rational> c(n + 1, 0);
  c[n] = 1;
  RMat mk(n, std::vector<Rational>(n, 0));
  for (std::size_t k = 1; k <= n; ++k) {
    RMat next(n, std::vector<Rational>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) {
        if (mk[l].empty()) continue;
        for (std::size_t j = 0; j < n; ++j)
          if (a[i][l] != 0 && mk[l][j] != 0) next[i][j] += a[i][l] * mk[l][j];
      }
    for (std::size_t i = 0; i < n; ++i) next[i][i] += c[n - k + 1];
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) tr += a[i][l] * next[l][i];
    c[n - k] = -tr / static_cast<long>(k);
    mk = std::move(next);
  }
  std::vector<BigInt> out(n + 1);
  for (std::size_t i = 0; i <= n; ++i) out[i] = boost::multiprecision::numerator(c[i]);
  return out;
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << ", ";
    os << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ", ";
      os << m(i, j);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace kodim
