#include <cstdlib>
#include <sstream>

#include "tsw/abgroup/group.hpp"
#include "tsw/error.hpp"
#include "tsw/exactnum/rational.hpp"

namespace tsw {

long checked_add(long a, long b) {
  long r;
  if (__builtin_add_overflow(a, b, &r)) fail(ErrorKind::Overflow, "integer addition overflow");
  return r;
}

long checked_mul(long a, long b) {
  long r;
  if (__builtin_mul_overflow(a, b, &r)) fail(ErrorKind::Overflow, "integer multiplication overflow");
  return r;
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, long fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    ensure(rows[r].size() == cols, ErrorKind::InvalidInput, "ragged matrix row");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

std::vector<long> IntMatrix::row(std::size_t r) const {
  return std::vector<long>(data_.begin() + static_cast<long>(r * cols_),
                           data_.begin() + static_cast<long>((r + 1) * cols_));
}

std::vector<long> IntMatrix::col(std::size_t c) const {
  std::vector<long> v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  ensure(a.cols_ == b.rows_, ErrorKind::Assertion, "matrix shape mismatch");
  IntMatrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      long x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        p(i, j) = checked_add(p(i, j), checked_mul(x, b(k, j)));
    }
  return p;
}

bool IntMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

std::string IntMatrix::to_string() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    out << (r ? ",[" : "[");
    for (std::size_t c = 0; c < cols_; ++c) out << (c ? "," : "") << (*this)(r, c);
    out << "]";
  }
  out << "]";
  return out.str();
}

long determinant(const IntMatrix& a) {
  ensure(a.rows() == a.cols(), ErrorKind::Assertion, "determinant of non-square matrix");
  std::size_t n = a.rows();
  if (n == 0) return 1;
  std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a(i, j);
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  Integer d = m[n - 1][n - 1] * sign;
  ensure(d.fits_slong_p(), ErrorKind::Overflow, "determinant does not fit in 64 bits");
  return d.get_si();
}

std::size_t rank(const IntMatrix& a) {
  std::vector<std::vector<Rational>> m(a.rows(), std::vector<Rational>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = a(i, j);
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && sgn(m[p][c]) == 0) ++p;
    if (p == a.rows()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (sgn(m[i][c]) == 0) continue;
      Rational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < a.cols(); ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

namespace {

// Floor-free quotient used for reduction; remainder keeps the sign of a.
long trunc_div(long a, long b) { return a / b; }

struct Smith {
  IntMatrix d, u, v, vinv;

  void row_sub(std::size_t target, std::size_t src, long q) {
    if (q == 0) return;
    for (std::size_t c = 0; c < d.cols(); ++c)
      d(target, c) = checked_add(d(target, c), -checked_mul(q, d(src, c)));
    for (std::size_t c = 0; c < u.cols(); ++c)
      u(target, c) = checked_add(u(target, c), -checked_mul(q, u(src, c)));
  }
  void row_swap(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < d.cols(); ++c) std::swap(d(a, c), d(b, c));
    for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u(a, c), u(b, c));
  }
  void row_negate(std::size_t a) {
    for (std::size_t c = 0; c < d.cols(); ++c) d(a, c) = -d(a, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u(a, c) = -u(a, c);
  }
  // col_target -= q * col_src; V' = V E, V'^{-1} = E^{-1} V^{-1}
  void col_sub(std::size_t target, std::size_t src, long q) {
    if (q == 0) return;
    for (std::size_t r = 0; r < d.rows(); ++r)
      d(r, target) = checked_add(d(r, target), -checked_mul(q, d(r, src)));
    for (std::size_t r = 0; r < v.rows(); ++r)
      v(r, target) = checked_add(v(r, target), -checked_mul(q, v(r, src)));
    for (std::size_t c = 0; c < vinv.cols(); ++c)
      vinv(src, c) = checked_add(vinv(src, c), checked_mul(q, vinv(target, c)));
  }
  void col_swap(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < d.rows(); ++r) std::swap(d(r, a), d(r, b));
    for (std::size_t r = 0; r < v.rows(); ++r) std::swap(v(r, a), v(r, b));
    for (std::size_t c = 0; c < vinv.cols(); ++c) std::swap(vinv(a, c), vinv(b, c));
  }
};

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  Smith s{a, IntMatrix::identity(a.rows()), IntMatrix::identity(a.cols()),
          IntMatrix::identity(a.cols())};
  std::size_t rows = a.rows(), cols = a.cols();
  for (std::size_t t = 0; t < rows && t < cols; ++t) {
    for (;;) {
      // smallest absolute nonzero entry in the trailing block, row-major ties
      std::size_t pr = rows, pc = cols;
      long best = 0;
      for (std::size_t r = t; r < rows; ++r)
        for (std::size_t c = t; c < cols; ++c) {
          long x = std::labs(s.d(r, c));
          if (x != 0 && (best == 0 || x < best)) {
            best = x;
            pr = r;
            pc = c;
          }
        }
      if (best == 0) break;
      s.row_swap(t, pr);
      s.col_swap(t, pc);
      long p = s.d(t, t);
      bool clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        s.row_sub(r, t, trunc_div(s.d(r, t), p));
        if (s.d(r, t) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        s.col_sub(c, t, trunc_div(s.d(t, c), p));
        if (s.d(t, c) != 0) clean = false;
      }
      if (!clean) continue;
      // divisibility of the trailing block by the pivot
      bool divides = true;
      for (std::size_t r = t + 1; r < rows && divides; ++r)
        for (std::size_t c = t + 1; c < cols; ++c)
          if (s.d(r, c) % p != 0) {
            s.row_sub(t, r, -1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (s.d(t, t) < 0) s.row_negate(t);
  }
  return SmithDecomposition{s.u, s.v, s.d, s.vinv};
}

}  // namespace tsw
