#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace tsw {

// Overflow-checked long arithmetic; throws Overflow.
long checked_add(long a, long b);
long checked_mul(long a, long b);

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols, long fill = 0);
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  long& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  long operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<long> row(std::size_t r) const;
  std::vector<long> col(std::size_t c) const;
  IntMatrix transpose() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

  bool is_symmetric() const;
  std::string to_string() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<long> data_;
};

// Exact determinant (Bareiss); the 0x0 determinant is 1.
long determinant(const IntMatrix& a);

// Rank over Q.
std::size_t rank(const IntMatrix& a);

}  // namespace tsw
