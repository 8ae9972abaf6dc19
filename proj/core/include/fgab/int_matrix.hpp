#pragma once

#include "fgab/integer.hpp"

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <vector>

namespace fgab {

// Dense matrix of arbitrary-precision integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(std::span<const Integer> entries, std::size_t rows,
                            std::size_t cols);
  static IntMatrix from_rows(const std::vector<IntVector>& rows,
                             std::size_t cols);
  static IntMatrix from_columns(const std::vector<IntVector>& columns,
                                std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const Integer& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  IntVector row(std::size_t r) const;
  IntVector column(std::size_t c) const;
  void set_column(std::size_t c, std::span<const Integer> values);

  IntMatrix transpose() const;
  IntMatrix block(std::size_t r0, std::size_t c0, std::size_t nrows,
                  std::size_t ncols) const;

  // [this | other]
  IntMatrix hstack(const IntMatrix& other) const;
  // [this ; other]
  IntMatrix vstack(const IntMatrix& other) const;

  bool is_zero() const;

  // Elementary row/column operations.
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& k);
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& k);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntVector operator*(const IntMatrix& a, std::span<const Integer> x);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator*(const Integer& k, const IntMatrix& a);

// Determinant by fraction-free Bareiss elimination; square matrices only.
Integer determinant(const IntMatrix& m);

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

}  // namespace fgab
