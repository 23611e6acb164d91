// Dense exact linear algebra over a Field.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "galcrem/fields.hpp"

namespace galcrem {

class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols);
  static Matrix identity(const Field& field, std::size_t n);
  /// Rows of equal length; throws FieldError on ragged input.
  static Matrix from_rows(const Field& field, const std::vector<std::vector<FieldElement>>& rows);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  FieldElement& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const FieldElement& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<FieldElement> row(std::size_t r) const;
  std::vector<FieldElement> column(std::size_t c) const;

  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  std::vector<FieldElement> operator*(const std::vector<FieldElement>& v) const;
  Matrix operator*(const FieldElement& c) const;
  Matrix operator+(const Matrix& o) const;
  friend bool operator==(const Matrix& a, const Matrix& b);

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  /// Reduced row echelon form in place; returns pivot columns.
  std::vector<std::size_t> rref();
  std::size_t rank() const;
  FieldElement determinant() const;
  std::optional<Matrix> inverse() const;
  /// Basis of {x : A x = 0}.
  std::vector<std::vector<FieldElement>> nullspace() const;
  /// Some solution of A x = b, nullopt when inconsistent.
  std::optional<std::vector<FieldElement>> solve(const std::vector<FieldElement>& b) const;

  /// True when the two matrices agree up to a nonzero scalar.
  bool proportional_to(const Matrix& o) const;
  /// Scalar multiple whose first nonzero entry (row-major) is 1.
  Matrix normalized() const;

  std::vector<std::vector<std::string>> to_strings() const;

 private:
  Field field_;
  std::size_t rows_, cols_;
  std::vector<FieldElement> data_;
};

}  // namespace galcrem
