#ifndef JETGAL_MATRIX_HPP
#define JETGAL_MATRIX_HPP

#include <vector>

#include "jetgal/rational_function.hpp"

namespace jetgal {

// Dense matrix of rational functions.
class Matrix {
public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  RationalFunction& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const RationalFunction& at(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  Matrix scaled(const RationalFunction& c) const;

  RationalFunction det() const; // square only
  Matrix adjugate() const;      // square only
  Matrix inverse() const;       // adjugate / det; Singular if det == 0

  // Reduced row echelon form in place; returns pivot column per pivot row.
  std::vector<std::size_t> rref();

  std::size_t rank() const;

  // basis of the right kernel, reduced-echelon derived, one vector per free
  // column in ascending column order
  std::vector<std::vector<RationalFunction>> nullspace() const;

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

private:
  std::size_t rows_, cols_;
  std::vector<RationalFunction> data_;
};

struct LinearSolution {
  bool consistent = false;
  bool unique = false;
  std::vector<RationalFunction> values; // free unknowns set to zero
};

// Solve A x = b over the rational function field (A may be over- or
// under-determined).
LinearSolution solve_linear(const Matrix& a, const std::vector<RationalFunction>& b);

// Exact rank of a scalar matrix (used by the seeded rank oracle).
std::size_t scalar_rank(std::vector<std::vector<Scalar>> m);

} // namespace jetgal

#endif
