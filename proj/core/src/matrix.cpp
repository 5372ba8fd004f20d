#include "jetgal/matrix.hpp"

namespace jetgal {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = RationalFunction(Scalar(1));
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) raise(errc::invalid_argument, "matrix shape mismatch");
  Matrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const RationalFunction& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (b.at(k, j).is_zero()) continue;
        r.at(i, j) += aik * b.at(k, j);
      }
    }
  return r;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    raise(errc::invalid_argument, "matrix shape mismatch");
  Matrix r(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = a.data_[i] + b.data_[i];
  return r;
}

Matrix Matrix::scaled(const RationalFunction& c) const {
  Matrix r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] * c;
  return r;
}

RationalFunction Matrix::det() const {
  if (rows_ != cols_) raise(errc::invalid_argument, "determinant of non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return RationalFunction(Scalar(1));
  if (n == 1) return at(0, 0);
  if (n == 2) return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
  if (n <= 4) {
    // cofactor expansion along the first row; cheap and symbol-friendly
    RationalFunction acc;
    for (std::size_t j = 0; j < n; ++j) {
      if (at(0, j).is_zero()) continue;
      Matrix minor(n - 1, n - 1);
      for (std::size_t r = 1; r < n; ++r) {
        std::size_t cc = 0;
        for (std::size_t c = 0; c < n; ++c) {
          if (c == j) continue;
          minor.at(r - 1, cc++) = at(r, c);
        }
      }
      RationalFunction term = at(0, j) * minor.det();
      acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
  }
  // fraction-field elimination with pivot tracking
  Matrix m = *this;
  RationalFunction d(Scalar(1));
  bool negate = false;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m.at(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return RationalFunction();
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(col, j));
      negate = !negate;
    }
    d = d * m.at(col, col);
    RationalFunction inv = m.at(col, col).inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m.at(r, col).is_zero()) continue;
      RationalFunction f = m.at(r, col) * inv;
      for (std::size_t j = col; j < n; ++j) m.at(r, j) -= f * m.at(col, j);
    }
  }
  return negate ? -d : d;
}

Matrix Matrix::adjugate() const {
  if (rows_ != cols_) raise(errc::invalid_argument, "adjugate of non-square matrix");
  const std::size_t n = rows_;
  Matrix adj(n, n);
  if (n == 1) {
    adj.at(0, 0) = RationalFunction(Scalar(1));
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix minor(n - 1, n - 1);
      std::size_t rr = 0;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == i) continue;
        std::size_t cc = 0;
        for (std::size_t c = 0; c < n; ++c) {
          if (c == j) continue;
          minor.at(rr, cc++) = at(r, c);
        }
        ++rr;
      }
      RationalFunction cof = minor.det();
      adj.at(j, i) = ((i + j) % 2 == 0) ? cof : -cof;
    }
  return adj;
}

Matrix Matrix::inverse() const {
  RationalFunction d = det();
  if (d.is_zero()) raise(errc::singular, "matrix determinant is identically zero");
  return adjugate().scaled(d.inverse());
}

std::vector<std::size_t> Matrix::rref() {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t pivot = row;
    while (pivot < rows_ && at(pivot, col).is_zero()) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != row)
      for (std::size_t j = 0; j < cols_; ++j) std::swap(at(pivot, j), at(row, j));
    RationalFunction inv = at(row, col).inverse();
    for (std::size_t j = col; j < cols_; ++j) at(row, j) *= inv;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == row || at(r, col).is_zero()) continue;
      RationalFunction f = at(r, col);
      for (std::size_t j = col; j < cols_; ++j) at(r, j) -= f * at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t Matrix::rank() const {
  Matrix m = *this;
  return m.rref().size();
}

std::vector<std::vector<RationalFunction>> Matrix::nullspace() const {
  Matrix m = *this;
  std::vector<std::size_t> pivots = m.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<std::vector<RationalFunction>> basis;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    std::vector<RationalFunction> v(cols_);
    v[f] = RationalFunction(Scalar(1));
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m.at(i, f);
    // scale so the first nonzero coordinate is 1
    for (std::size_t j = 0; j < cols_; ++j) {
      if (v[j].is_zero()) continue;
      if (!v[j].is_one()) {
        RationalFunction inv = v[j].inverse();
        for (std::size_t k = j; k < cols_; ++k) v[k] *= inv;
      }
      break;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

LinearSolution solve_linear(const Matrix& a, const std::vector<RationalFunction>& b) {
  if (b.size() != a.rows()) raise(errc::invalid_argument, "rhs size mismatch");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  std::vector<std::size_t> pivots = aug.rref();
  LinearSolution sol;
  for (std::size_t p : pivots)
    if (p == a.cols()) return sol; // 0 = 1 row: inconsistent
  sol.consistent = true;
  sol.unique = pivots.size() == a.cols();
  sol.values.assign(a.cols(), RationalFunction());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    sol.values[pivots[i]] = aug.at(i, a.cols());
  return sol;
}

std::size_t scalar_rank(std::vector<std::vector<Scalar>> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][col].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    Scalar inv = m[rank][col].inverse();
    for (std::size_t j = col; j < cols; ++j) m[rank][j] *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][col].is_zero()) continue;
      Scalar f = m[r][col];
      for (std::size_t j = col; j < cols; ++j) m[r][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

} // namespace jetgal
