#pragma once

// Dense exact linear algebra over cyclotomic fields.  Everything reduces
// to Gauss-Jordan elimination; since the RREF of a matrix is unique, a
// subspace stored by its RREF basis is a canonical object and subspace
// equality is plain matrix equality.

#include "rankone/field.hpp"

#include <cstddef>
#include <vector>

namespace rankone {

class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Cyclotomic::zero()) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Cyclotomic& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Cyclotomic& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Cyclotomic> row(std::size_t r) const;
  void set_row(std::size_t r, const std::vector<Cyclotomic>& v);

  Matrix transpose() const;
  Matrix scaled(const Cyclotomic& c) const;
  Matrix pow(unsigned long e) const;  // square only
  Cyclotomic trace() const;           // square only
  bool is_zero() const;
  bool is_identity() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Cyclotomic> data_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
bool operator==(const Matrix& a, const Matrix& b);
bool operator!=(const Matrix& a, const Matrix& b);

// Apply m to a column vector: (m v)_i = sum_j m_ij v_j.
std::vector<Cyclotomic> apply(const Matrix& m, const std::vector<Cyclotomic>& v);

struct Echelon {
  Matrix reduced;               // same shape as the input, in RREF
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  // pivot column of each of the first rank rows
};

Echelon rref(Matrix m);

// Right nullspace {v : m v = 0}, returned as a canonical Subspace of k^cols.
class Subspace;
Subspace nullspace(const Matrix& m);

class Subspace {
 public:
  static Subspace zero(std::size_t ambient);
  static Subspace full(std::size_t ambient);
  // Rows of m span the subspace of k^{m.cols()}.
  static Subspace span(const Matrix& m);
  static Subspace span(std::size_t ambient, const std::vector<std::vector<Cyclotomic>>& rows);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }          // RREF, dim x ambient
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const std::vector<Cyclotomic>& v) const;
  bool contains(const Subspace& other) const;

  // Canonical representative of v modulo this subspace (pivot coordinates
  // eliminated).  v is unchanged in length.
  std::vector<Cyclotomic> reduce(std::vector<Cyclotomic> v) const;

 private:
  Subspace(std::size_t ambient, Matrix basis, std::vector<std::size_t> pivots)
      : ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)) {}
  std::size_t ambient_;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
bool operator==(const Subspace& a, const Subspace& b);
bool operator!=(const Subspace& a, const Subspace& b);

// Incrementally maintained RREF basis; the cheap way to run span-growing
// fixpoint loops (ideal closure) without re-eliminating from scratch.
class EchelonBuilder {
 public:
  explicit EchelonBuilder(std::size_t ambient) : ambient_(ambient) {}

  // Returns true when v enlarged the span.
  bool add(std::vector<Cyclotomic> v);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  bool contains(const std::vector<Cyclotomic>& v) const;
  Subspace subspace() const;

 private:
  std::size_t ambient_;
  std::vector<std::size_t> pivots_;                // strictly increasing
  std::vector<std::vector<Cyclotomic>> rows_;      // RREF rows, by pivot
};

}  // namespace rankone
