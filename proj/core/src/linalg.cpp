#include "rankone/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace rankone {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Cyclotomic::one();
  return m;
}

std::vector<Cyclotomic> Matrix::row(std::size_t r) const {
  return std::vector<Cyclotomic>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

void Matrix::set_row(std::size_t r, const std::vector<Cyclotomic>& v) {
  if (v.size() != cols_) throw std::invalid_argument("set_row: length mismatch");
  for (std::size_t c = 0; c < cols_; ++c) data_[r * cols_ + c] = v[c];
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
  return out;
}

Matrix Matrix::scaled(const Cyclotomic& c) const {
  Matrix out = *this;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) out.at(r, k) *= c;
  return out;
}

Matrix Matrix::pow(unsigned long e) const {
  if (rows_ != cols_) throw std::invalid_argument("pow: matrix not square");
  Matrix result = Matrix::identity(rows_);
  Matrix base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

Cyclotomic Matrix::trace() const {
  if (rows_ != cols_) throw std::invalid_argument("trace: matrix not square");
  Cyclotomic t = Cyclotomic::zero();
  for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

bool Matrix::is_zero() const {
  for (const Cyclotomic& c : data_)
    if (!c.is_zero()) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  return *this == Matrix::identity(rows_);
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix +: shape mismatch");
  Matrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out.at(r, c) = a.at(r, c) + b.at(r, c);
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix -: shape mismatch");
  Matrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out.at(r, c) = a.at(r, c) - b.at(r, c);
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix *: shape mismatch");
  Matrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Cyclotomic& av = a.at(r, k);
      if (av.is_zero()) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) {
        const Cyclotomic& bv = b.at(k, c);
        if (bv.is_zero()) continue;
        out.at(r, c) += av * bv;
      }
    }
  }
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (a.at(r, c) != b.at(r, c)) return false;
  return true;
}

bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

std::vector<Cyclotomic> apply(const Matrix& m, const std::vector<Cyclotomic>& v) {
  if (v.size() != m.cols()) throw std::invalid_argument("apply: length mismatch");
  std::vector<Cyclotomic> out(m.rows(), Cyclotomic::zero());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m.at(r, c).is_zero() || v[c].is_zero()) continue;
      out[r] += m.at(r, c) * v[c];
    }
  return out;
}

Echelon rref(Matrix m) {
  Echelon out;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < m.cols() && lead < m.rows(); ++col) {
    std::size_t pivot = lead;
    while (pivot < m.rows() && m.at(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != lead)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(pivot, c), m.at(lead, c));
    Cyclotomic inv = m.at(lead, col).inverse();
    for (std::size_t c = col; c < m.cols(); ++c) m.at(lead, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead || m.at(r, col).is_zero()) continue;
      Cyclotomic factor = m.at(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m.at(r, c) -= factor * m.at(lead, c);
    }
    out.pivots.push_back(col);
    ++lead;
  }
  out.rank = out.pivots.size();
  out.reduced = std::move(m);
  return out;
}

Subspace Subspace::zero(std::size_t ambient) {
  return Subspace(ambient, Matrix(0, ambient), {});
}

Subspace Subspace::full(std::size_t ambient) {
  std::vector<std::size_t> pivots(ambient);
  for (std::size_t i = 0; i < ambient; ++i) pivots[i] = i;
  return Subspace(ambient, Matrix::identity(ambient), std::move(pivots));
}

Subspace Subspace::span(const Matrix& m) {
  Echelon e = rref(m);
  Matrix basis(e.rank, m.cols());
  for (std::size_t r = 0; r < e.rank; ++r) basis.set_row(r, e.reduced.row(r));
  return Subspace(m.cols(), std::move(basis), std::move(e.pivots));
}

Subspace Subspace::span(std::size_t ambient, const std::vector<std::vector<Cyclotomic>>& rows) {
  Matrix m(rows.size(), ambient);
  for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
  return span(m);
}

std::vector<Cyclotomic> Subspace::reduce(std::vector<Cyclotomic> v) const {
  if (v.size() != ambient_) throw std::invalid_argument("reduce: length mismatch");
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    const Cyclotomic& c = v[pivots_[i]];
    if (c.is_zero()) continue;
    Cyclotomic factor = c;  // basis pivot entry is 1
    for (std::size_t k = pivots_[i]; k < ambient_; ++k) {
      if (basis_.at(i, k).is_zero()) continue;
      v[k] -= factor * basis_.at(i, k);
    }
  }
  return v;
}

bool Subspace::contains(const std::vector<Cyclotomic>& v) const {
  std::vector<Cyclotomic> r = reduce(v);
  for (const Cyclotomic& c : r)
    if (!c.is_zero()) return false;
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw std::invalid_argument("contains: ambient mismatch");
  if (other.dim() > dim()) return false;
  for (std::size_t r = 0; r < other.basis_.rows(); ++r)
    if (!contains(other.basis_.row(r))) return false;
  return true;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw std::invalid_argument("sum: ambient mismatch");
  Matrix stacked(a.dim() + b.dim(), a.ambient());
  for (std::size_t r = 0; r < a.dim(); ++r) stacked.set_row(r, a.basis().row(r));
  for (std::size_t r = 0; r < b.dim(); ++r) stacked.set_row(a.dim() + r, b.basis().row(r));
  return Subspace::span(stacked);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw std::invalid_argument("intersect: ambient mismatch");
  if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(a.ambient());
  // Kernel method: solve u A + w B = 0; the u-parts give the coefficients
  // of intersection vectors in terms of A's basis.
  Matrix m(a.ambient(), a.dim() + b.dim());
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.ambient(); ++c) m.at(c, r) = a.basis().at(r, c);
  for (std::size_t r = 0; r < b.dim(); ++r)
    for (std::size_t c = 0; c < b.ambient(); ++c) m.at(c, a.dim() + r) = b.basis().at(r, c);
  Subspace ker = nullspace(m);
  std::vector<std::vector<Cyclotomic>> rows;
  rows.reserve(ker.dim());
  for (std::size_t r = 0; r < ker.dim(); ++r) {
    std::vector<Cyclotomic> v(a.ambient(), Cyclotomic::zero());
    for (std::size_t i = 0; i < a.dim(); ++i) {
      const Cyclotomic& u = ker.basis().at(r, i);
      if (u.is_zero()) continue;
      for (std::size_t c = 0; c < a.ambient(); ++c) v[c] += u * a.basis().at(i, c);
    }
    rows.push_back(std::move(v));
  }
  return Subspace::span(a.ambient(), rows);
}

bool operator==(const Subspace& a, const Subspace& b) {
  return a.ambient() == b.ambient() && a.basis() == b.basis();
}

bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

bool EchelonBuilder::add(std::vector<Cyclotomic> v) {
  if (v.size() != ambient_) throw std::invalid_argument("EchelonBuilder: length mismatch");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Cyclotomic& c = v[pivots_[i]];
    if (c.is_zero()) continue;
    Cyclotomic factor = c;
    for (std::size_t k = pivots_[i]; k < ambient_; ++k) {
      if (rows_[i][k].is_zero()) continue;
      v[k] -= factor * rows_[i][k];
    }
  }
  std::size_t pivot = ambient_;
  for (std::size_t k = 0; k < ambient_; ++k) {
    if (!v[k].is_zero()) {
      pivot = k;
      break;
    }
  }
  if (pivot == ambient_) return false;
  Cyclotomic inv = v[pivot].inverse();
  for (std::size_t k = pivot; k < ambient_; ++k) v[k] *= inv;
  // Back-eliminate the new pivot column from the existing rows.
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Cyclotomic& c = rows_[i][pivot];
    if (c.is_zero()) continue;
    Cyclotomic factor = c;
    for (std::size_t k = pivot; k < ambient_; ++k) {
      if (v[k].is_zero()) continue;
      rows_[i][k] -= factor * v[k];
    }
  }
  std::size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < pivot) ++pos;
  pivots_.insert(pivots_.begin() + pos, pivot);
  rows_.insert(rows_.begin() + pos, std::move(v));
  return true;
}

bool EchelonBuilder::contains(const std::vector<Cyclotomic>& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("EchelonBuilder: length mismatch");
  std::vector<Cyclotomic> w = v;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Cyclotomic& c = w[pivots_[i]];
    if (c.is_zero()) continue;
    Cyclotomic factor = c;
    for (std::size_t k = pivots_[i]; k < ambient_; ++k) {
      if (rows_[i][k].is_zero()) continue;
      w[k] -= factor * rows_[i][k];
    }
  }
  for (const Cyclotomic& c : w)
    if (!c.is_zero()) return false;
  return true;
}

Subspace EchelonBuilder::subspace() const {
  Matrix m(rows_.size(), ambient_);
  for (std::size_t r = 0; r < rows_.size(); ++r) m.set_row(r, rows_[r]);
  // Rows are already in RREF order; span() re-derives pivots cheaply.
  return Subspace::span(m);
}

Subspace nullspace(const Matrix& m) {
  Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<Cyclotomic>> rows;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Cyclotomic> v(m.cols(), Cyclotomic::zero());
    v[f] = Cyclotomic::one();
    for (std::size_t i = 0; i < e.rank; ++i) v[e.pivots[i]] = -e.reduced.at(i, f);
    rows.push_back(std::move(v));
  }
  return Subspace::span(m.cols(), rows);
}

}  // namespace rankone
