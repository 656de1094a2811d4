#include "ballq/matrix.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ballq::exact {

ExactMatrix ExactMatrix::identity(size_t n) {
  ExactMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

ExactMatrix ExactMatrix::from_rows(
    const std::vector<std::vector<Cyclotomic>>& rows) {
  if (rows.empty()) return ExactMatrix(0, 0);
  const size_t cols = rows.front().size();
  ExactMatrix m(rows.size(), cols);
  for (size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw std::invalid_argument("ragged rows in matrix construction");
    for (size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

std::vector<Cyclotomic> ExactMatrix::row(size_t r) const {
  std::vector<Cyclotomic> out(cols_);
  for (size_t c = 0; c < cols_; ++c) out[c] = at(r, c);
  return out;
}

bool ExactMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

bool ExactMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (size_t r = 0; r < rows_; ++r)
    for (size_t c = 0; c < cols_; ++c) {
      if (r == c ? !at(r, c).is_one() : !at(r, c).is_zero()) return false;
    }
  return true;
}

bool ExactMatrix::is_scalar() const {
  if (rows_ != cols_ || rows_ == 0) return false;
  const Cyclotomic& d = at(0, 0);
  for (size_t r = 0; r < rows_; ++r)
    for (size_t c = 0; c < cols_; ++c) {
      if (r == c ? at(r, c) != d : !at(r, c).is_zero()) return false;
    }
  return true;
}

Cyclotomic ExactMatrix::trace() const {
  if (rows_ != cols_) throw std::invalid_argument("trace of non-square matrix");
  Cyclotomic t;
  for (size_t i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

Cyclotomic ExactMatrix::determinant() const {
  if (rows_ != cols_)
    throw std::invalid_argument("determinant of non-square matrix");
  // Fraction-free style elimination is unnecessary at this size; plain
  // Gaussian elimination with exact division keeps pivots canonical.
  ExactMatrix work = *this;
  Cyclotomic det = Rational(1);
  const size_t n = rows_;
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && work.at(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return Cyclotomic();
    if (pivot != col) {
      for (size_t c = 0; c < n; ++c)
        std::swap(work.at(pivot, c), work.at(col, c));
      det = -det;
    }
    det *= work.at(col, col);
    const Cyclotomic inv = work.at(col, col).inverse();
    for (size_t r = col + 1; r < n; ++r) {
      if (work.at(r, col).is_zero()) continue;
      const Cyclotomic factor = work.at(r, col) * inv;
      for (size_t c = col; c < n; ++c)
        work.at(r, c) -= factor * work.at(col, c);
    }
  }
  return det;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
  if (cols_ != o.rows_)
    throw std::invalid_argument("matrix product shape mismatch");
  ExactMatrix out(rows_, o.cols_);
  for (size_t r = 0; r < rows_; ++r)
    for (size_t k = 0; k < cols_; ++k) {
      const Cyclotomic& a = at(r, k);
      if (a.is_zero()) continue;
      for (size_t c = 0; c < o.cols_; ++c) {
        const Cyclotomic& b = o.at(k, c);
        if (b.is_zero()) continue;
        out.at(r, c) += a * b;
      }
    }
  return out;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("matrix difference shape mismatch");
  ExactMatrix out(rows_, cols_);
  for (size_t i = 0; i < entries_.size(); ++i)
    out.entries_[i] = entries_[i] - o.entries_[i];
  return out;
}

std::vector<Cyclotomic> ExactMatrix::apply(
    const std::vector<Cyclotomic>& v) const {
  if (v.size() != cols_)
    throw std::invalid_argument("matrix-vector shape mismatch");
  std::vector<Cyclotomic> out(rows_);
  for (size_t r = 0; r < rows_; ++r)
    for (size_t c = 0; c < cols_; ++c) {
      if (at(r, c).is_zero() || v[c].is_zero()) continue;
      out[r] += at(r, c) * v[c];
    }
  return out;
}

ExactMatrix ExactMatrix::conjugate_transpose() const {
  ExactMatrix out(cols_, rows_);
  for (size_t r = 0; r < rows_; ++r)
    for (size_t c = 0; c < cols_; ++c) out.at(c, r) = at(r, c).conj();
  return out;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (size_t i = 0; i < a.entries_.size(); ++i)
    if (a.entries_[i] != b.entries_[i]) return false;
  return true;
}

std::string ExactMatrix::key(unsigned conductor) const {
  unsigned shared = conductor;
  if (shared == 0) {
    shared = 1;
    for (const auto& e : entries_) shared = std::lcm(shared, e.conductor());
  }
  std::string out;
  out.reserve(entries_.size() * 8);
  out += std::to_string(rows_);
  out += 'x';
  out += std::to_string(cols_);
  out += ':';
  for (const auto& e : entries_) e.embedded(shared).append_key(out);
  return out;
}

std::string ExactMatrix::str() const {
  std::ostringstream os;
  for (size_t r = 0; r < rows_; ++r) {
    os << '[';
    for (size_t c = 0; c < cols_; ++c) {
      if (c) os << ", ";
      os << at(r, c).str();
    }
    os << "]\n";
  }
  return os.str();
}

EchelonResult echelonize(const ExactMatrix& m) {
  ExactMatrix work = m;
  const size_t nrows = m.rows(), ncols = m.cols();
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t col = 0; col < ncols && row < nrows; ++col) {
    size_t pr = row;
    while (pr < nrows && work.at(pr, col).is_zero()) ++pr;
    if (pr == nrows) continue;
    if (pr != row)
      for (size_t c = 0; c < ncols; ++c) std::swap(work.at(pr, c), work.at(row, c));
    const Cyclotomic inv = work.at(row, col).inverse();
    for (size_t c = col; c < ncols; ++c) work.at(row, c) *= inv;
    for (size_t r = 0; r < nrows; ++r) {
      if (r == row || work.at(r, col).is_zero()) continue;
      const Cyclotomic factor = work.at(r, col);
      for (size_t c = col; c < ncols; ++c)
        work.at(r, c) -= factor * work.at(row, c);
    }
    pivots.push_back(col);
    ++row;
  }

  EchelonResult res;
  res.rank = pivots.size();
  res.pivot_columns = pivots;
  res.reduced = ExactMatrix(res.rank, ncols);
  for (size_t r = 0; r < res.rank; ++r)
    for (size_t c = 0; c < ncols; ++c) res.reduced.at(r, c) = work.at(r, c);

  // Kernel basis: one vector per free column, with a 1 in the free column and
  // the negated reduced-row entries in the pivot columns.
  std::vector<bool> is_pivot(ncols, false);
  for (size_t p : pivots) is_pivot[p] = true;
  for (size_t col = 0; col < ncols; ++col) {
    if (is_pivot[col]) continue;
    std::vector<Cyclotomic> v(ncols);
    v[col] = Rational(1);
    for (size_t r = 0; r < res.rank; ++r)
      v[pivots[r]] = -res.reduced.at(r, col);
    res.kernel.push_back(std::move(v));
  }
  return res;
}

size_t rank(const ExactMatrix& m) { return echelonize(m).rank; }

Cyclotomic hermitian_inner(const std::vector<Cyclotomic>& a,
                           const std::vector<Cyclotomic>& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("inner product shape mismatch");
  Cyclotomic s;
  for (size_t i = 0; i < a.size(); ++i) s += a[i].conj() * b[i];
  return s;
}

}  // namespace ballq::exact
