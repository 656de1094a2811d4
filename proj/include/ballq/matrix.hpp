#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "ballq/cyclotomic.hpp"

namespace ballq::exact {

/// Dense matrix over a cyclotomic field, row-major.  Sized for the 4x4
/// unitary group elements and the small stacked normal-vector matrices used
/// for mirror intersections; all operations are exact.
class ExactMatrix {
public:
  ExactMatrix() : rows_(0), cols_(0) {}
  ExactMatrix(size_t rows, size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, Cyclotomic()) {}

  static ExactMatrix identity(size_t n);
  static ExactMatrix from_rows(const std::vector<std::vector<Cyclotomic>>& rows);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  Cyclotomic& at(size_t r, size_t c) { return entries_[r * cols_ + c]; }
  const Cyclotomic& at(size_t r, size_t c) const { return entries_[r * cols_ + c]; }

  std::vector<Cyclotomic> row(size_t r) const;

  bool is_zero() const;
  bool is_identity() const;
  /// True when the matrix is a scalar multiple of the identity.
  bool is_scalar() const;
  Cyclotomic trace() const;
  Cyclotomic determinant() const;

  ExactMatrix operator*(const ExactMatrix& o) const;
  ExactMatrix operator-(const ExactMatrix& o) const;
  std::vector<Cyclotomic> apply(const std::vector<Cyclotomic>& v) const;
  ExactMatrix conjugate_transpose() const;

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator!=(const ExactMatrix& a, const ExactMatrix& b) {
    return !(a == b);
  }

  /// Canonical string key for hashing (exact, no floats). Entries are
  /// embedded into `conductor` before serialization so that equal matrices
  /// produce equal keys even when their entries arrived at different
  /// internal conductors; `conductor` must be a common multiple of every
  /// entry conductor. Passing 0 uses the lcm of the entries themselves,
  /// which is only stable across matrices built the same way — callers
  /// deduplicating across computation paths should fix an ambient conductor.
  std::string key(unsigned conductor = 0) const;
  std::string str() const;

private:
  size_t rows_, cols_;
  std::vector<Cyclotomic> entries_;
};

/// Result of Gauss-Jordan elimination over the cyclotomic field.
struct EchelonResult {
  ExactMatrix reduced;              ///< reduced row-echelon form, zero rows dropped
  size_t rank = 0;
  std::vector<size_t> pivot_columns;
  /// Canonical kernel basis (one vector per free column, ascending).
  std::vector<std::vector<Cyclotomic>> kernel;
};

/// Reduced row-echelon form with pivots normalized to 1.  The output depends
/// only on the row span, so identical subspaces yield identical results.
EchelonResult echelonize(const ExactMatrix& m);

/// Rank shortcut.
size_t rank(const ExactMatrix& m);

/// Standard Hermitian inner product conj(a) . b of two coordinate vectors.
Cyclotomic hermitian_inner(const std::vector<Cyclotomic>& a,
                           const std::vector<Cyclotomic>& b);

}  // namespace ballq::exact
