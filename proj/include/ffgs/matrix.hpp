#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ffgs/scalars.hpp"

namespace ffgs {

// Dense matrix over the rationals.  Everything here is exact; sizes are
// desk scale (ranks <= ~64), so plain Gaussian elimination over Q is fine.
class QMat {
 public:
  QMat() : rows_(0), cols_(0) {}
  QMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static QMat identity(std::size_t n);
  static QMat from_rows(const std::vector<std::vector<Rat>>& rows);
  static QMat column(const std::vector<Rat>& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  std::vector<Rat> col(std::size_t j) const;
  std::vector<Rat> row(std::size_t i) const;
  void set_col(std::size_t j, const std::vector<Rat>& v);

  QMat transpose() const;
  bool is_zero() const;
  bool operator==(const QMat& o) const = default;

  // Horizontal concatenation [*this | right].
  QMat hcat(const QMat& right) const;
  QMat submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);

  friend QMat operator*(const QMat& a, const QMat& b);
  friend QMat operator+(const QMat& a, const QMat& b);
  friend QMat operator-(const QMat& a, const QMat& b);
  friend QMat operator*(const Rat& c, const QMat& a);

  std::size_t rank() const;
  Rat det() const;
  std::optional<QMat> inverse() const;

  // Basis of the right nullspace, as columns.
  QMat kernel() const;

  // Coefficients of the characteristic polynomial det(xI - A), lowest
  // degree first (size n+1, leading coefficient 1).
  std::vector<Rat> char_poly() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Rat> a_;
};

std::vector<Rat> mat_vec(const QMat& a, const std::vector<Rat>& x);

// Solves A X = B exactly.  Returns nullopt when inconsistent.  When the
// system is underdetermined an arbitrary solution is returned and *unique
// is set to false.
std::optional<QMat> solve_linear(const QMat& a, const QMat& b, bool* unique = nullptr);

// Kronecker product, indexed so that (i1*r2+i2, j1*c2+j2) = a(i1,j1)*b(i2,j2).
QMat kronecker(const QMat& a, const QMat& b);

bool entries_in_base(const QMat& a, Base base, const RingSpec& ring);
QMat normalize_entries(const QMat& a, Base base, const RingSpec& ring);

}  // namespace ffgs
