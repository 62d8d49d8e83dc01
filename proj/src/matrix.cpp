#include "ffgs/matrix.hpp"

#include <algorithm>

namespace ffgs {

QMat QMat::identity(std::size_t n) {
  QMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMat QMat::from_rows(const std::vector<std::vector<Rat>>& rows) {
  if (rows.empty()) return QMat();
  QMat m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw ValidationError("ragged matrix literal");
    for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

QMat QMat::column(const std::vector<Rat>& v) {
  QMat m(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m.at(i, 0) = v[i];
  return m;
}

std::vector<Rat> QMat::col(std::size_t j) const {
  std::vector<Rat> v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

std::vector<Rat> QMat::row(std::size_t i) const {
  std::vector<Rat> v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

void QMat::set_col(std::size_t j, const std::vector<Rat>& v) {
  for (std::size_t i = 0; i < rows_; ++i) at(i, j) = v[i];
}

QMat QMat::transpose() const {
  QMat m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  return m;
}

bool QMat::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Rat& x) { return x == 0; });
}

QMat QMat::hcat(const QMat& right) const {
  if (rows_ != right.rows_) throw ValidationError("hcat: row mismatch");
  QMat m(rows_, cols_ + right.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
    for (std::size_t j = 0; j < right.cols_; ++j) m.at(i, cols_ + j) = right.at(i, j);
  }
  return m;
}

QMat QMat::submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  QMat m(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) m.at(i, j) = at(r0 + i, c0 + j);
  return m;
}

void QMat::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void QMat::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

QMat operator*(const QMat& a, const QMat& b) {
  if (a.cols_ != b.rows_) throw ValidationError("matrix product: shape mismatch");
  QMat m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t l = 0; l < a.cols_; ++l) {
      const Rat& x = a.at(i, l);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (b.at(l, j) == 0) continue;
        m.at(i, j) += x * b.at(l, j);
      }
    }
  return m;
}

QMat operator+(const QMat& a, const QMat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ValidationError("matrix sum: shape mismatch");
  QMat m(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.a_.size(); ++i) m.a_[i] = a.a_[i] + b.a_[i];
  return m;
}

QMat operator-(const QMat& a, const QMat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ValidationError("matrix difference: shape mismatch");
  QMat m(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.a_.size(); ++i) m.a_[i] = a.a_[i] - b.a_[i];
  return m;
}

QMat operator*(const Rat& c, const QMat& a) {
  QMat m(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.a_.size(); ++i) m.a_[i] = c * a.a_[i];
  return m;
}

std::vector<Rat> mat_vec(const QMat& a, const std::vector<Rat>& x) {
  if (a.cols() != x.size()) throw ValidationError("mat_vec: shape mismatch");
  std::vector<Rat> y(a.rows());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    if (x[j] == 0) continue;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (a.at(i, j) == 0) continue;
      y[i] += a.at(i, j) * x[j];
    }
  }
  return y;
}

namespace {

// Row echelon over Q, in place.  Returns pivot columns.
std::vector<std::size_t> row_reduce(QMat& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t sel = r;
    while (sel < m.rows() && m.at(sel, c) == 0) ++sel;
    if (sel == m.rows()) continue;
    m.swap_rows(r, sel);
    Rat inv = 1 / m.at(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      Rat f = m.at(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t QMat::rank() const {
  QMat m = *this;
  return row_reduce(m).size();
}

Rat QMat::det() const {
  if (rows_ != cols_) throw ValidationError("det: matrix not square");
  QMat m = *this;
  Rat d(1);
  for (std::size_t c = 0; c < cols_; ++c) {
    std::size_t sel = c;
    while (sel < rows_ && m.at(sel, c) == 0) ++sel;
    if (sel == rows_) return Rat(0);
    if (sel != c) {
      m.swap_rows(c, sel);
      d = -d;
    }
    d *= m.at(c, c);
    Rat inv = 1 / m.at(c, c);
    for (std::size_t i = c + 1; i < rows_; ++i) {
      if (m.at(i, c) == 0) continue;
      Rat f = m.at(i, c) * inv;
      for (std::size_t j = c; j < cols_; ++j) m.at(i, j) -= f * m.at(c, j);
    }
  }
  return d;
}

std::optional<QMat> QMat::inverse() const {
  if (rows_ != cols_) throw ValidationError("inverse: matrix not square");
  QMat aug = hcat(identity(rows_));
  auto pivots = row_reduce(aug);
  std::size_t left = 0;
  for (auto c : pivots)
    if (c < rows_) ++left;
  if (left != rows_) return std::nullopt;
  return aug.submatrix(0, rows_, rows_, rows_);
}

QMat QMat::kernel() const {
  QMat m = *this;
  auto pivots = row_reduce(m);
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < cols_; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  QMat ker(cols_, free_cols.size());
  for (std::size_t f = 0; f < free_cols.size(); ++f) {
    std::size_t fc = free_cols[f];
    ker.at(fc, f) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) ker.at(pivots[i], f) = -m.at(i, fc);
  }
  return ker;
}

std::vector<Rat> QMat::char_poly() const {
  if (rows_ != cols_) throw ValidationError("char_poly: matrix not square");
  // Faddeev-LeVerrier; exact over Q.
  std::size_t n = rows_;
  std::vector<Rat> c(n + 1);
  c[n] = 1;
  QMat m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = (*this) * m;
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) += c[n - k + 1];
    QMat am = (*this) * m;
    Rat tr(0);
    for (std::size_t i = 0; i < n; ++i) tr += am.at(i, i);
    c[n - k] = -tr / Rat(static_cast<long>(k));
  }
  return c;
}

std::optional<QMat> solve_linear(const QMat& a, const QMat& b, bool* unique) {
  if (a.rows() != b.rows()) throw ValidationError("solve_linear: shape mismatch");
  QMat aug = a.hcat(b);
  auto pivots = row_reduce(aug);
  // Consistency: no pivot may land in the right-hand block.
  for (auto c : pivots)
    if (c >= a.cols()) return std::nullopt;
  if (unique) *unique = pivots.size() == a.cols();
  QMat x(a.cols(), b.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) x.at(pivots[i], j) = aug.at(i, a.cols() + j);
  return x;
}

QMat kronecker(const QMat& a, const QMat& b) {
  QMat m(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i1 = 0; i1 < a.rows(); ++i1)
    for (std::size_t j1 = 0; j1 < a.cols(); ++j1) {
      if (a.at(i1, j1) == 0) continue;
      for (std::size_t i2 = 0; i2 < b.rows(); ++i2)
        for (std::size_t j2 = 0; j2 < b.cols(); ++j2)
          m.at(i1 * b.rows() + i2, j1 * b.cols() + j2) = a.at(i1, j1) * b.at(i2, j2);
    }
  return m;
}

bool entries_in_base(const QMat& a, Base base, const RingSpec& ring) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!in_base(a.at(i, j), base, ring)) return false;
  return true;
}

QMat normalize_entries(const QMat& a, Base base, const RingSpec& ring) {
  QMat m(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m.at(i, j) = normalize_in(a.at(i, j), base, ring);
  return m;
}

}  // namespace ffgs
