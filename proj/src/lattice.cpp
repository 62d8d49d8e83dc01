#include "ffgs/lattice.hpp"

#include <algorithm>

namespace ffgs {

namespace {

// Canonical representative of a modulo p^k * R, where k is the pivot
// valuation.  Write a = p^w * u with u a unit; the class of u modulo
// p^(k-w) has a unique integer representative m in [1, p^(k-w)), and the
// representative of a is p^w * m.  Zero when v(a) >= k.
Rat canonical_residue(const Rat& a, long pivot_val, const RingSpec& ring) {
  if (a == 0) return Rat(0);
  Valuation va = valuation(a, ring);
  long w = va.value();
  if (w >= pivot_val) return Rat(0);
  Rat unit_part = a / pow_p(ring, w);
  mpz_class modulus = 1;
  mpz_class p(static_cast<long>(ring.p()));
  for (long i = 0; i < pivot_val - w; ++i) modulus *= p;
  mpz_class num = unit_part.get_num() % modulus;
  if (num < 0) num += modulus;
  mpz_class inv;
  mpz_class den = unit_part.get_den() % modulus;
  if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), modulus.get_mpz_t()) == 0)
    throw InternalContradiction("canonical_residue: unit part not invertible");
  mpz_class rep = (num * inv) % modulus;
  return Rat(rep) * pow_p(ring, w);
}

}  // namespace

Lattice hermite_form(const QMat& generators, const RingSpec& ring) {
  std::size_t n = generators.rows();
  // Working copy as columns; zero columns dropped as they appear.
  std::vector<std::vector<Rat>> cols;
  for (std::size_t j = 0; j < generators.cols(); ++j) {
    auto c = generators.col(j);
    if (std::any_of(c.begin(), c.end(), [](const Rat& x) { return x != 0; }))
      cols.push_back(std::move(c));
  }

  std::vector<std::size_t> pivot_rows;
  std::vector<long> pivot_vals;
  std::size_t placed = 0;
  for (std::size_t row = 0; row < n && placed < cols.size(); ++row) {
    // Valuation pivot: among the unplaced columns, the one whose entry at
    // this row has minimal valuation.
    std::size_t best = cols.size();
    Valuation best_val = Valuation::infinity();
    for (std::size_t j = placed; j < cols.size(); ++j) {
      if (cols[j][row] == 0) continue;
      Valuation v = valuation(cols[j][row], ring);
      if (best == cols.size() || v < best_val) {
        best = j;
        best_val = v;
      }
    }
    if (best == cols.size()) continue;
    std::swap(cols[placed], cols[best]);

    // Clear the rest of the row with R-multiples of the pivot column.
    for (std::size_t j = placed + 1; j < cols.size(); ++j) {
      if (cols[j][row] == 0) continue;
      Rat f = cols[j][row] / cols[placed][row];
      for (std::size_t i = row; i < n; ++i) cols[j][i] -= f * cols[placed][i];
    }
    // Unit-normalize the pivot to a power of p.
    long pv = best_val.value();
    Rat scale = pow_p(ring, pv) / cols[placed][row];
    for (std::size_t i = row; i < n; ++i) cols[placed][i] *= scale;

    // Reduce this row in all earlier columns to the canonical residue.
    for (std::size_t j = 0; j < placed; ++j) {
      if (cols[j][row] == 0) continue;
      Rat rep = canonical_residue(cols[j][row], pv, ring);
      Rat f = (cols[j][row] - rep) / pow_p(ring, pv);
      for (std::size_t i = row; i < n; ++i) cols[j][i] -= f * cols[placed][i];
    }

    pivot_rows.push_back(row);
    pivot_vals.push_back(pv);
    ++placed;

    // Drop columns that became zero.
    std::size_t keep = placed;
    for (std::size_t j = placed; j < cols.size(); ++j) {
      if (std::any_of(cols[j].begin(), cols[j].end(), [](const Rat& x) { return x != 0; })) {
        if (keep != j) std::swap(cols[keep], cols[j]);
        ++keep;
      }
    }
    cols.resize(keep);
  }

  Lattice l;
  l.ambient = n;
  l.basis = QMat(n, placed);
  for (std::size_t j = 0; j < placed; ++j) l.basis.set_col(j, cols[j]);
  return l;
}

std::optional<QMat> coords_in_span(const QMat& basis, const QMat& vectors) {
  if (basis.cols() == 0) {
    if (!vectors.is_zero()) return std::nullopt;
    return QMat(0, vectors.cols());
  }
  return solve_linear(basis, vectors);
}

bool lattice_contains(const Lattice& l, const std::vector<Rat>& x, const RingSpec& ring) {
  auto coords = coords_in_span(l.basis, QMat::column(x));
  if (!coords) return false;
  return entries_in_base(*coords, Base::R, ring);
}

Lattice lattice_sum(const Lattice& a, const Lattice& b, const RingSpec& ring) {
  if (a.ambient != b.ambient) throw ValidationError("lattice_sum: ambient mismatch");
  return hermite_form(a.basis.hcat(b.basis), ring);
}

SmithResult smith_form(const QMat& m, const RingSpec& ring) {
  if (!entries_in_base(m, Base::R, ring))
    throw LocationError("smith_form: entries must lie in R");
  std::size_t rows = m.rows(), cols = m.cols();
  SmithResult res{QMat::identity(rows), m, QMat::identity(cols)};
  QMat& d = res.d;

  std::size_t t = 0;
  while (t < rows && t < cols) {
    // Global minimal-valuation pivot in the remaining block; over a DVR it
    // divides every remaining entry.
    bool found = false;
    std::size_t pi = t, pj = t;
    Valuation best = Valuation::infinity();
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        if (d.at(i, j) == 0) continue;
        Valuation v = valuation(d.at(i, j), ring);
        if (!found || v < best) {
          found = true;
          best = v;
          pi = i;
          pj = j;
        }
      }
    if (!found) break;
    d.swap_rows(t, pi);
    res.u.swap_rows(t, pi);
    d.swap_cols(t, pj);
    res.v.swap_cols(t, pj);

    // Normalize the pivot to p^val (unit row scaling).
    Rat scale = pow_p(ring, best.value()) / d.at(t, t);
    for (std::size_t j = 0; j < cols; ++j) d.at(t, j) *= scale;
    for (std::size_t j = 0; j < rows; ++j) res.u.at(t, j) *= scale;

    for (std::size_t i = t + 1; i < rows; ++i) {
      if (d.at(i, t) == 0) continue;
      Rat f = d.at(i, t) / d.at(t, t);
      for (std::size_t j = 0; j < cols; ++j) d.at(i, j) -= f * d.at(t, j);
      for (std::size_t j = 0; j < rows; ++j) res.u.at(i, j) -= f * res.u.at(t, j);
    }
    for (std::size_t j = t + 1; j < cols; ++j) {
      if (d.at(t, j) == 0) continue;
      Rat f = d.at(t, j) / d.at(t, t);
      for (std::size_t i = 0; i < rows; ++i) d.at(i, j) -= f * d.at(i, t);
      for (std::size_t i = 0; i < cols; ++i) res.v.at(i, j) -= f * res.v.at(i, t);
    }
    ++t;
  }
  return res;
}

Lattice saturate(const Lattice& submodule, const RingSpec& ring) {
  if (!entries_in_base(submodule.basis, Base::R, ring))
    throw LocationError("saturate: submodule must lie in R^n");
  std::size_t r = submodule.rank();
  if (r == 0) return submodule;
  SmithResult s = smith_form(submodule.basis, ring);
  auto uinv = s.u.inverse();
  if (!uinv) throw InternalContradiction("saturate: U not invertible");
  // span_K(B) = U^{-1} span_K(e_1..e_r), so the intersection with R^n is
  // spanned by the first r columns of U^{-1}.
  return hermite_form(uinv->submatrix(0, 0, submodule.ambient, r), ring);
}

FlatQuotientResult flat_quotient(std::size_t ambient, const Lattice& relations,
                                 const RingSpec& ring) {
  if (relations.ambient != ambient) throw ValidationError("flat_quotient: ambient mismatch");
  Lattice sat = saturate(relations, ring);
  std::size_t s = sat.rank();
  FlatQuotientResult out;
  out.rank = ambient - s;
  if (s == 0) {
    out.projection = QMat::identity(ambient);
    out.section = QMat::identity(ambient);
    return out;
  }
  SmithResult sm = smith_form(sat.basis, ring);
  for (std::size_t i = 0; i < s; ++i)
    if (sm.d.at(i, i) != 1)
      throw InternalContradiction("flat_quotient: saturated module has nontrivial divisor");
  auto uinv = sm.u.inverse();
  if (!uinv) throw InternalContradiction("flat_quotient: U not invertible");
  out.projection = sm.u.submatrix(s, 0, ambient - s, ambient);
  out.section = uinv->submatrix(0, s, ambient, ambient - s);
  return out;
}

std::pair<std::size_t, std::size_t> kaplansky_ranks(const Lattice& m) {
  // A finitely generated torsion-free module over the DVR is free, so the
  // generic and special ranks agree and the K-summand count is zero.
  return {m.rank(), m.rank()};
}

}  // namespace ffgs
