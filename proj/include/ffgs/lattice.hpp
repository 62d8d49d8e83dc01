#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "ffgs/matrix.hpp"

namespace ffgs {

// A finitely generated R-submodule of K^n, held by its unique Hermite-form
// basis: columns are basis vectors with pivot rows strictly increasing,
// each pivot entry a power of p, zeros above every pivot, and entries of a
// pivot row in earlier columns canonically reduced modulo the pivot.
// Equal lattices therefore have equal basis matrices.
struct Lattice {
  std::size_t ambient = 0;
  QMat basis;  // ambient x rank

  std::size_t rank() const { return basis.cols(); }
  bool operator==(const Lattice& o) const = default;
};

// Hermite-form basis of the R-span of the given column vectors.
Lattice hermite_form(const QMat& generators, const RingSpec& ring);

// Membership x in L, i.e. x is an R-combination of the basis.
bool lattice_contains(const Lattice& l, const std::vector<Rat>& x, const RingSpec& ring);

// Coordinates of the columns of `vectors` in the column span of `basis`
// (over K).  Returns nullopt if some column is outside the span.
std::optional<QMat> coords_in_span(const QMat& basis, const QMat& vectors);

// L1 + L2 inside the same ambient space.
Lattice lattice_sum(const Lattice& a, const Lattice& b, const RingSpec& ring);

struct SmithResult {
  QMat u, d, v;  // u*m*v = d, u and v invertible over R, d diagonal with
                 // entries p^{d_1} | p^{d_2} | ... followed by zeros.
};

// Smith normal form over Z_(p).  All entries of m must lie in R.
SmithResult smith_form(const QMat& m, const RingSpec& ring);

// (I tensor K) intersect R^n for a submodule I of R^n.
Lattice saturate(const Lattice& submodule, const RingSpec& ring);

struct FlatQuotientResult {
  std::size_t rank = 0;  // n - rank(relations)
  QMat projection;       // rank x n, entries in R, kills the relations
  QMat section;          // n x rank, projection * section = identity
};

// R^n modulo the saturation of `relations`: the unique R-flat quotient
// whose base change to K is the K-quotient by the relations.
FlatQuotientResult flat_quotient(std::size_t ambient, const Lattice& relations,
                                 const RingSpec& ring);

// (dim_K(M tensor K), dim_k(M tensor k)); equal for a lattice, which is
// free over the local ring R.
std::pair<std::size_t, std::size_t> kaplansky_ranks(const Lattice& m);

}  // namespace ffgs
