#pragma once

#include <optional>

#include "ffgs/fixtures.hpp"
#include "ffgs/hopf.hpp"

namespace ffgs {

// Structure constants of the module spanned by the columns of `basis`
// inside `ambient`, which must be closed under multiplication, unit,
// comultiplication and antipode, with all transported constants landing in
// `target`.  Violations are InternalContradiction: callers only hand over
// lattices whose closure the theory guarantees.
FiniteFlatHopf transport_structure(const FiniteFlatHopf& ambient, const QMat& basis, Base target);

// Same-rank change of basis; `basis` columns are the new basis vectors in
// the old coordinates.
FiniteFlatHopf change_basis(const FiniteFlatHopf& h, const QMat& basis);

// The primitive idempotents of the underlying (commutative) algebra over
// K, as coordinate vectors; nullopt when the algebra does not split into
// rank-one blocks over K.
std::optional<std::vector<std::vector<Rat>>> split_idempotents(const FiniteFlatHopf& h);

struct ConstantStructure {
  CayleyTable table;      // recovered group, element i = i-th idempotent
  QMat idempotent_basis;  // columns = idempotents in the given coordinates
};

// Recognizes the function algebra of a finite constant group: a full set
// of idempotents (integral when h lives over R) whose comultiplication is
// a group law.
std::optional<ConstantStructure> constant_structure(const FiniteFlatHopf& h);

// Invariant factors d_1 | d_2 | ... of a finite abelian group, smallest
// first, together with a relabeling onto the mixed-radix product order.
struct AbelianType {
  std::vector<std::size_t> factors;
  std::vector<std::size_t> relabel;  // old element index -> canonical index
};
AbelianType abelian_type(const CayleyTable& t);

struct CanonicalResult {
  FiniteFlatHopf hopf;
  bool canonicalized;  // false: returned unchanged, compare by explicit isos
};

// Deterministic canonical form where one exists:
//   rank 1            -> the trivial Hopf algebra,
//   rank 2 (comm+cocomm) -> Oort-Tate shape {1, x}, x^2 = p^k x,
//   constant type     -> constant fixture of the canonical abelian table,
//   dual of the above -> dualized constant canonical form.
// Anything else is returned unchanged with canonicalized = false.
CanonicalResult canonical_form(const FiniteFlatHopf& h);

// canonical_form(a).hopf == canonical_form(b).hopf with both sides
// actually canonicalized.
bool canonically_equal(const FiniteFlatHopf& a, const FiniteFlatHopf& b);

}  // namespace ffgs
