#pragma once

#include <cstddef>
#include <vector>

#include "ffgs/matrix.hpp"
#include "ffgs/report.hpp"

namespace ffgs {

// A Hopf algebra that is free of finite rank as a module over its base,
// given by structure constants:
//   e_i * e_j   = sum_k mult(i,j,k) e_k
//   Delta(e_i)  = sum_{j,k} comult(i,j,k) e_j tensor e_k
// together with the coordinates of 1, the counit values and the antipode
// matrix (column j = coordinates of S(e_j)).
//
// There is no requirement that e_0 is the unit: bases coming out of
// saturation have no distinguished vector.
class FiniteFlatHopf {
 public:
  FiniteFlatHopf(Base base, RingSpec ring, std::size_t rank, std::vector<Rat> mult,
                 std::vector<Rat> unit, std::vector<Rat> comult, std::vector<Rat> counit,
                 QMat antipode);

  Base base() const { return base_; }
  const RingSpec& ring() const { return ring_; }
  std::size_t rank() const { return rank_; }

  const Rat& mult(std::size_t i, std::size_t j, std::size_t k) const {
    return mult_[(i * rank_ + j) * rank_ + k];
  }
  const Rat& comult(std::size_t i, std::size_t j, std::size_t k) const {
    return comult_[(i * rank_ + j) * rank_ + k];
  }
  const std::vector<Rat>& mult_tensor() const { return mult_; }
  const std::vector<Rat>& comult_tensor() const { return comult_; }
  const std::vector<Rat>& unit() const { return unit_; }
  const std::vector<Rat>& counit() const { return counit_; }
  const QMat& antipode() const { return antipode_; }

  // Flags are computed from the tensors, never taken on trust.
  bool commutative() const;
  bool cocommutative() const;

  // Arithmetic on coordinate vectors, in the base's own arithmetic
  // (residue-located objects reduce mod p).
  std::vector<Rat> product(const std::vector<Rat>& x, const std::vector<Rat>& y) const;
  // Delta(x) as an n x n coefficient matrix, entry (j,k) on e_j tensor e_k.
  QMat comult_of(const std::vector<Rat>& x) const;
  Rat counit_of(const std::vector<Rat>& x) const;
  std::vector<Rat> antipode_of(const std::vector<Rat>& x) const;

  bool operator==(const FiniteFlatHopf& o) const;

 private:
  Base base_;
  RingSpec ring_;
  std::size_t rank_;
  std::vector<Rat> mult_;
  std::vector<Rat> unit_;
  std::vector<Rat> comult_;
  std::vector<Rat> counit_;
  QMat antipode_;
};

// One verdict per axiom: assoc, coassoc, unit, counit, bialgebra,
// antipode-left, antipode-right, entries-in-ring.  Details carry the first
// failing index triple.
CheckReport check_hopf_axioms(const FiniteFlatHopf& h);
void require_hopf(const FiniteFlatHopf& h, const std::string& who);

FiniteFlatHopf dualize(const FiniteFlatHopf& h);

// A morphism of Hopf algebras over the same base; column j of the matrix
// holds the coordinates of the image of the j-th source basis vector.
struct HopfMorphism {
  FiniteFlatHopf source;
  FiniteFlatHopf target;
  QMat matrix;  // target.rank x source.rank
};

// Same data with the matrix over K, relating the K-base-changes of the two
// objects (which may themselves live over R or K).
struct GenericHopfMorphism {
  FiniteFlatHopf source;
  FiniteFlatHopf target;
  QMat matrix;
};

// Verdicts: algebra-map, unit, coalgebra-map, counit.
CheckReport check_morphism(const HopfMorphism& m);
CheckReport check_generic_morphism(const GenericHopfMorphism& m);
void require_morphism(const HopfMorphism& m, const std::string& who);

// Generically an isomorphism: equal ranks and invertible matrix over K.
bool is_model_map(const HopfMorphism& m);

HopfMorphism compose(const HopfMorphism& second, const HopfMorphism& first);

// Transpose of the matrix, between the duals.
HopfMorphism dual_morphism(const HopfMorphism& m);

struct TensorHopf {
  FiniteFlatHopf product;  // rank nB*nC, pair (i,j) at index i*nC + j
  HopfMorphism left;       // b -> b tensor 1
  HopfMorphism right;      // c -> 1 tensor c
};

TensorHopf tensor_hopf(const FiniteFlatHopf& b, const FiniteFlatHopf& c);

// R -> K, R -> k, and the identity on K and k.  Everything else is a
// location error.
FiniteFlatHopf base_change(const FiniteFlatHopf& h, Base target);
HopfMorphism base_change(const HopfMorphism& m, Base target);

}  // namespace ffgs
