#pragma once

#include "ffgs/lattice.hpp"
#include "ffgs/pushout.hpp"

namespace ffgs {

// A Hopf algebra together with a two-sided ideal of its underlying module,
// presenting the quotient.
struct PresentedHopfQuotient {
  FiniteFlatHopf ambient;
  Lattice ideal;       // multiplication-closed submodule
  bool saturated;      // ideal == saturate(ideal)
  bool coideal_ok;     // Delta(I) in I(x)H + H(x)I and eps(I) = 0, verified
};

// Smallest multiplication-closed R-submodule containing the generators:
// alternating left/right basis multiplication and Hermite reduction.  The
// chain ascends inside a finite free module, so the guard cannot trip.
Lattice two_sided_ideal_closure(const FiniteFlatHopf& h, const QMat& generators,
                                const SaturationOptions& opts = {});

// Checks Delta(I) in I(x)H + H(x)I and eps(I) = 0 for the given ideal.
bool coideal_condition(const FiniteFlatHopf& h, const Lattice& ideal);

// B (x) C modulo the two-sided ideal generated by rho_B(f(a)) - rho_C(g(a)).
PresentedHopfQuotient star_product(const HopfMorphism& f, const HopfMorphism& g);

struct HopfQuotientResult {
  FiniteFlatHopf quotient;
  HopfMorphism projection;  // ambient -> quotient, a Hopf morphism
  QMat section;             // right inverse of the projection matrix
};

// Quotient by the saturation of the ideal: the flat quotient carrying the
// induced Hopf structure.  The unit falling into the saturated ideal is a
// UnitInIdeal error (the quotient would be the empty scheme).
HopfQuotientResult hopf_flat_quotient(const PresentedHopfQuotient& q);

struct CokernelResult {
  FiniteFlatHopf coker_alg;  // coordinate ring of the cokernel
  HopfMorphism proj;         // alg(coker) -> alg(G): the morphism G -> coker
  HopfMorphism input;        // the coordinate map alg(G) -> alg(H) of f
  HopfQuotientResult dual_side;
};

// Cokernel of a morphism of group schemes f: H -> G, given by its
// coordinate map alg(G) -> alg(H).  Computed on the dual side as the flat
// quotient of dual(alg(G)) by the ideal generated by
// f_dual(a) - a(1) * 1, then dualized back.
CokernelResult cokernel(const HopfMorphism& f_coord, const SaturationOptions& opts = {});

struct QuotientResult {
  CokernelResult coker;
  bool rank_multiplicative;  // rank(G) == rank(H) * rank(G/H), advisory
};

// G/H along a closed immersion H -> G (surjective coordinate map, checked
// over R and over the residue field).
QuotientResult quotient(const FiniteFlatHopf& g_alg, const FiniteFlatHopf& h_alg,
                        const HopfMorphism& incl, const SaturationOptions& opts = {});

// The unique p: coker -> Q with p o proj = v, for v: G -> Q killing the
// image of f (i.e. v o f factors through the trivial group).  v is the
// coordinate map alg(Q) -> alg(G); the result maps alg(Q) -> alg(coker).
HopfMorphism induced_from_cokernel(const CokernelResult& ck, const FiniteFlatHopf& q_alg,
                                   const HopfMorphism& v);

}  // namespace ffgs
