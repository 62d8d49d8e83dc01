#pragma once

#include "ffgs/canonical.hpp"
#include "ffgs/hopf.hpp"

namespace ffgs {

struct SaturationOptions {
  std::size_t max_iterations = 64;
};

// Group-scheme morphisms are always represented by their coordinate-ring
// maps, which run the other way: a morphism of schemes X -> Y is the
// HopfMorphism alg(Y) -> alg(X).

struct UpperBoundResult {
  FiniteFlatHopf algebra;  // coordinate ring of U
  HopfMorphism to_M;       // alg(M) -> alg(U): the model map U -> M
  HopfMorphism to_N;       // alg(N) -> alg(U): the morphism U -> N
  QMat basis;              // lattice basis of alg(U) inside alg(M) tensor K
};

// Schematic closure of the graph of psi: the image lattice of
// alg(M) tensor alg(N) -> alg(M)_K, b tensor c -> b * psi(c).
// psi is the coordinate map of a generic group morphism M_K -> N_K,
// i.e. a K-Hopf morphism alg(N)_K -> alg(M)_K.
UpperBoundResult upper_bound(const FiniteFlatHopf& m_alg, const FiniteFlatHopf& n_alg,
                             const GenericHopfMorphism& psi);

struct FlatPushoutResult {
  FiniteFlatHopf algebra;  // F, the flat pushout of B and C over A
  HopfMorphism from_B;     // u: B -> F
  HopfMorphism from_C;     // v: C -> F
  QMat basis;              // lattice basis of F inside B tensor K
  std::size_t rounds = 0;  // multiplication-closure rounds used
};

// The R-flat Hopf pushout of B <- A -> C when the leg g: A -> C is
// generically an isomorphism: the subalgebra of B_K generated by B and
// phi(C), phi = f_K o g_K^{-1}, closed by alternating multiplication
// rounds and Hermite reduction.  Generically isomorphic to B_K.
FlatPushoutResult flat_hopf_pushout(const HopfMorphism& f, const HopfMorphism& g,
                                    const SaturationOptions& opts = {});

struct PushoutResult {
  FiniteFlatHopf p;     // coordinate ring of the pushout group scheme
  HopfMorphism alpha;   // alg(P) -> alg(M): the morphism M -> P
  HopfMorphism beta;    // alg(P) -> alg(N): the model map N -> P
  QMat witness;         // dual-side lattice basis over K, locating the dual
                        // of P inside the preserved generic dual of N
  HopfMorphism leg_m;   // the input legs, kept for universal-property checks
  HopfMorphism leg_n;
};

// Pushout of M <- U -> N in finite flat group schemes, via duals:
// dualize, run the flat Hopf pushout with the generically-iso leg equal to
// the dual of m, dualize back.  The result is generically the generic
// fibre of N.
PushoutResult group_pushout(const FiniteFlatHopf& u_alg, const FiniteFlatHopf& m_alg,
                            const FiniteFlatHopf& n_alg, const HopfMorphism& m,
                            const HopfMorphism& n, const SaturationOptions& opts = {});

// upper_bound followed by group_pushout; the returned alpha generically
// coincides with psi through beta.
PushoutResult lower_bound(const FiniteFlatHopf& m_alg, const FiniteFlatHopf& n_alg,
                          const GenericHopfMorphism& psi, const SaturationOptions& opts = {});

// The unique p: P -> Q with p o alpha = u2 and p o beta = v2, for a finite
// flat commutative Q and a commuting square u2 o m = v2 o n.  u2 and v2
// are coordinate maps alg(Q) -> alg(M) and alg(Q) -> alg(N); the result is
// the coordinate map alg(Q) -> alg(P).  Uniqueness is certified by a
// full-rank check on the stacked system.
HopfMorphism induced_morphism(const PushoutResult& res, const FiniteFlatHopf& q_alg,
                              const HopfMorphism& u2, const HopfMorphism& v2);

}  // namespace ffgs
