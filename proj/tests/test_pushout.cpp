#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ffgs/pushout.hpp"

using namespace ffgs;

namespace {

QMat cols(const std::vector<std::vector<Rat>>& columns) {
  QMat m(columns.empty() ? 0 : columns[0].size(), columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) m.set_col(j, columns[j]);
  return m;
}

// The generic isomorphism mu2_K -> Z/2_K as a coordinate map:
// f0 -> (1+t)/2, f1 -> (1-t)/2 in the basis {1, t}.
GenericHopfMorphism mu2_z2_generic_iso(const RingSpec& ring) {
  FiniteFlatHopf mu2 = mu_fixture(2, ring);
  FiniteFlatHopf z2 = constant_fixture(cyclic_group(2), ring);
  return GenericHopfMorphism{z2, mu2,
                             cols({{Rat(1, 2), Rat(1, 2)}, {Rat(1, 2), Rat(-1, 2)}})};
}

// All group morphisms OT(a) -> OT(a') over Z_(2), as coordinate maps
// alg(OT(a')) -> alg(OT(a)).  Unit and counit force the matrix to be
// diag(1, beta); the remaining constraints reduce to beta*(a*beta - a') = 0,
// so beta is 0 or a'/a, kept when integral.  This is the exhaustive
// order-2 oracle.
std::vector<HopfMorphism> order2_morphisms(long a, long aprime, const RingSpec& ring) {
  FiniteFlatHopf src = oort_tate_order2(aprime, ring);
  FiniteFlatHopf tgt = oort_tate_order2(a, ring);
  std::vector<HopfMorphism> out;
  Rat ratio = Rat(aprime) / Rat(a);
  for (Rat beta : std::vector<Rat>{Rat(0), ratio}) {
    if (!in_R(beta, ring)) continue;
    HopfMorphism hm{src, tgt, cols({{1, 0}, {0, beta}})};
    if (check_morphism(hm).all_pass()) out.push_back(hm);
  }
  return out;
}

}  // namespace

TEST_CASE("order-2 morphism oracle sanity") {
  RingSpec r2(2);
  // Z/2 -> mu2 exists and is nontrivial; mu2 -> Z/2 is only trivial
  CHECK(order2_morphisms(1, 2, r2).size() == 2);
  CHECK(order2_morphisms(2, 1, r2).size() == 1);
  CHECK(order2_morphisms(1, 1, r2).size() == 2);
  CHECK(order2_morphisms(2, 2, r2).size() == 2);
}

TEST_CASE("upper bound of mu2 and Z/2 is the constant group") {
  RingSpec r2(2);
  FiniteFlatHopf mu2 = mu_fixture(2, r2);
  FiniteFlatHopf z2 = constant_fixture(cyclic_group(2), r2);
  UpperBoundResult ub = upper_bound(mu2, z2, mu2_z2_generic_iso(r2));
  CHECK(ub.basis == cols({{Rat(1, 2), Rat(1, 2)}, {0, 1}}));
  CHECK(canonical_form(ub.algebra).hopf == oort_tate_order2(1, r2));
  CHECK(is_model_map(ub.to_M));
  CHECK(valuation(ub.to_M.matrix.det(), r2) == Valuation::of(1));
  CHECK(check_morphism(ub.to_N).all_pass());
}

TEST_CASE("upper bound degenerate cases") {
  RingSpec r2(2);
  FiniteFlatHopf mu2 = mu_fixture(2, r2);
  SUBCASE("closure of the graph of the constant map is M itself") {
    FiniteFlatHopf triv = trivial_fixture(r2);
    GenericHopfMorphism psi{triv, mu2, cols({{1, 0}})};
    UpperBoundResult ub = upper_bound(mu2, triv, psi);
    CHECK(ub.algebra == mu2);
    CHECK(ub.to_M.matrix == QMat::identity(2));
  }
  SUBCASE("identity graph") {
    GenericHopfMorphism psi{mu2, mu2, QMat::identity(2)};
    UpperBoundResult ub = upper_bound(mu2, mu2, psi);
    CHECK(ub.algebra == mu2);
    CHECK(ub.to_M.matrix == QMat::identity(2));
    CHECK(ub.to_N.matrix == QMat::identity(2));
  }
  SUBCASE("rejects a non-morphism") {
    FiniteFlatHopf z2 = constant_fixture(cyclic_group(2), r2);
    GenericHopfMorphism bad{z2, mu2, cols({{1, 1}, {0, 1}})};
    CHECK_THROWS_AS(upper_bound(mu2, z2, bad), ValidationError);
  }
}

TEST_CASE("flat hopf pushout") {
  RingSpec r2(2);
  FiniteFlatHopf mu2 = mu_fixture(2, r2);
  FiniteFlatHopf z2 = constant_fixture(cyclic_group(2), r2);

  SUBCASE("pushout along an integral isomorphism is B") {
    // A = C = dual of Z/2 functions, B = dual of mu2, f = dual of the
    // model map, g = identity
    FiniteFlatHopf a = dualize(z2);
    FiniteFlatHopf b = dualize(mu2);
    HopfMorphism model{mu2, z2, cols({{1, 1}, {1, -1}})};
    HopfMorphism f = dual_morphism(model);
    HopfMorphism g{a, a, QMat::identity(2)};
    FlatPushoutResult fp = flat_hopf_pushout(f, g);
    CHECK(fp.algebra == b);
    CHECK(fp.from_B.matrix == QMat::identity(2));
    CHECK(fp.from_B.matrix * f.matrix == fp.from_C.matrix * g.matrix);
  }
  SUBCASE("the leg g must be a model map") {
    FiniteFlatHopf triv = trivial_fixture(r2);
    HopfMorphism f{trivial_fixture(r2), mu2, cols({{1, 0}})};
    HopfMorphism g{trivial_fixture(r2), triv, QMat::identity(1)};
    CHECK_NOTHROW(flat_hopf_pushout(f, g));
    HopfMorphism collapse{mu2, triv, cols({{1}, {1}})};
    HopfMorphism f2{mu2, mu2, QMat::identity(2)};
    CHECK_THROWS_AS(flat_hopf_pushout(f2, collapse), ValidationError);
  }
  SUBCASE("iteration guard") {
    HopfMorphism f{z2, z2, QMat::identity(2)};
    SaturationOptions opts;
    opts.max_iterations = 0;
    CHECK_THROWS_AS(flat_hopf_pushout(f, f, opts), NonTerminating);
  }
}

TEST_CASE("group pushout of the order-2 model situation") {
  RingSpec r2(2);
  FiniteFlatHopf mu2 = mu_fixture(2, r2);
  FiniteFlatHopf z2 = constant_fixture(cyclic_group(2), r2);
  UpperBoundResult ub = upper_bound(mu2, z2, mu2_z2_generic_iso(r2));
  PushoutResult res = group_pushout(ub.algebra, mu2, z2, ub.to_M, ub.to_N);

  // the oracle: over Z_(2) the only order-2 group schemes are OT(1) and
  // OT(2); P receives mu2 and is generically Z/2, so it must be mu2
  CHECK(canonical_form(res.p).hopf == oort_tate_order2(2, r2));
  CHECK(is_model_map(res.beta));
  CHECK(valuation(res.beta.matrix.det(), r2) == Valuation::of(1));
  // generic-fibre witness: beta is invertible over K
  CHECK(res.beta.matrix.inverse().has_value());

  SUBCASE("functoriality of duals: the manual route agrees exactly") {
    HopfMorphism f = dual_morphism(ub.to_N);
    HopfMorphism g = dual_morphism(ub.to_M);
    FlatPushoutResult fp = flat_hopf_pushout(f, g);
    CHECK(dualize(fp.algebra) == res.p);
    CHECK(dual_morphism(fp.from_B).matrix == res.beta.matrix);
    CHECK(dual_morphism(fp.from_C).matrix == res.alpha.matrix);
  }
}

TEST_CASE("pushout along an isomorphism returns N") {
  RingSpec r2(2);
  FiniteFlatHopf mu2 = mu_fixture(2, r2);
  HopfMorphism m{mu2, mu2, QMat::identity(2)};
  PushoutResult res = group_pushout(mu2, mu2, mu2, m, m);
  CHECK(res.p == mu2);
  CHECK(res.beta.matrix == QMat::identity(2));
}

TEST_CASE("upper bound independence on the mu2/mu2 diagram") {
  RingSpec r2(2);
  FiniteFlatHopf mu2 = mu_fixture(2, r2);
  GenericHopfMorphism psi{mu2, mu2, QMat::identity(2)};
  UpperBoundResult ub = upper_bound(mu2, mu2, psi);
  PushoutResult p1 = group_pushout(ub.algebra, mu2, mu2, ub.to_M, ub.to_N);

  // A strictly larger upper bound: adjoin (1-t)/2, the etale order.
  QMat wide = cols({{1, 0}, {Rat(1, 2), Rat(-1, 2)}});
  FiniteFlatHopf u2 = transport_structure(base_change(mu2, Base::K), wide, Base::R);
  QMat to_u2 = wide.inverse().value();
  HopfMorphism m2{mu2, u2, to_u2};
  CHECK(check_morphism(m2).all_pass());
  CHECK(entries_in_base(m2.matrix, Base::R, r2));
  PushoutResult p2 = group_pushout(u2, mu2, mu2, m2, m2);
  CHECK(canonical_form(p1.p).hopf == canonical_form(p2.p).hopf);
  CHECK(canonical_form(p2.p).hopf == oort_tate_order2(2, r2));
}

TEST_CASE("lower bound") {
  RingSpec r2(2);
  FiniteFlatHopf mu2 = mu_fixture(2, r2);
  FiniteFlatHopf z2 = constant_fixture(cyclic_group(2), r2);

  SUBCASE("mu2 against Z/2: the lower bound is mu2") {
    PushoutResult res = lower_bound(mu2, z2, mu2_z2_generic_iso(r2));
    CHECK(canonical_form(res.p).hopf == oort_tate_order2(2, r2));
    CHECK(valuation(res.beta.matrix.det(), r2) == Valuation::of(1));
  }
  SUBCASE("swapped orientation goes through the trivial path") {
    // psi: Z/2_K -> mu2_K with coordinate map t -> f0 - f1, which is
    // integral, so the upper bound is Z/2 itself and m is an isomorphism
    GenericHopfMorphism psi{mu2, z2, cols({{1, 1}, {1, -1}})};
    PushoutResult res = lower_bound(z2, mu2, psi);
    CHECK(canonical_form(res.p).hopf == oort_tate_order2(2, r2));
    CHECK(valuation(res.beta.matrix.det(), r2) == Valuation::of(0));
  }
  SUBCASE("identity instance") {
    GenericHopfMorphism psi{mu2, mu2, QMat::identity(2)};
    PushoutResult res = lower_bound(mu2, mu2, psi);
    CHECK(res.p == mu2);
  }
}

TEST_CASE("induced morphisms") {
  RingSpec r2(2);
  FiniteFlatHopf mu2 = mu_fixture(2, r2);
  FiniteFlatHopf z2 = constant_fixture(cyclic_group(2), r2);
  PushoutResult res = lower_bound(mu2, z2, mu2_z2_generic_iso(r2));

  SUBCASE("against itself: the identity") {
    HopfMorphism p = induced_morphism(res, res.p, res.alpha, res.beta);
    CHECK(p.matrix == QMat::identity(res.p.rank()));
  }
  SUBCASE("against Q = mu2 with the canonical square") {
    HopfMorphism u2{mu2, mu2, QMat::identity(2)};
    HopfMorphism v2{mu2, z2, cols({{1, 1}, {1, -1}})};
    HopfMorphism p = induced_morphism(res, mu2, u2, v2);
    CHECK(is_model_map(p));
    CHECK(valuation(p.matrix.det(), r2) == Valuation::of(0));  // an isomorphism
    // p o alpha = u2 and p o beta = v2
    CHECK(res.alpha.matrix * p.matrix == u2.matrix);
    CHECK(res.beta.matrix * p.matrix == v2.matrix);
  }
  SUBCASE("a non-commuting square is rejected") {
    HopfMorphism u2{mu2, mu2, QMat::identity(2)};
    HopfMorphism v2{mu2, z2, cols({{1, 1}, {0, 0}})};  // not even a morphism
    CHECK_THROWS_AS(induced_morphism(res, mu2, u2, v2), ValidationError);
  }
}
