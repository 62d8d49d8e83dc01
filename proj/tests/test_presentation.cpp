#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ffgs/fixtures.hpp"
#include "ffgs/presentation.hpp"

using namespace ffgs;

namespace {

NCPoly power(std::uint32_t g, std::size_t e) {
  Word w(e, g);
  return NCPoly::term(Rat(1), w);
}

// A := R[x]/x^e presented on the single generator x.
Presentation truncated(const RingSpec& ring, const std::string& name, std::size_t e) {
  Presentation p(Base::R, ring);
  p.gens = {name};
  p.relations = {power(0, e)};
  return p;
}

// The free-product pushout of R[y]/y^e <- R[x]/x^e -> R[z]/z^e along
// x -> p^n y and x -> p^m z.
PushoutPresentationResult torsion_pushout(const RingSpec& ring, std::size_t e, long n, long m) {
  Presentation p0 = truncated(ring, "x", e);
  Presentation p1 = truncated(ring, "y", e);
  Presentation p2 = truncated(ring, "z", e);
  std::vector<NCPoly> f{pow_p(ring, n) * NCPoly::generator(0)};
  std::vector<NCPoly> g{pow_p(ring, m) * NCPoly::generator(0)};
  return pushout_presentation(p0, p1, p2, f, g);
}

}  // namespace

TEST_CASE("ncpoly arithmetic and printing") {
  NCPoly p = NCPoly::term(Rat(3), {0}) - NCPoly::term(Rat(9), {1});
  CHECK(ncpoly_to_string(p, {"y", "z"}) == "(3)*y + (-9)*z");
  NCPoly q = NCPoly::term(Rat(1, 2), {0, 1});
  CHECK(ncpoly_to_string(q, {"y", "z"}) == "(1/2)*y.z");
  CHECK((p - p).is_zero());
  NCPoly prod = NCPoly::generator(0) * NCPoly::generator(1);
  CHECK(prod.leading().first == Word{0, 1});
  CHECK(ncpoly_to_string(NCPoly::constant(Rat(2)), {}) == "(2)*1");
}

TEST_CASE("free product") {
  RingSpec r2(2);
  Presentation p1 = truncated(r2, "y", 2);
  Presentation p2 = truncated(r2, "z", 2);
  FreeProductResult fp = free_product(p1, p2);
  CHECK(fp.p.gens == std::vector<std::string>{"y", "z"});
  CHECK(fp.p.relations.size() == 2);
  // unit for the coproduct: the empty presentation changes nothing
  Presentation empty(Base::R, r2);
  FreeProductResult unit = free_product(p1, empty);
  CHECK(unit.p.gens == p1.gens);
  CHECK(unit.p.relations == p1.relations);
  // clashing names are renamed apart
  FreeProductResult clash = free_product(p1, p1);
  CHECK(clash.p.gens == std::vector<std::string>{"y", "y'"});
}

TEST_CASE("pushout presentation reproduces the torsion example") {
  RingSpec r3(3);
  // exponent 3, images x -> 3^n y and x -> 3^m z with n=1, m=2
  PushoutPresentationResult po = torsion_pushout(r3, 3, 1, 2);
  CHECK(po.p.gens == std::vector<std::string>{"y", "z"});
  REQUIRE(po.p.relations.size() == 3);
  CHECK(ncpoly_to_string(po.p.relations[2], po.p.gens) == "(3)*y + (-9)*z");
  // identical identification maps produce only zero relations
  Presentation p1 = truncated(r3, "y", 3);
  auto ident = pushout_presentation(truncated(r3, "x", 3), p1, p1,
                                    {NCPoly::generator(0)}, {NCPoly::generator(0)});
  // f and g land in different copies, so the relation identifies them
  CHECK(ident.p.relations.size() == 3);
  // apex with no generators: plain free product
  Presentation bare(Base::R, r3);
  auto fp = pushout_presentation(bare, p1, p1, {}, {});
  CHECK(fp.p.relations.size() == 2);
  CHECK(fp.dropped_zero_relations == 0);
}

TEST_CASE("tensor presentation commutators") {
  RingSpec r2(2);
  Presentation p1(Base::R, r2), p2(Base::R, r2);
  p1.gens = {"y"};
  p2.gens = {"z"};
  FreeProductResult t = tensor_presentation(p1, p2);
  REQUIRE(t.p.relations.size() == 1);
  CHECK(ncpoly_to_string(t.p.relations[0], t.p.gens) == "(1)*y.z + (-1)*z.y");
}

TEST_CASE("base change of presentations") {
  RingSpec r2(2);
  Presentation p(Base::R, r2);
  p.gens = {"y", "z"};
  p.relations = {Rat(4) * NCPoly::generator(1) - Rat(2) * NCPoly::generator(0)};
  BaseChangeResult res = base_change_presentation(p, Base::k);
  CHECK(res.p.relations.empty());
  CHECK(res.dropped_zero_relations == 1);
  BaseChangeResult tok = base_change_presentation(p, Base::K);
  CHECK(tok.p.relations.size() == 1);
}

TEST_CASE("s4 relations divide by the p-adic content") {
  RingSpec r2(2), r3(3);
  NCPoly s = Rat(4) * NCPoly::generator(1) - Rat(2) * NCPoly::generator(0);
  S4Result out = s4_relations({s}, r2);
  REQUIRE(out.relations.size() == 1);
  CHECK(ncpoly_to_string(out.relations[0], {"y", "z"}) == "(-1)*y + (2)*z");
  // already unit-led: unchanged
  NCPoly t = NCPoly::generator(1) - NCPoly::generator(0);
  CHECK(s4_relations({t}, r2).relations[0] == t);
  // p-adic valuation, not integer gcd: 6z - 2y is unit-led at p=3
  NCPoly u = Rat(6) * NCPoly::generator(1) - Rat(2) * NCPoly::generator(0);
  CHECK(s4_relations({u}, r3).relations[0] == u);
  // all-zero relations are dropped and reported
  S4Result dropped = s4_relations({NCPoly()}, r2);
  CHECK(dropped.relations.empty());
  CHECK(dropped.dropped == 1);
  // nonlinear input is rejected
  CHECK_THROWS_AS(s4_relations({power(0, 2)}, r2), ValidationError);
}

TEST_CASE("normal form") {
  RingSpec r2(2);
  SUBCASE("cube collapses") {
    Presentation p = truncated(r2, "z", 3);
    NormalFormResult nf = normal_form(power(0, 3), p, 3);
    CHECK(nf.poly.is_zero());
    CHECK(nf.complete);
  }
  SUBCASE("single unit-led rewrite") {
    Presentation p(Base::R, r2);
    p.gens = {"y", "z"};
    p.relations = {Rat(2) * NCPoly::generator(1) - NCPoly::generator(0)};
    NormalFormResult nf = normal_form(NCPoly::generator(0), p, 2);
    CHECK(nf.complete);
    CHECK(nf.poly == Rat(2) * NCPoly::generator(1));
  }
  SUBCASE("non-unit leading coefficients block reduction") {
    Presentation p(Base::R, r2);
    p.gens = {"y", "z"};
    p.relations = {Rat(4) * NCPoly::generator(1) - Rat(2) * NCPoly::generator(0)};
    NormalFormResult nf = normal_form(NCPoly::generator(0), p, 2);
    CHECK(!nf.complete);
    CHECK(nf.poly == NCPoly::generator(0));
  }
  SUBCASE("idempotent when complete") {
    Presentation p = truncated(r2, "z", 2);
    NCPoly q = power(0, 3) + NCPoly::generator(0);
    NormalFormResult nf = normal_form(q, p, 3);
    CHECK(nf.complete);
    NormalFormResult again = normal_form(nf.poly, p, 3);
    CHECK(again.poly == nf.poly);
  }
}

TEST_CASE("verify map to model") {
  RingSpec r3(3);
  SUBCASE("torsion pushout maps onto the truncated polynomial model") {
    PushoutPresentationResult po = torsion_pushout(r3, 3, 1, 2);
    S4Result s4 = s4_relations({po.p.relations[2]}, r3);
    Presentation full = po.p;
    full.relations.push_back(s4.relations[0]);
    // model: R[z]/z^3 with basis 1, z, z^2
    std::vector<Rat> mult(27), unit{1, 0, 0}, counit{1, 0, 0};
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        if (i + j < 3) mult[(i * 3 + j) * 3 + i + j] = 1;
    std::vector<Rat> comult(27);
    // only the algebra structure matters here; take the grouplike-free
    // additive coalgebra so that axioms are beside the point
    FiniteFlatHopf model(Base::R, r3, 3, mult, unit, comult, counit, QMat::identity(3));
    std::vector<std::vector<Rat>> images{{0, 3, 0}, {0, 1, 0}};  // y -> 3z, z -> z
    MapVerification v = verify_map_to_model(full, model, images, 9);
    CHECK(v.relations_hold);
    CHECK(v.surjective);
    CHECK(v.reached_rank == 3);
    CHECK(v.ok());
  }
  SUBCASE("zero images fail generation on mu2") {
    RingSpec r2(2);
    FiniteFlatHopf mu2 = mu_fixture(2, r2);
    Presentation p(Base::R, r2);
    p.gens = {"t"};
    p.relations = {power(0, 2) - NCPoly::constant(Rat(1))};
    MapVerification good = verify_map_to_model(p, mu2, {{0, 1}}, 2);
    CHECK(good.ok());
    MapVerification bad = verify_map_to_model(p, mu2, {{0, 0}}, 2);
    CHECK(!bad.surjective);
    CHECK(bad.reached_rank == 1);
  }
}

TEST_CASE("alpha equivalence") {
  RingSpec r2(2);
  Presentation a(Base::R, r2), b(Base::R, r2);
  a.gens = {"y", "z"};
  a.relations = {power(0, 2), Rat(2) * NCPoly::generator(1) - NCPoly::generator(0)};
  // same presentation with the generators swapped
  b.gens = {"u", "v"};
  b.relations = {power(1, 2), Rat(2) * NCPoly::generator(0) - NCPoly::generator(1)};
  CHECK(alpha_equivalent(a, b));
  Presentation c = a;
  c.relations[0] = power(0, 3);
  CHECK(!alpha_equivalent(a, c));
}

TEST_CASE("base-change commutes with the presentation pushout") {
  // both orders on the torsion example, to K and to the residue field
  for (unsigned long prime : {2ul, 3ul, 5ul}) {
    RingSpec ring(prime);
    std::size_t e = prime;
    PushoutPresentationResult po = torsion_pushout(ring, e, 1, 2);
    for (Base target : {Base::K, Base::k}) {
      BaseChangeResult lhs = base_change_presentation(po.p, target);
      // base change the inputs, then push out
      Presentation q0 = base_change_presentation(truncated(ring, "x", e), target).p;
      Presentation q1 = base_change_presentation(truncated(ring, "y", e), target).p;
      Presentation q2 = base_change_presentation(truncated(ring, "z", e), target).p;
      std::vector<NCPoly> f{(pow_p(ring, 1) * NCPoly::generator(0)).mapped(target, ring)};
      std::vector<NCPoly> g{(pow_p(ring, 2) * NCPoly::generator(0)).mapped(target, ring)};
      PushoutPresentationResult rhs = pushout_presentation(q0, q1, q2, f, g);
      CHECK(alpha_equivalent(lhs.p, rhs.p));
    }
  }
}
