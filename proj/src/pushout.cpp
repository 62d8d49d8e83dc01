#include "ffgs/pushout.hpp"

#include "ffgs/lattice.hpp"

namespace ffgs {

namespace {

void internal_check(const CheckReport& rep, const std::string& who) {
  if (!rep.all_pass())
    throw InternalContradiction(who + " failed a guaranteed check\n" + rep.to_string());
}

QMat vcat(const QMat& top, const QMat& bottom) {
  return top.transpose().hcat(bottom.transpose()).transpose();
}

QMat inverse_or_throw(const QMat& m, const std::string& who) {
  auto inv = m.inverse();
  if (!inv) throw InternalContradiction(who + ": matrix is not invertible over K");
  return *inv;
}

}  // namespace

UpperBoundResult upper_bound(const FiniteFlatHopf& m_alg, const FiniteFlatHopf& n_alg,
                             const GenericHopfMorphism& psi) {
  if (m_alg.base() != Base::R || n_alg.base() != Base::R)
    throw ValidationError("upper_bound: inputs must live over R");
  if (!m_alg.commutative() || !n_alg.commutative())
    throw ValidationError("upper_bound: coordinate rings must be commutative");
  require_hopf(m_alg, "upper_bound: M");
  require_hopf(n_alg, "upper_bound: N");
  if (!(psi.source == n_alg) || !(psi.target == m_alg))
    throw ValidationError("upper_bound: psi must map alg(N)_K to alg(M)_K");
  CheckReport psi_rep = check_generic_morphism(psi);
  if (!psi_rep.all_pass())
    throw ValidationError("upper_bound: psi is not a generic morphism\n" + psi_rep.to_string());

  const std::size_t nm = m_alg.rank(), nn = n_alg.rank();
  FiniteFlatHopf mk = base_change(m_alg, Base::K);
  QMat seeds(nm, nm * nn);
  for (std::size_t i = 0; i < nm; ++i) {
    std::vector<Rat> ei(nm);
    ei[i] = 1;
    for (std::size_t j = 0; j < nn; ++j)
      seeds.set_col(i * nn + j, mk.product(ei, psi.matrix.col(j)));
  }
  Lattice l = hermite_form(seeds, m_alg.ring());
  if (l.rank() != nm)
    throw InternalContradiction("upper_bound: closure lattice is not generically full");

  FiniteFlatHopf u_alg = transport_structure(mk, l.basis, Base::R);
  QMat winv = inverse_or_throw(l.basis, "upper_bound");
  HopfMorphism to_m{m_alg, u_alg, winv};
  HopfMorphism to_n{n_alg, u_alg, winv * psi.matrix};
  internal_check(check_morphism(to_m), "upper_bound: model-map leg");
  internal_check(check_morphism(to_n), "upper_bound: second leg");
  if (!is_model_map(to_m)) throw InternalContradiction("upper_bound: leg to M lost rank");
  return UpperBoundResult{std::move(u_alg), std::move(to_m), std::move(to_n), l.basis};
}

FlatPushoutResult flat_hopf_pushout(const HopfMorphism& f, const HopfMorphism& g,
                                    const SaturationOptions& opts) {
  if (!(f.source == g.source)) throw ValidationError("flat_hopf_pushout: legs share the apex");
  require_hopf(f.source, "flat_hopf_pushout: A");
  require_hopf(f.target, "flat_hopf_pushout: B");
  require_hopf(g.target, "flat_hopf_pushout: C");
  require_morphism(f, "flat_hopf_pushout: f");
  require_morphism(g, "flat_hopf_pushout: g");
  if (!is_model_map(g))
    throw ValidationError("flat_hopf_pushout: the leg g must be generically an isomorphism");

  const FiniteFlatHopf& b_alg = f.target;
  const RingSpec& ring = b_alg.ring();
  FiniteFlatHopf bk = base_change(b_alg, Base::K);
  QMat phi = f.matrix * inverse_or_throw(g.matrix, "flat_hopf_pushout");

  Lattice l = hermite_form(QMat::identity(b_alg.rank()).hcat(phi), ring);
  std::size_t rounds = 0;
  while (true) {
    if (rounds >= opts.max_iterations)
      throw NonTerminating("flat_hopf_pushout: saturation did not stabilize within " +
                           std::to_string(opts.max_iterations) + " rounds");
    QMat products = l.basis;
    for (std::size_t i = 0; i < l.basis.cols(); ++i)
      for (std::size_t j = 0; j < l.basis.cols(); ++j)
        products = products.hcat(QMat::column(bk.product(l.basis.col(i), l.basis.col(j))));
    Lattice next = hermite_form(products, ring);
    ++rounds;
    if (next == l) break;
    l = next;
  }

  FiniteFlatHopf f_alg = transport_structure(bk, l.basis, Base::R);
  QMat winv = inverse_or_throw(l.basis, "flat_hopf_pushout");
  HopfMorphism from_b{b_alg, f_alg, winv};
  HopfMorphism from_c{g.target, f_alg, winv * phi};
  internal_check(check_morphism(from_b), "flat_hopf_pushout: u");
  internal_check(check_morphism(from_c), "flat_hopf_pushout: v");
  if (!(from_b.matrix * f.matrix == from_c.matrix * g.matrix))
    throw InternalContradiction("flat_hopf_pushout: u o f != v o g");
  return FlatPushoutResult{std::move(f_alg), std::move(from_b), std::move(from_c), l.basis,
                           rounds};
}

PushoutResult group_pushout(const FiniteFlatHopf& u_alg, const FiniteFlatHopf& m_alg,
                            const FiniteFlatHopf& n_alg, const HopfMorphism& m,
                            const HopfMorphism& n, const SaturationOptions& opts) {
  if (!u_alg.commutative() || !m_alg.commutative() || !n_alg.commutative())
    throw ValidationError("group_pushout: coordinate rings must be commutative");
  if (!(m.source == m_alg) || !(m.target == u_alg))
    throw ValidationError("group_pushout: m must be the coordinate map alg(M) -> alg(U)");
  if (!(n.source == n_alg) || !(n.target == u_alg))
    throw ValidationError("group_pushout: n must be the coordinate map alg(N) -> alg(U)");
  require_morphism(m, "group_pushout: m");
  require_morphism(n, "group_pushout: n");
  if (!is_model_map(m))
    throw ValidationError("group_pushout: m must be a model map (generically iso)");

  // Dual side: the preserved leg is the dual of N's algebra.
  HopfMorphism f = dual_morphism(n);  // dual(U-alg) -> dual(N-alg)
  HopfMorphism g = dual_morphism(m);  // dual(U-alg) -> dual(M-alg), generically iso
  FlatPushoutResult fp = flat_hopf_pushout(f, g, opts);

  PushoutResult out{dualize(fp.algebra), dual_morphism(fp.from_C), dual_morphism(fp.from_B),
                    fp.basis, m, n};
  internal_check(check_morphism(out.alpha), "group_pushout: alpha");
  internal_check(check_morphism(out.beta), "group_pushout: beta");
  if (!is_model_map(out.beta))
    throw InternalContradiction("group_pushout: beta is not a model map");
  require_hopf(out.p, "group_pushout: result");
  return out;
}

PushoutResult lower_bound(const FiniteFlatHopf& m_alg, const FiniteFlatHopf& n_alg,
                          const GenericHopfMorphism& psi, const SaturationOptions& opts) {
  UpperBoundResult ub = upper_bound(m_alg, n_alg, psi);
  PushoutResult res = group_pushout(ub.algebra, m_alg, n_alg, ub.to_M, ub.to_N, opts);
  // alpha generically coincides with psi through the model leg beta
  QMat via_beta = res.alpha.matrix * inverse_or_throw(res.beta.matrix, "lower_bound");
  if (!(via_beta == psi.matrix))
    throw InternalContradiction("lower_bound: alpha does not generically coincide with psi");
  return res;
}

HopfMorphism induced_morphism(const PushoutResult& res, const FiniteFlatHopf& q_alg,
                              const HopfMorphism& u2, const HopfMorphism& v2) {
  require_hopf(q_alg, "induced_morphism: Q");
  if (!q_alg.commutative())
    throw ValidationError("induced_morphism: Q must be commutative");
  if (!(u2.source == q_alg) || !(v2.source == q_alg))
    throw ValidationError("induced_morphism: test maps must start from alg(Q)");
  if (!(u2.target == res.leg_m.source) || !(v2.target == res.leg_n.source))
    throw ValidationError("induced_morphism: test maps must land in alg(M) and alg(N)");
  require_morphism(u2, "induced_morphism: u'");
  require_morphism(v2, "induced_morphism: v'");
  if (!(res.leg_m.matrix * u2.matrix == res.leg_n.matrix * v2.matrix))
    throw ValidationError("induced_morphism: the square does not commute over R");

  QMat stacked = vcat(res.alpha.matrix, res.beta.matrix);
  QMat rhs = vcat(u2.matrix, v2.matrix);
  bool unique = false;
  auto x = solve_linear(stacked, rhs, &unique);
  if (!x || !unique)
    throw InternalContradiction("induced_morphism: no unique solution to the dual system");
  if (!entries_in_base(*x, Base::R, q_alg.ring()))
    throw InternalContradiction("induced_morphism: induced matrix leaves R");
  HopfMorphism p{q_alg, res.p, *x};
  internal_check(check_morphism(p), "induced_morphism: result");
  return p;
}

}  // namespace ffgs
