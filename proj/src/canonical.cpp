#include "ffgs/canonical.hpp"

#include <algorithm>
#include <functional>

namespace ffgs {

namespace {

std::vector<Rat> solve_coords(const QMat& basis, const std::vector<Rat>& v,
                              const std::string& what) {
  auto x = solve_linear(basis, QMat::column(v));
  if (!x) throw InternalContradiction("transport_structure: " + what + " left the span");
  return x->col(0);
}

}  // namespace

FiniteFlatHopf transport_structure(const FiniteFlatHopf& ambient, const QMat& basis, Base target) {
  const std::size_t r = basis.cols();
  const RingSpec& ring = ambient.ring();
  if (basis.rows() != ambient.rank()) throw ValidationError("transport_structure: bad basis shape");

  std::vector<Rat> mult(r * r * r), comult(r * r * r), unit(r), counit(r);
  QMat antipode(r, r);

  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      auto c = solve_coords(basis, ambient.product(basis.col(i), basis.col(j)), "a product");
      for (std::size_t k = 0; k < r; ++k) mult[(i * r + j) * r + k] = c[k];
    }
  unit = solve_coords(basis, ambient.unit(), "the unit");
  for (std::size_t i = 0; i < r; ++i) {
    QMat d = ambient.comult_of(basis.col(i));
    auto y = solve_linear(basis, d);
    if (!y) throw InternalContradiction("transport_structure: comultiplication left the span");
    auto z = solve_linear(basis, y->transpose());
    if (!z) throw InternalContradiction("transport_structure: comultiplication left the span");
    QMat c = z->transpose();  // d = basis * c * basis^T
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k) comult[(i * r + j) * r + k] = c.at(j, k);
    counit[i] = ambient.counit_of(basis.col(i));
    antipode.set_col(i, solve_coords(basis, ambient.antipode_of(basis.col(i)), "the antipode"));
  }

  FiniteFlatHopf out(target, ring, r, std::move(mult), std::move(unit), std::move(comult),
                     std::move(counit), std::move(antipode));
  CheckReport rep = check_hopf_axioms(out);
  if (!rep.all_pass())
    throw InternalContradiction("transport_structure: transported constants fail axioms\n" +
                                rep.to_string());
  return out;
}

FiniteFlatHopf change_basis(const FiniteFlatHopf& h, const QMat& basis) {
  if (basis.rows() != h.rank() || basis.cols() != h.rank())
    throw ValidationError("change_basis: basis must be square");
  if (basis.det() == 0) throw ValidationError("change_basis: basis is singular");
  return transport_structure(h, basis, h.base());
}

// ---------------------------------------------------------------------------
// Polynomial helpers over Q, coefficients lowest-degree first.

namespace {

using Poly = std::vector<Rat>;

Poly poly_trim(Poly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

Rat poly_eval(const Poly& p, const Rat& x) {
  Rat v(0);
  for (std::size_t i = p.size(); i-- > 0;) v = v * x + p[i];
  return v;
}

// quotient of p by (x - root); requires root to be a root.
Poly poly_deflate(const Poly& p, const Rat& root) {
  Poly q(p.size() - 1);
  Rat carry(0);
  for (std::size_t i = p.size(); i-- > 1;) {
    carry = p[i] + carry * root;
    q[i - 1] = carry;
  }
  return q;
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
  Poly r = poly_trim(a), bb = poly_trim(b);
  if (bb.empty()) throw ValidationError("poly division by zero");
  Poly q(r.size() > bb.size() - 1 ? r.size() - bb.size() + 1 : 0);
  while (r.size() >= bb.size() && !r.empty()) {
    Rat c = r.back() / bb.back();
    std::size_t shift = r.size() - bb.size();
    q[shift] = c;
    for (std::size_t i = 0; i < bb.size(); ++i) r[shift + i] -= c * bb[i];
    r = poly_trim(r);
  }
  return {poly_trim(q), r};
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

// Bezout coefficients for coprime a, b: u*a + v*b = 1.
std::pair<Poly, Poly> poly_bezout(const Poly& a, const Poly& b) {
  Poly r0 = poly_trim(a), r1 = poly_trim(b);
  Poly u0{Rat(1)}, u1{}, v0{}, v1{Rat(1)};
  while (!r1.empty()) {
    auto [q, r] = poly_divmod(r0, r1);
    Poly u2 = u0, v2 = v0;
    Poly qu = poly_mul(q, u1), qv = poly_mul(q, v1);
    u2.resize(std::max(u2.size(), qu.size()));
    v2.resize(std::max(v2.size(), qv.size()));
    for (std::size_t i = 0; i < qu.size(); ++i) u2[i] -= qu[i];
    for (std::size_t i = 0; i < qv.size(); ++i) v2[i] -= qv[i];
    r0 = r1;
    r1 = r;
    u0 = u1;
    u1 = poly_trim(u2);
    v0 = v1;
    v1 = poly_trim(v2);
  }
  if (r0.size() != 1) throw InternalContradiction("poly_bezout: inputs not coprime");
  Rat inv = 1 / r0[0];
  for (auto& c : u0) c *= inv;
  for (auto& c : v0) c *= inv;
  return {u0, v0};
}

std::vector<mpz_class> divisors_of(const mpz_class& n_in) {
  mpz_class n = abs(n_in);
  std::vector<mpz_class> out;
  if (n == 0) return out;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  }
  return out;
}

// Distinct rational roots of p.
std::vector<Rat> rational_roots(const Poly& p_in) {
  Poly p = poly_trim(p_in);
  std::vector<Rat> roots;
  if (p.size() <= 1) return roots;
  // strip zero roots
  std::size_t z = 0;
  while (z < p.size() && p[z] == 0) ++z;
  if (z > 0) {
    roots.push_back(Rat(0));
    p.erase(p.begin(), p.begin() + static_cast<long>(z));
  }
  if (p.size() <= 1) return roots;
  // clear denominators
  mpz_class lcm(1);
  for (const auto& c : p) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
    lcm = lcm / g * c.get_den();
  }
  std::vector<mpz_class> ic(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) ic[i] = mpz_class(p[i] * Rat(lcm));
  for (const auto& num : divisors_of(ic.front()))
    for (const auto& den : divisors_of(ic.back())) {
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      if (g != 1) continue;
      for (int sign : {1, -1}) {
        Rat cand(sign * num, den);
        cand.canonicalize();
        if (poly_eval(p, cand) == 0 &&
            std::find(roots.begin(), roots.end(), cand) == roots.end())
          roots.push_back(cand);
      }
    }
  return roots;
}

// Multiplicity of a root.
std::size_t root_multiplicity(Poly p, const Rat& root) {
  std::size_t m = 0;
  while (p.size() > 1 && poly_eval(p, root) == 0) {
    p = poly_deflate(p, root);
    ++m;
  }
  return m;
}

// Evaluate a polynomial at an algebra element (in coordinates).
std::vector<Rat> poly_eval_in_algebra(const FiniteFlatHopf& h, const Poly& p,
                                      const std::vector<Rat>& a) {
  std::vector<Rat> acc(h.rank());
  std::vector<Rat> one = h.unit();
  for (std::size_t i = p.size(); i-- > 0;) {
    acc = h.product(acc, a);
    for (std::size_t j = 0; j < h.rank(); ++j) acc[j] += p[i] * one[j];
  }
  return acc;
}

struct Splitter {
  const FiniteFlatHopf& h;
  std::vector<std::vector<Rat>> primitive;
  bool failed = false;

  // pi is an idempotent; split the block pi*H or record it as primitive.
  void split(const std::vector<Rat>& pi) {
    if (failed) return;
    const std::size_t n = h.rank();
    QMat block(n, n);
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Rat> ej(n);
      ej[j] = 1;
      block.set_col(j, h.product(pi, ej));
    }
    // column basis of pi*H, greedily by pivot columns
    QMat basis(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
      QMat test = basis.hcat(block.submatrix(0, j, n, 1));
      if (test.rank() == basis.cols() + 1) basis = test;
    }
    const std::size_t m = basis.cols();
    if (m == 0) {
      failed = true;  // zero block: pi was zero, not an idempotent split
      return;
    }
    if (m == 1) {
      primitive.push_back(pi);
      return;
    }
    for (std::size_t g = 0; g < n; ++g) {
      std::vector<Rat> eg(n);
      eg[g] = 1;
      // multiplication by e_g on the block
      QMat images(n, m);
      for (std::size_t j = 0; j < m; ++j) images.set_col(j, h.product(eg, basis.col(j)));
      auto coords = solve_linear(basis, images);
      if (!coords) throw InternalContradiction("idempotent block not an ideal");
      Poly chi = coords->char_poly();
      for (const Rat& lambda : rational_roots(chi)) {
        std::size_t mult = root_multiplicity(chi, lambda);
        if (mult == m) continue;  // no proper split from this eigenvalue
        // chi = (x-lambda)^mult * rest, coprime parts
        Poly f{-lambda, Rat(1)};
        Poly fm{Rat(1)};
        for (std::size_t i = 0; i < mult; ++i) fm = poly_mul(fm, f);
        Poly rest = chi;
        for (std::size_t i = 0; i < mult; ++i) rest = poly_deflate(rest, lambda);
        auto [u, v] = poly_bezout(fm, rest);
        // e = (u*fm)(L) applied inside the algebra: evaluate at e_g, times pi
        Poly ufm = poly_mul(u, fm);
        auto e1 = h.product(poly_eval_in_algebra(h, ufm, eg), pi);
        auto e2 = pi;
        for (std::size_t i = 0; i < n; ++i) e2[i] = pi[i] - e1[i];
        if (h.product(e1, e1) != e1 || h.product(e2, e2) != e2)
          throw InternalContradiction("splitter produced a non-idempotent");
        split(e2);  // the (x-lambda) part is e2 = pi - e1
        split(e1);
        return;
      }
    }
    // no basis operator separates the block: not split over K
    failed = true;
  }
};

}  // namespace

std::optional<std::vector<std::vector<Rat>>> split_idempotents(const FiniteFlatHopf& h) {
  FiniteFlatHopf hk = h.base() == Base::K ? h : base_change(h, Base::K);
  if (!hk.commutative()) return std::nullopt;
  Splitter sp{hk, {}, false};
  sp.split(hk.unit());
  if (sp.failed || sp.primitive.size() != hk.rank()) return std::nullopt;
  // normalize order: lexicographic on coordinates, for determinism
  std::sort(sp.primitive.begin(), sp.primitive.end());
  // sanity: orthogonal, sum to 1
  std::vector<Rat> sum(hk.rank());
  for (const auto& e : sp.primitive)
    for (std::size_t i = 0; i < hk.rank(); ++i) sum[i] += e[i];
  if (sum != hk.unit()) throw InternalContradiction("idempotents do not sum to 1");
  return sp.primitive;
}

std::optional<ConstantStructure> constant_structure(const FiniteFlatHopf& h) {
  auto idem = split_idempotents(h);
  if (!idem) return std::nullopt;
  const std::size_t n = h.rank();
  const RingSpec& ring = h.ring();
  QMat basis(n, n);
  for (std::size_t j = 0; j < n; ++j) basis.set_col(j, (*idem)[j]);
  if (h.base() == Base::R && !entries_in_base(basis, Base::R, ring)) return std::nullopt;

  // Transported comultiplication must be a group law on the idempotents.
  FiniteFlatHopf hk = h.base() == Base::K ? h : base_change(h, Base::K);
  FiniteFlatHopf in_idem = transport_structure(hk, basis, Base::K);
  CayleyTable table;
  table.table.assign(n, std::vector<std::size_t>(n, n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t hits = 0;
      for (std::size_t c = 0; c < n; ++c) {
        const Rat& v = in_idem.comult(c, a, b);
        if (v == 0) continue;
        if (v != 1) return std::nullopt;
        table.table[a][b] = c;
        ++hits;
      }
      if (hits != 1) return std::nullopt;
    }
  try {
    table.validate();
  } catch (const ValidationError&) {
    return std::nullopt;
  }
  return ConstantStructure{std::move(table), std::move(basis)};
}

namespace {

// All chains d_1 | d_2 | ... | d_r with product n, each chain sorted
// ascending.
void divisor_chains(std::size_t n, std::size_t min, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
  if (n == 1) {
    if (!cur.empty()) out.push_back(cur);
    return;
  }
  for (std::size_t d = std::max<std::size_t>(2, min); d <= n; ++d) {
    if (n % d != 0) continue;
    if (!cur.empty() && d % cur.back() != 0) continue;
    cur.push_back(d);
    divisor_chains(n / d, d, cur, out);
    cur.pop_back();
  }
}

bool try_decomposition(const CayleyTable& t, const std::vector<std::size_t>& factors,
                       std::vector<std::size_t>& relabel) {
  std::size_t n = t.order(), r = factors.size();
  std::vector<std::size_t> gens(r);

  // DFS over generator tuples with the required orders.
  std::vector<std::vector<std::size_t>> candidates(r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t g = 0; g < n; ++g)
      if (t.element_order(g) == factors[i]) candidates[i].push_back(g);

  auto expand = [&]() -> bool {
    // enumerate all products g_1^{a_1} ... g_r^{a_r}; direct sum iff all
    // distinct
    std::vector<std::size_t> index_of(n, n);
    std::vector<std::size_t> labels(n, 0);
    std::vector<std::size_t> tuple(r, 0);
    std::size_t count = 0;
    while (true) {
      std::size_t g = t.identity();
      for (std::size_t i = 0; i < r; ++i) {
        std::size_t gi = gens[i];
        for (std::size_t a = 0; a < tuple[i]; ++a) g = t.table[g][gi];
      }
      std::size_t canon = 0;
      for (std::size_t i = 0; i < r; ++i) canon = canon * factors[i] + tuple[i];
      if (index_of[g] != n) return false;
      index_of[g] = canon;
      ++count;
      // increment mixed-radix tuple
      std::size_t i = r;
      while (i-- > 0) {
        if (++tuple[i] < factors[i]) break;
        tuple[i] = 0;
        if (i == 0) {
          if (count != n) return false;
          relabel = index_of;
          return true;
        }
      }
      if (count > n) return false;
    }
  };

  std::function<bool(std::size_t)> dfs = [&](std::size_t i) -> bool {
    if (i == r) return expand();
    for (std::size_t c : candidates[i]) {
      gens[i] = c;
      if (dfs(i + 1)) return true;
    }
    return false;
  };
  return dfs(0);
}

}  // namespace

AbelianType abelian_type(const CayleyTable& t) {
  if (!t.abelian()) throw ValidationError("abelian_type: group is not abelian");
  std::vector<std::vector<std::size_t>> chains;
  std::vector<std::size_t> cur;
  divisor_chains(t.order(), 2, cur, chains);
  if (t.order() == 1) return AbelianType{{}, {0}};
  for (const auto& chain : chains) {
    std::vector<std::size_t> relabel;
    if (try_decomposition(t, chain, relabel)) return AbelianType{chain, relabel};
  }
  throw InternalContradiction("abelian group admits no cyclic decomposition");
}

namespace {

// Oort-Tate shape for a commutative, cocommutative rank-2 object: basis
// {1, x} with x spanning the augmentation ideal, x^2 = c x, and c
// normalized to a power of p (or to 1 over K and k when nonzero).
FiniteFlatHopf rank2_canonical(const FiniteFlatHopf& h) {
  const RingSpec& ring = h.ring();
  // kernel of the counit
  QMat eps(1, 2);
  eps.at(0, 0) = h.counit()[0];
  eps.at(0, 1) = h.counit()[1];
  QMat ker = eps.kernel();
  if (ker.cols() != 1) throw ValidationError("rank2_canonical: counit has no rank-1 kernel");
  std::vector<Rat> y = ker.col(0);
  if (h.base() == Base::R) {
    // scale to content zero, then to a canonical leading unit
    Valuation v0 = valuation(y[0], ring), v1 = valuation(y[1], ring);
    Valuation c = v0 < v1 ? v0 : v1;
    Rat scale = pow_p(ring, -c.value());
    y[0] *= scale;
    y[1] *= scale;
  }
  // x^2 = c x
  std::vector<Rat> y2 = h.product(y, y);
  QMat ymat = QMat::column(y);
  auto alpha = solve_linear(ymat, QMat::column(y2));
  if (!alpha) throw ValidationError("rank2_canonical: augmentation ideal is not stable");
  Rat c = alpha->at(0, 0);
  if (c != 0) {
    Rat target;
    if (h.base() == Base::R)
      target = pow_p(ring, valuation(c, ring).value());
    else
      target = Rat(1);
    Rat u = target / c;  // a unit wherever we are
    for (auto& v : y) v = normalize_in(v * u, h.base(), ring);
  }
  QMat basis(2, 2);
  basis.set_col(0, h.unit());
  basis.set_col(1, y);
  return change_basis(h, basis);
}

}  // namespace

CanonicalResult canonical_form(const FiniteFlatHopf& h) {
  const RingSpec& ring = h.ring();
  if (h.rank() == 1) {
    QMat basis(1, 1);
    basis.at(0, 0) = h.unit()[0];
    return {change_basis(h, basis), true};
  }
  if (!h.commutative() || !h.cocommutative()) return {h, false};
  if (h.rank() == 2) return {rank2_canonical(h), true};

  if (auto cs = constant_structure(h)) {
    AbelianType type = abelian_type(cs->table);
    CayleyTable canon = cyclic_group(type.factors[0]);
    for (std::size_t i = 1; i < type.factors.size(); ++i)
      canon = direct_product(canon, cyclic_group(type.factors[i]));
    FiniteFlatHopf out = constant_fixture(canon, ring);
    return {h.base() == Base::R ? out : base_change(out, h.base()), true};
  }
  FiniteFlatHopf dual = dualize(h);
  if (auto cs = constant_structure(dual)) {
    AbelianType type = abelian_type(cs->table);
    CayleyTable canon = cyclic_group(type.factors[0]);
    for (std::size_t i = 1; i < type.factors.size(); ++i)
      canon = direct_product(canon, cyclic_group(type.factors[i]));
    FiniteFlatHopf out = dualize(constant_fixture(canon, ring));
    return {h.base() == Base::R ? out : base_change(out, h.base()), true};
  }
  return {h, false};
}

bool canonically_equal(const FiniteFlatHopf& a, const FiniteFlatHopf& b) {
  CanonicalResult ca = canonical_form(a), cb = canonical_form(b);
  return ca.canonicalized && cb.canonicalized && ca.hopf == cb.hopf;
}

}  // namespace ffgs
