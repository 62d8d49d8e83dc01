#include "ffgs/fixtures.hpp"

#include <algorithm>

namespace ffgs {

std::size_t CayleyTable::identity() const {
  for (std::size_t e = 0; e < order(); ++e) {
    bool ok = true;
    for (std::size_t g = 0; g < order(); ++g)
      if (table[e][g] != g || table[g][e] != g) {
        ok = false;
        break;
      }
    if (ok) return e;
  }
  throw ValidationError("cayley table has no identity");
}

std::size_t CayleyTable::inverse(std::size_t g) const {
  std::size_t e = identity();
  for (std::size_t h = 0; h < order(); ++h)
    if (table[g][h] == e && table[h][g] == e) return h;
  throw ValidationError("cayley table: element without inverse");
}

void CayleyTable::validate() const {
  std::size_t n = order();
  if (n == 0) throw ValidationError("empty cayley table");
  for (const auto& row : table) {
    if (row.size() != n) throw ValidationError("cayley table not square");
    for (auto v : row)
      if (v >= n) throw ValidationError("cayley table entry out of range");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw ValidationError("cayley table not associative");
  identity();
  for (std::size_t g = 0; g < n; ++g) inverse(g);
}

bool CayleyTable::abelian() const {
  for (std::size_t a = 0; a < order(); ++a)
    for (std::size_t b = 0; b < a; ++b)
      if (table[a][b] != table[b][a]) return false;
  return true;
}

std::size_t CayleyTable::element_order(std::size_t g) const {
  std::size_t e = identity();
  std::size_t x = g, ord = 1;
  while (x != e) {
    x = table[x][g];
    ++ord;
  }
  return ord;
}

CayleyTable cyclic_group(std::size_t n) {
  CayleyTable t;
  t.table.assign(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t.table[a][b] = (a + b) % n;
  return t;
}

CayleyTable direct_product(const CayleyTable& a, const CayleyTable& b) {
  std::size_t na = a.order(), nb = b.order();
  CayleyTable t;
  t.table.assign(na * nb, std::vector<std::size_t>(na * nb));
  for (std::size_t x1 = 0; x1 < na; ++x1)
    for (std::size_t x2 = 0; x2 < nb; ++x2)
      for (std::size_t y1 = 0; y1 < na; ++y1)
        for (std::size_t y2 = 0; y2 < nb; ++y2)
          t.table[x1 * nb + x2][y1 * nb + y2] = a.table[x1][y1] * nb + b.table[x2][y2];
  return t;
}

CayleyTable symmetric_group_3() {
  // Elements as permutations of {0,1,2} in one-line notation, identity first.
  std::vector<std::array<int, 3>> perms = {
      {0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
  auto find = [&](const std::array<int, 3>& p) {
    for (std::size_t i = 0; i < perms.size(); ++i)
      if (perms[i] == p) return i;
    throw InternalContradiction("s3: composition left the table");
  };
  CayleyTable t;
  t.table.assign(6, std::vector<std::size_t>(6));
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      std::array<int, 3> c{};
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      t.table[a][b] = find(c);
    }
  return t;
}

FiniteFlatHopf trivial_fixture(const RingSpec& ring) {
  return FiniteFlatHopf(Base::R, ring, 1, {Rat(1)}, {Rat(1)}, {Rat(1)}, {Rat(1)},
                        QMat::identity(1));
}

FiniteFlatHopf mu_fixture(std::size_t n, const RingSpec& ring) {
  if (n == 0) throw ValidationError("mu fixture needs n >= 1");
  std::vector<Rat> mult(n * n * n), comult(n * n * n), unit(n), counit(n);
  QMat s(n, n);
  unit[0] = 1;
  for (std::size_t i = 0; i < n; ++i) {
    counit[i] = 1;
    s.at((n - i) % n, i) = 1;
    comult[(i * n + i) * n + i] = 1;
    for (std::size_t j = 0; j < n; ++j) mult[(i * n + j) * n + (i + j) % n] = 1;
  }
  return FiniteFlatHopf(Base::R, ring, n, std::move(mult), std::move(unit), std::move(comult),
                        std::move(counit), std::move(s));
}

FiniteFlatHopf constant_fixture(const CayleyTable& group, const RingSpec& ring) {
  group.validate();
  std::size_t n = group.order();
  std::size_t e = group.identity();
  std::vector<Rat> mult(n * n * n), comult(n * n * n), unit(n), counit(n);
  QMat s(n, n);
  counit[e] = 1;
  for (std::size_t g = 0; g < n; ++g) {
    unit[g] = 1;
    mult[(g * n + g) * n + g] = 1;
    s.at(group.inverse(g), g) = 1;
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) comult[(group.table[a][b] * n + a) * n + b] = 1;
  return FiniteFlatHopf(Base::R, ring, n, std::move(mult), std::move(unit), std::move(comult),
                        std::move(counit), std::move(s));
}

FiniteFlatHopf oort_tate_order2(long a, const RingSpec& ring) {
  if (ring.p() != 2) throw ValidationError("oort_tate_order2 is a p = 2 family");
  if (a != 1 && a != 2) throw ValidationError("oort_tate_order2: a must be 1 or 2");
  std::size_t n = 2;
  std::vector<Rat> mult(8), comult(8), unit{Rat(1), Rat(0)}, counit{Rat(1), Rat(0)};
  auto ix = [n](std::size_t i, std::size_t j, std::size_t k) { return (i * n + j) * n + k; };
  mult[ix(0, 0, 0)] = 1;
  mult[ix(0, 1, 1)] = 1;
  mult[ix(1, 0, 1)] = 1;
  mult[ix(1, 1, 1)] = a;
  comult[ix(0, 0, 0)] = 1;
  comult[ix(1, 1, 0)] = 1;
  comult[ix(1, 0, 1)] = 1;
  comult[ix(1, 1, 1)] = Rat(-2) / Rat(a);
  QMat s = QMat::identity(2);
  return FiniteFlatHopf(Base::R, ring, n, std::move(mult), std::move(unit), std::move(comult),
                        std::move(counit), std::move(s));
}

FiniteFlatHopf fixture_by_name(const std::string& name, const RingSpec& ring) {
  if (name == "trivial") return trivial_fixture(ring);
  if (name == "mu2") return mu_fixture(2, ring);
  if (name == "mu3") return mu_fixture(3, ring);
  if (name == "mu4") return mu_fixture(4, ring);
  if (name == "constant-z2") return constant_fixture(cyclic_group(2), ring);
  if (name == "constant-z3") return constant_fixture(cyclic_group(3), ring);
  if (name == "constant-z4") return constant_fixture(cyclic_group(4), ring);
  if (name == "constant-z2xz2")
    return constant_fixture(direct_product(cyclic_group(2), cyclic_group(2)), ring);
  if (name == "constant-s3") return constant_fixture(symmetric_group_3(), ring);
  if (name == "oort-tate-1") return oort_tate_order2(1, ring);
  if (name == "oort-tate-2") return oort_tate_order2(2, ring);
  throw ValidationError("unknown fixture '" + name + "'");
}

std::vector<std::string> fixture_names() {
  return {"trivial",       "mu2",         "mu3",         "mu4",
          "constant-z2",   "constant-z3", "constant-z4", "constant-z2xz2",
          "constant-s3",   "oort-tate-1", "oort-tate-2"};
}

}  // namespace ffgs
