#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ffgs/hopf.hpp"

namespace ffgs {

// A finite group as a Cayley table: table[a][b] is the index of a*b.
struct CayleyTable {
  std::vector<std::vector<std::size_t>> table;

  std::size_t order() const { return table.size(); }
  std::size_t identity() const;
  std::size_t inverse(std::size_t g) const;
  // Full group-axiom validation (closure, associativity, identity, inverses).
  void validate() const;
  bool abelian() const;
  std::size_t element_order(std::size_t g) const;
};

CayleyTable cyclic_group(std::size_t n);
CayleyTable direct_product(const CayleyTable& a, const CayleyTable& b);
CayleyTable symmetric_group_3();

// Rank-1 Hopf algebra R.
FiniteFlatHopf trivial_fixture(const RingSpec& ring);

// R[t]/(t^n - 1) with grouplike t: the coordinate ring of mu_n.
FiniteFlatHopf mu_fixture(std::size_t n, const RingSpec& ring);

// Functions on a constant group scheme: idempotent basis e_g, with
// Delta e_g = sum over factorizations of g.
FiniteFlatHopf constant_fixture(const CayleyTable& group, const RingSpec& ring);

// Basis {1, x}, x^2 = a x, Delta x = x(x)1 + 1(x)x - (2/a) x(x)x; p = 2 and
// a in {1, 2}.  a = 1 is the constant group of order 2, a = 2 is mu_2 in
// the coordinates x = 1 - t.
FiniteFlatHopf oort_tate_order2(long a, const RingSpec& ring);

// Names accepted by the CLI: trivial, mu2, mu3, mu4, constant-z2,
// constant-z3, constant-z4, constant-z2xz2, constant-s3, oort-tate-1,
// oort-tate-2.
FiniteFlatHopf fixture_by_name(const std::string& name, const RingSpec& ring);
std::vector<std::string> fixture_names();

}  // namespace ffgs
