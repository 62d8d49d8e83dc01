#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <limits>
#include <string>

#include "ffgs/errors.hpp"

namespace ffgs {

// Exact rational scalar.  mpq_class keeps values in lowest terms with a
// positive denominator, which is the canonical form used everywhere.
using Rat = mpq_class;

// Where an element lives: R = integers localized at p, K = rationals,
// k = the residue field F_p (entries stored as canonical representatives
// in [0, p)).
enum class Base : std::uint8_t { R, K, k };

std::string to_string(Base b);

// The base ring Z_(p).  The uniformizer is p itself.
class RingSpec {
 public:
  explicit RingSpec(unsigned long p);

  unsigned long p() const { return p_; }
  Rat p_rat() const { return Rat(static_cast<long>(p_)); }

  bool operator==(const RingSpec& o) const { return p_ == o.p_; }

 private:
  unsigned long p_;
};

// p-adic valuation value; +infinity for 0.
class Valuation {
 public:
  static Valuation infinity() { return Valuation(0, true); }
  static Valuation of(long v) { return Valuation(v, false); }

  bool is_infinity() const { return inf_; }
  long value() const;

  bool operator==(const Valuation& o) const = default;
  // +infinity compares above every finite valuation.
  std::strong_ordering operator<=>(const Valuation& o) const;

 private:
  Valuation(long v, bool inf) : v_(v), inf_(inf) {}
  long v_;
  bool inf_;
};

Valuation valuation(const Rat& x, const RingSpec& ring);

// x is an element of R = Z_(p), i.e. its denominator is a unit.
bool in_R(const Rat& x, const RingSpec& ring);

// x lies in the given base: R membership, anything for K, a canonical
// residue representative (an integer in [0, p)) for k.
bool in_base(const Rat& x, Base base, const RingSpec& ring);

// Image of x in F_p as the canonical representative in [0, p).
// Requires in_R(x).
Rat reduce_mod_p(const Rat& x, const RingSpec& ring);

// Identity on R and K; reduction mod p for the residue field.  Used after
// every rational computation on residue-located data.
Rat normalize_in(const Rat& x, Base base, const RingSpec& ring);

Rat pow_p(const RingSpec& ring, long e);

// Parses "a" or "a/b" with optional sign; rejects zero denominators and
// anything else.  This is the only accepted wire format for scalars.
Rat parse_rat(const std::string& text);
std::string rat_to_string(const Rat& x);

// The spec-level scalar: an exact rational tagged with its location.
// Ring membership of R-located values is validated at construction.
class Scalar {
 public:
  static Scalar in_ring(Rat value, const RingSpec& ring);
  static Scalar in_field(Rat value);

  const Rat& value() const { return value_; }
  Base loc() const { return loc_; }

  bool operator==(const Scalar& o) const = default;

 private:
  Scalar(Rat v, Base loc) : value_(std::move(v)), loc_(loc) {}
  friend Scalar operator+(const Scalar&, const Scalar&);
  friend Scalar operator-(const Scalar&, const Scalar&);
  friend Scalar operator*(const Scalar&, const Scalar&);
  Rat value_;
  Base loc_;
};

// Sums, differences and products stay inside R, so the location of the
// result is the join (K absorbs R).
Scalar operator+(const Scalar& a, const Scalar& b);
Scalar operator-(const Scalar& a, const Scalar& b);
Scalar operator*(const Scalar& a, const Scalar& b);
// Division can leave R; the ring is needed to decide where the result
// lives.  Division by zero throws.
Scalar div(const Scalar& a, const Scalar& b, const RingSpec& ring);

}  // namespace ffgs
